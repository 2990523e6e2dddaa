#ifndef WBLOWUP_CANONICAL_HPP
#define WBLOWUP_CANONICAL_HPP

#include "wblowup/center.hpp"
#include "wblowup/contact.hpp"
#include "wblowup/local_ideal.hpp"

#include <optional>
#include <vector>

namespace wblowup {

struct CanonicalResult {
  WeightedCenter center;
  Invariant invariant;
  /// Contact element of each level, in the coordinates of that level's ring.
  std::vector<ContactChoice> flag;
  /// e_1, ..., e_n with d_i = e_i / prod_{j<i} (e_j - 1)!; empty when the
  /// factorials involved are too large to form.
  std::optional<std::vector<BigInt>> raw_orders;
};

/// Canonical weighted center of I at the origin and its invariant.
///
/// Unit ideal: trivial center, invariant (0). Zero ideal: empty frame,
/// invariant (inf). Otherwise the maximal contacts flag is built level by
/// level on marked elements (g, w), read as "nu(g) >= w". The ideal itself is
/// {(g, 1)}; a level of order e = min ord(g)/w passes to the contact
/// hypersurface the derivatives d^b g_a of the Taylor coefficients g_a in t
/// with weight w - (a + |b|)/e. For an ideal of order d this is C(I)|_{t=0}
/// with the (d-1)! already divided out, so d_i is the order of level i and no
/// power of an ideal is ever formed.
CanonicalResult canonical_center(const LocalIdeal& ideal);

Invariant mord(const LocalIdeal& ideal);

}  // namespace wblowup

#endif  // WBLOWUP_CANONICAL_HPP
