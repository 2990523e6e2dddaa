#ifndef WBLOWUP_CONTACT_HPP
#define WBLOWUP_CONTACT_HPP

#include "wblowup/center.hpp"
#include "wblowup/linalg.hpp"
#include "wblowup/local_ideal.hpp"

#include <string>

namespace wblowup {

/// A maximal contact element at the origin together with its triangular form.
///
/// The entry is written in the coordinates z of `coords` (x = S z). S is the
/// identity unless the element only becomes triangular after a linear shear.
struct ContactChoice {
  /// den * t in the coordinates of the ideal; a unit multiple of `source`
  /// near the origin.
  Polynomial element;
  /// The derivative generator of D^{<=d-1}(I) it came from.
  Polynomial source;
  /// Index of the generator of I that was differentiated.
  std::size_t source_index = 0;
  /// Multi-index of the derivative.
  Monomial derivative;
  LinearChange coords;
  FrameEntry entry;
  /// How the element was brought into triangular form: "coordinate",
  /// "divisible", "shear", "affine", "linear", "isotropic" or "span".
  std::string method;
};

/// First order-one element of D^{<=d-1}(I), d = ord(I), normalized into a frame
/// entry. Candidates are the (d-1)-th partials of the order-d generators, in
/// generator order and then descending lexicographic multi-index order.
/// Throws ArithmeticError unless 0 < d < infinity and TriangularizationError
/// when no candidate admits an exact triangular form.
ContactChoice find_maximal_contact(const LocalIdeal& ideal);

/// Same with the order already known.
ContactChoice find_maximal_contact(const LocalIdeal& ideal, std::uint64_t order);

/// Generators rewritten with t as a coordinate, then t = 0. The result lives
/// in the ring without the contact slot (named after the remaining inner
/// coordinates).
LocalIdeal restrict_to_contact(const LocalIdeal& ideal, const ContactChoice& contact);

}  // namespace wblowup

#endif  // WBLOWUP_CONTACT_HPP
