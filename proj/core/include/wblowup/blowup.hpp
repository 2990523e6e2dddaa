#ifndef WBLOWUP_BLOWUP_HPP
#define WBLOWUP_BLOWUP_HPP

#include "wblowup/center.hpp"
#include "wblowup/local_ideal.hpp"

#include <string>
#include <vector>

namespace wblowup {

/// Polynomial quotient num/den with den(0) != 0.
struct PolynomialFraction {
  Polynomial num;
  Polynomial den;

  bool is_polynomial() const { return den.is_one(); }
  std::string to_string() const;
};

/// One affine chart of the canonical weighted blowup of a center.
///
/// Chart i inverts the i-th frame parameter: t_i = s^{w_i} and
/// t_j = t'_j s^{w_j} for j != i, where w_j = N / d_j. Frame tails and the
/// frame's linear change are unwound so that every parent variable has an
/// exact image. The chart ring is the smooth cover of the weighted chart; the
/// group mu_{w_i} acts by s -> zeta s, t'_j -> zeta^{-w_j} t'_j, recorded in
/// mu_weights (residues mod mu_order).
struct Chart {
  std::string id;
  std::string parent;
  std::size_t index = 0;
  /// Name of the inverted parameter's slot in the parent ring.
  std::string parameter;
  Variables parent_variables;
  Variables variables;
  /// Image of every parent variable, in chart variables.
  std::vector<PolynomialFraction> substitution;
  std::size_t exceptional = 0;
  /// Chart slots of the frame parameters, the exceptional slot included. The
  /// fiber over the blown-up point is s = 0 with every other slot zero.
  std::vector<std::size_t> frame_slots;
  BigInt n;
  /// w_j = N / d_j for every frame parameter.
  std::vector<BigInt> weights;
  BigInt mu_order;
  std::vector<BigInt> mu_weights;
  /// Non-constant denominators of the substitution; the chart is only used
  /// where they do not vanish.
  std::vector<Polynomial> unit_factors;

  const std::string& exceptional_name() const { return (*variables)[exceptional]; }
};

struct TransformedIdeal {
  LocalIdeal ideal;
  /// Power of s divided out of every generator (N).
  BigInt exceptional_multiplicity;
};

/// Pullback of a parent polynomial to the chart, as a fraction with a unit
/// denominator (1 whenever the frame has no denominators).
PolynomialFraction pullback(const Polynomial& f, const Chart& chart);

/// Exact power of s dividing the pullback numerator (infinite for 0).
Order exceptional_order(const Polynomial& f, const Chart& chart);

/// One chart per frame parameter. Requires a nontrivial center with at least
/// one parameter; chart ids are parent_id + "/" + parameter name.
std::vector<Chart> canonical_blowup(const WeightedCenter& center, const std::string& parent_id = "root");

/// Pullback divided by s^N. Throws AdmissibilityError if some pullback is not
/// divisible by s^N.
TransformedIdeal transform(const LocalIdeal& ideal, const Chart& chart);

/// Pullback with the maximal power of s removed. Requires f != 0.
Polynomial strict_transform_hypersurface(const Polynomial& f, const Chart& chart);

/// Weight of every term of p under the chart's mu action, if p is homogeneous.
std::optional<BigInt> mu_weight(const Polynomial& p, const Chart& chart);

}  // namespace wblowup

#endif  // WBLOWUP_BLOWUP_HPP
