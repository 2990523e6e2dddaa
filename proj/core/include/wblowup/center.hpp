#ifndef WBLOWUP_CENTER_HPP
#define WBLOWUP_CENTER_HPP

#include "wblowup/linalg.hpp"
#include "wblowup/local_ideal.hpp"
#include "wblowup/polynomial.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace wblowup {

/// One parameter of a frame, written in the inner coordinates z = A^{-1} x:
///   t = z[slot] + num / den
/// where num and den avoid z[slot] and every earlier frame slot, num(0) = 0
/// and den(0) != 0. Almost always den = 1.
struct FrameEntry {
  std::size_t slot = 0;
  Polynomial num;
  Polynomial den;

  bool has_denominator() const { return !den.is_one(); }
  /// num/den as text, "0" when there is no tail.
  std::string tail_string() const;
};

/// Adapted coordinates t_1..t_n completed by the untouched complement slots.
/// The inner coordinates z are related to the ambient ones by x = A z; the
/// entries are triangular in z.
class Frame {
public:
  explicit Frame(Variables vars);
  /// Throws TriangularizationError if the entries are not triangular.
  Frame(Variables vars, LinearChange coords, std::vector<FrameEntry> entries);

  /// Frame whose parameters are the listed ambient variables.
  static Frame coordinate(Variables vars, const std::vector<std::size_t>& slots);

  const Variables& variables() const { return vars_; }
  const LinearChange& coords() const { return coords_; }
  const std::vector<FrameEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::vector<std::size_t> complement() const;

  /// den_i * t_i as a polynomial in the ambient variables (a unit multiple of t_i).
  Polynomial element(std::size_t i) const;
  /// Same, in the inner coordinates z.
  Polynomial inner_element(std::size_t i) const;

  /// Replaces the coordinate change by transport along x = L y: the frame of
  /// the pulled back parameters t_i(L y).
  Frame transported(const LinearChange& l) const;

private:
  Variables vars_;
  LinearChange coords_;
  std::vector<FrameEntry> entries_;
};

/// Substitutes z[slot] = t - num/den in g (t occupying the slot) and clears the
/// unit den^k. The result equals g times a unit, exactly g when den = 1.
Polynomial rewrite_at_entry(const Polynomial& g, const FrameEntry& entry);

/// f expressed in the frame coordinates (t at each frame slot, inner
/// coordinates elsewhere), up to the unit coming from denominators.
Polynomial rewrite_in_frame(const Polynomial& f, const Frame& frame);

/// Multiorder: the trivial (0), or (d_1, ..., d_n, inf).
class Invariant {
public:
  static Invariant trivial();
  /// Throws InternalError unless the entries are positive and nondecreasing.
  static Invariant of(std::vector<Rational> entries);

  bool is_trivial() const { return trivial_; }
  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t length() const { return entries_.size(); }

  /// Entrywise multiple; the trivial invariant stays trivial.
  Invariant scaled(const Rational& factor) const;

  /// e_1 = d_1, e_i = d_i * prod_{j<i} (e_j - 1)!. Empty when a factorial
  /// argument exceeds max_factorial, or an e_i fails to be integral.
  std::optional<std::vector<BigInt>> raw_orders(unsigned long max_factorial = 20000) const;
  /// Membership in the well-ordered set Q_1, or nullopt when undecidable within
  /// the factorial budget.
  std::optional<bool> in_q1(unsigned long max_factorial = 20000) const;

  friend bool operator==(const Invariant& a, const Invariant& b) = default;
  /// Lexicographic with the terminal infinity; (0) below everything.
  friend std::strong_ordering operator<=>(const Invariant& a, const Invariant& b);

  /// "(0)", "(inf)", "(2, 3, inf)".
  std::string to_string() const;

private:
  bool trivial_ = false;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const Invariant& inv);
std::strong_ordering invariant_compare(const Invariant& a, const Invariant& b);

/// Weighted center [t_1^{d_1}, ..., t_n^{d_n}] or the trivial center (whole ring).
class WeightedCenter {
public:
  static WeightedCenter trivial(Variables vars);
  /// Throws InternalError on an exponent/entry count mismatch or
  /// non-monotone exponents.
  WeightedCenter(Frame frame, std::vector<Rational> exponents);

  /// Coordinate center [x_{slot_1}^{d_1}, ...].
  static WeightedCenter coordinate(Variables vars, const std::vector<std::size_t>& slots,
                                   std::vector<Rational> exponents);

  bool is_trivial() const { return trivial_; }
  const Variables& variables() const { return frame_.variables(); }
  const Frame& frame() const { return frame_; }
  const std::vector<Rational>& exponents() const { return exponents_; }
  std::size_t length() const { return exponents_.size(); }

  /// Minimal positive integer N with N / d_i integral for every i (1 for n = 0).
  BigInt n() const;
  /// Integral blowup weights N / d_i.
  std::vector<BigInt> blowup_weights() const;

  Invariant invariant() const;
  WeightedCenter transported(const LinearChange& l) const;

private:
  WeightedCenter(Frame frame, std::vector<Rational> exponents, bool trivial);

  Frame frame_;
  std::vector<Rational> exponents_;
  bool trivial_ = false;
};

/// Generalized Gauss valuation of the center: min over the terms of f written
/// in the frame of sum a_i / d_i. Requires a nontrivial center.
WeightedValue nu(const WeightedCenter& center, const Polynomial& f);

/// I is contained in the center: nu >= 1 on every generator.
bool admissible(const WeightedCenter& center, const LocalIdeal& ideal);

/// Minimal exponent vectors a (indexed by frame position) with sum a_i/d_i >= 1.
std::vector<std::vector<std::uint64_t>> rounding_exponents(const WeightedCenter& center);

/// Largest ordinary ideal in the center, generated by the frame monomials
/// t^a of rounding_exponents mapped back to ambient coordinates, then
/// interreduced (so a coordinate center yields exactly its monomials).
LocalIdeal rounding(const WeightedCenter& center);

/// Equal multiorders and mutual containment of the frame parameters:
/// nu_2(t_1i) >= 1/d_1i and nu_1(t_2i) >= 1/d_2i.
bool center_equal(const WeightedCenter& a, const WeightedCenter& b);

std::string to_string(const WeightedCenter& center);

}  // namespace wblowup

#endif  // WBLOWUP_CENTER_HPP
