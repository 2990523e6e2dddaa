#ifndef WBLOWUP_LOCAL_IDEAL_HPP
#define WBLOWUP_LOCAL_IDEAL_HPP

#include "wblowup/polynomial.hpp"

#include <vector>

namespace wblowup {

/// Ideal of a polynomial ring given by a finite generator list, studied at the
/// origin. Callers translate a marked point to the origin first.
///
/// Construction canonicalizes the list: zero generators are dropped, each
/// generator is made monic, duplicates and generators that are monomial
/// multiples of other generators are removed, and the survivors are sorted.
/// All of these reductions preserve the ideal of the polynomial ring (not only
/// its localization), so transforms stay valid away from the origin. The zero
/// ideal is the single generator 0; a nonzero constant collapses the list to 1.
class LocalIdeal {
public:
  /// Zero ideal over the empty variable list.
  LocalIdeal();
  explicit LocalIdeal(Variables vars);  // zero ideal
  LocalIdeal(Variables vars, std::vector<Polynomial> generators);
  explicit LocalIdeal(const Polynomial& generator);

  static LocalIdeal zero(Variables vars) { return LocalIdeal(std::move(vars)); }
  static LocalIdeal unit(Variables vars);

  const Variables& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  const std::vector<Polynomial>& generators() const& { return gens_; }
  std::vector<Polynomial> generators() && { return std::move(gens_); }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const;
  /// Some generator has a nonzero constant term, i.e. the ideal is the whole
  /// local ring at the origin.
  bool is_unit() const;
  /// Every generator is a single term.
  bool is_monomial() const;

  Order order() const;
  std::uint64_t max_degree() const;

  /// Same generators read over another variable list of equal length.
  LocalIdeal with_variables(Variables vars) const;

  friend bool operator==(const LocalIdeal& a, const LocalIdeal& b) { return a.gens_ == b.gens_; }

  std::string to_string() const;

private:
  Variables vars_;
  std::vector<Polynomial> gens_;
};

std::ostream& operator<<(std::ostream& os, const LocalIdeal& ideal);

Order ord(const LocalIdeal& ideal);
bool is_unit(const LocalIdeal& ideal);

/// D^{<=i}(I): generators together with all their partial derivatives of
/// total order at most i.
LocalIdeal derivative_ideal(const LocalIdeal& ideal, unsigned i);

/// Smallest d with D^{<=d}(I) a unit ideal, searched up to 1 + the maximal
/// generator degree; infinite exactly for the zero ideal.
Order ord_via_derivations(const LocalIdeal& ideal);

/// C(I) = sum over i < d of (D^{<=i} I)^{d!/(d-i)} with d = ord(I). Requires
/// 0 < d < infinity; throws ResourceLimitError when the powers get too large.
LocalIdeal coefficient_ideal(const LocalIdeal& ideal);

LocalIdeal sum(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal product(const LocalIdeal& a, const LocalIdeal& b);
LocalIdeal power(const LocalIdeal& ideal, unsigned long k);

/// Sets var = 0 and drops it from the variable list.
LocalIdeal restrict(const LocalIdeal& ideal, std::size_t var);

/// Polynomial with variable var removed (the caller guarantees it does not occur).
Polynomial drop_variable(const Polynomial& p, std::size_t var, const Variables& smaller);
Variables without_variable(const Variables& vars, std::size_t var);

/// Basis of the rational span of the generators in reduced row echelon form
/// (pivots on leading monomials). Same ideal, usually fewer generators.
LocalIdeal interreduce(const LocalIdeal& ideal);

/// Generator-count budget for sums, products and powers.
inline constexpr std::size_t kMaxGenerators = 200000;

}  // namespace wblowup

#endif  // WBLOWUP_LOCAL_IDEAL_HPP
