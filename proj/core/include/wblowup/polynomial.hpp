#ifndef WBLOWUP_POLYNOMIAL_HPP
#define WBLOWUP_POLYNOMIAL_HPP

#include "wblowup/monomial.hpp"
#include "wblowup/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wblowup {

/// Ordered, immutable list of variable names shared by every polynomial of a ring.
class VariableList {
public:
  explicit VariableList(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a name, or size() if absent.
  std::size_t index_of(const std::string& name) const;

  friend bool operator==(const VariableList& a, const VariableList& b) { return a.names_ == b.names_; }

private:
  std::vector<std::string> names_;
};

using Variables = std::shared_ptr<const VariableList>;

Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& a, const Variables& b);

/// Sparse multivariate polynomial with exact rational coefficients. Terms are
/// kept in descending graded lexicographic order and never carry a zero
/// coefficient.
class Polynomial {
public:
  using Terms = std::map<Monomial, Rational, GrlexDescending>;

  /// Zero polynomial over the empty variable list.
  Polynomial();
  explicit Polynomial(Variables vars);
  Polynomial(Variables vars, Terms terms);

  static Polynomial constant(Variables vars, const Rational& c);
  static Polynomial variable(Variables vars, std::size_t var);
  static Polynomial term(Variables vars, Monomial m, const Rational& c = Rational(1));

  const Variables& variables() const { return vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Single term (including nonzero constants).
  bool is_monomial() const { return terms_.size() == 1; }

  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Greatest term in grlex; requires nonzero.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  std::uint64_t total_degree() const;
  Monomial::Exponent degree_in(std::size_t var) const;
  /// Smallest exponent of var over all terms (0 for the zero polynomial).
  Monomial::Exponent min_exponent(std::size_t var) const;
  /// True if any term involves var.
  bool involves(std::size_t var) const;
  /// Coefficient of var^k, a polynomial free of var.
  Polynomial coefficient_in(std::size_t var, Monomial::Exponent k) const;

  /// Minimal total degree of a term; infinite for zero.
  Order order() const;
  /// Minimum of sum(a_i w_i) over terms; infinite for zero.
  WeightedValue weighted_order(std::span<const Rational> weights) const;

  Polynomial partial(std::size_t var) const;
  /// Iterated partial derivative by a multi-index.
  Polynomial partial(const Monomial& multi_index) const;

  /// Ring homomorphism sending variable i to images[i]. All images must share a
  /// variable list, which becomes the variable list of the result.
  Polynomial substitute(std::span<const Polynomial> images) const;
  /// Replaces one variable by a polynomial over the same variables.
  Polynomial substitute_variable(std::size_t var, const Polynomial& image) const;
  /// p(x + point).
  Polynomial translate(std::span<const Rational> point) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Exact division by var^k; throws ArithmeticError if some term has a smaller exponent.
  Polynomial divide_by_variable_power(std::size_t var, Monomial::Exponent k) const;
  /// Exact division by a monomial; throws ArithmeticError if not divisible.
  Polynomial divide_by_monomial(const Monomial& m) const;
  /// Quotient by d when d divides this polynomial, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  /// Same terms over a renamed variable list of equal length.
  Polynomial with_variables(Variables vars) const;
  /// Scaled so that the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;
  Polynomial pow(unsigned long k) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used for canonical generator lists: compares term sequences in
  /// ascending grlex of their leading parts, then coefficients.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;
  std::size_t hash() const;

private:
  void check_same_ring(const Polynomial& o) const;

  Variables vars_;
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);
bool canonical_less(const Polynomial& a, const Polynomial& b);

// Free-function spellings of the core operations.
Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned long k);
Polynomial partial(const Polynomial& p, std::size_t var);
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images);
Order ord_at_origin(const Polynomial& p);
WeightedValue weighted_order(const Polynomial& p, std::span<const Rational> weights);
Polynomial translate(const Polynomial& p, std::span<const Rational> point);

/// Rational roots of a polynomial that involves at most the given variable.
/// Returned sorted ascending without multiplicity; the zero polynomial has none.
/// Integer coefficients larger than `max_coefficient` in absolute value make the
/// search give up (returns std::nullopt).
std::optional<std::vector<Rational>> rational_roots(const Polynomial& p, std::size_t var,
                                                    const BigInt& max_coefficient = BigInt("1000000000000"));

}  // namespace wblowup

#endif  // WBLOWUP_POLYNOMIAL_HPP
