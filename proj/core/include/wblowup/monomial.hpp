#ifndef WBLOWUP_MONOMIAL_HPP
#define WBLOWUP_MONOMIAL_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace wblowup {

/// Exponent vector, one entry per ambient variable.
class Monomial {
public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial unit_vector(std::size_t nvars, std::size_t var, Exponent k = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t total_degree() const;
  bool is_one() const;

  /// True when every exponent of this is <= the matching exponent of other.
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other); returns other / this.
  Monomial quotient_of(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded lexicographic order: total degree first, then lexicographic with
  /// the first variable most significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::size_t hash() const;

private:
  std::vector<Exponent> exps_;
};

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Keeps only the divisibility-minimal monomials, sorted ascending in grlex.
std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials);

}  // namespace wblowup

#endif  // WBLOWUP_MONOMIAL_HPP
