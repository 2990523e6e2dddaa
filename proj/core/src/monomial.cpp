#include "wblowup/monomial.hpp"

#include "wblowup/errors.hpp"

#include <algorithm>
#include <limits>

namespace wblowup {

Monomial Monomial::unit_vector(std::size_t nvars, std::size_t var, Exponent k) {
  Monomial m(nvars);
  m.exps_.at(var) = k;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    const std::uint64_t e = std::uint64_t{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<std::int32_t>::max()) {
      throw ResourceLimitError("monomial exponent overflow");
    }
    r.exps_[i] = static_cast<Exponent>(e);
  }
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r(other);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= exps_[i];
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da <=> db;
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<Monomial> minimal_monomials(std::vector<Monomial> monomials) {
  // Ascending grlex puts every divisor before its multiples.
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  return kept;
}

}  // namespace wblowup
