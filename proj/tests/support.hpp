#ifndef WBLOWUP_TESTS_SUPPORT_HPP
#define WBLOWUP_TESTS_SUPPORT_HPP

#include <wblowup/canonical.hpp>
#include <wblowup/center.hpp>
#include <wblowup/local_ideal.hpp>
#include <wblowup/parse.hpp>
#include <wblowup/polynomial.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace wbtest {

using namespace wblowup;

inline Variables vars_of(std::initializer_list<const char*> names) {
  std::vector<std::string> v(names.begin(), names.end());
  return make_variables(std::move(v));
}

inline Polynomial P(const std::string& text, const Variables& vars) { return parse_polynomial(text, vars); }

inline LocalIdeal I(const std::string& gens, const Variables& vars) {
  std::vector<Polynomial> out;
  for (const auto& g : split_list(gens)) out.push_back(parse_polynomial(g, vars));
  return LocalIdeal(vars, std::move(out));
}

inline Invariant inv(std::initializer_list<long> entries) {
  std::vector<Rational> e;
  for (long v : entries) e.emplace_back(v);
  return Invariant::of(std::move(e));
}

class Random {
public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long bound = 5) {
    long num = integer(-bound, bound);
    long den = integer(1, 3);
    return Rational(num, den);
  }
  Rational nonzero_rational(long bound = 5) {
    Rational r;
    do r = rational(bound);
    while (r.is_zero());
    return r;
  }

  /// Random polynomial with up to `terms` terms of total degree <= deg.
  Polynomial polynomial(const Variables& vars, unsigned deg, unsigned terms, bool allow_constant = true) {
    Polynomial p(vars);
    for (unsigned k = 0; k < terms; ++k) {
      Monomial m(vars->size());
      const long total = integer(allow_constant ? 0 : 1, deg);
      for (long j = 0; j < total; ++j) m[static_cast<std::size_t>(integer(0, static_cast<long>(vars->size()) - 1))] += 1;
      p += Polynomial::term(vars, m, nonzero_rational());
    }
    return p;
  }

  std::vector<Rational> point(std::size_t n, long bound = 4) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(rational(bound));
    return out;
  }

  /// Random invertible matrix with small integer entries.
  RationalMatrix invertible(std::size_t n) {
    while (true) {
      RationalMatrix m(n, std::vector<Rational>(n));
      for (auto& row : m) {
        for (auto& c : row) c = Rational(integer(-3, 3));
      }
      if (reduced_row_echelon(m).pivots.size() == n) return m;
    }
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

/// nu of a coordinate center [x_{slots[i]}^{d_i}] straight from the terms of f.
inline WeightedValue coordinate_nu(const std::vector<std::size_t>& slots, const std::vector<Rational>& d,
                                   const Polynomial& f) {
  if (f.is_zero()) return WeightedValue::infinity();
  std::optional<Rational> best;
  for (const auto& [m, c] : f.terms()) {
    Rational v(0);
    for (std::size_t i = 0; i < slots.size(); ++i) v += Rational(static_cast<long>(m[slots[i]])) / d[i];
    if (!best || v < *best) best = v;
  }
  return *best;
}

/// Exponent vectors a with sum a_i/d_i >= 1 that are minimal for the
/// componentwise order, by exhaustive search in the box a_i <= ceil(d_i).
inline std::vector<std::vector<std::uint64_t>> brute_force_rounding(const std::vector<Rational>& d) {
  const std::size_t n = d.size();
  std::vector<std::uint64_t> bound;
  for (const auto& di : d) bound.push_back(di.ceil().get_ui());
  std::vector<std::vector<std::uint64_t>> hits;
  std::vector<std::uint64_t> a(n, 0);
  while (true) {
    Rational v(0);
    for (std::size_t i = 0; i < n; ++i) v += Rational(static_cast<long>(a[i])) / d[i];
    if (v >= Rational(1)) hits.push_back(a);
    std::size_t k = 0;
    while (k < n && a[k] == bound[k]) a[k++] = 0;
    if (k == n) break;
    ++a[k];
  }
  std::vector<std::vector<std::uint64_t>> minimal;
  for (const auto& h : hits) {
    bool dominated = false;
    for (const auto& g : hits) {
      if (g == h) continue;
      bool le = true;
      for (std::size_t i = 0; i < n; ++i) le = le && g[i] <= h[i];
      if (le) dominated = true;
    }
    if (!dominated) minimal.push_back(h);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

/// Evaluates a polynomial fraction image list at a point.
inline std::vector<Rational> evaluate_all(const std::vector<Polynomial>& ps, const std::vector<Rational>& at) {
  std::vector<Rational> out;
  for (const auto& p : ps) out.push_back(p.evaluate(at));
  return out;
}

}  // namespace wbtest

#endif  // WBLOWUP_TESTS_SUPPORT_HPP
