#include "wblowup/polynomial.hpp"

#include "wblowup/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wblowup {

VariableList::VariableList(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) throw ParseError("duplicate variable '" + names_[i] + "'");
    }
  }
}

std::size_t VariableList::index_of(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

Variables make_variables(std::vector<std::string> names) {
  return std::make_shared<const VariableList>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  return a == b || (a && b && *a == *b);
}

Polynomial::Polynomial() {
  static const Variables empty = make_variables({});
  vars_ = empty;
}

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {
  if (!vars_) throw VariableMismatch("polynomial without variable list");
}

Polynomial::Polynomial(Variables vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!vars_) throw VariableMismatch("polynomial without variable list");
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
  for (const auto& [m, c] : terms_) {
    if (m.size() != vars_->size()) throw VariableMismatch("monomial length does not match variable count");
  }
}

Polynomial Polynomial::constant(Variables vars, const Rational& c) {
  const std::size_t n = vars->size();
  return term(std::move(vars), Monomial(n), c);
}

Polynomial Polynomial::variable(Variables vars, std::size_t var) {
  const std::size_t n = vars->size();
  if (var >= n) throw VariableMismatch("variable index out of range");
  return term(std::move(vars), Monomial::unit_vector(n, var), Rational(1));
}

Polynomial Polynomial::term(Variables vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.num_variables()) throw VariableMismatch("monomial length does not match variable count");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second.is_one(); }

Rational Polynomial::constant_term() const {
  if (terms_.empty()) return Rational(0);
  // The constant monomial is the smallest in grlex, hence last.
  const auto& last = *terms_.rbegin();
  return last.first.is_one() ? last.second : Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw ArithmeticError("leading monomial of zero polynomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw ArithmeticError("leading coefficient of zero polynomial");
  return terms_.begin()->second;
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

Monomial::Exponent Polynomial::degree_in(std::size_t var) const {
  Monomial::Exponent d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

Monomial::Exponent Polynomial::min_exponent(std::size_t var) const {
  if (terms_.empty()) return 0;
  Monomial::Exponent d = terms_.begin()->first[var];
  for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& kv) { return kv.first[var] != 0; });
}

Polynomial Polynomial::coefficient_in(std::size_t var, Monomial::Exponent k) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == k) {
      Monomial q = m;
      q[var] = 0;
      r.terms_.emplace(std::move(q), c);
    }
  }
  return r;
}

Order Polynomial::order() const {
  if (terms_.empty()) return Order::infinity();
  // Descending grlex: the last term has the minimal total degree.
  return Order(terms_.rbegin()->first.total_degree());
}

WeightedValue Polynomial::weighted_order(std::span<const Rational> weights) const {
  if (weights.size() != num_variables()) throw VariableMismatch("weight vector length mismatch");
  WeightedValue best = WeightedValue::infinity();
  for (const auto& [m, c] : terms_) {
    Rational v(0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0 && !weights[i].is_zero()) v += weights[i] * Rational(static_cast<long>(m[i]));
    }
    if (best.is_infinite() || v < best.value()) best = WeightedValue(v);
  }
  return best;
}

Polynomial Polynomial::partial(std::size_t var) const {
  if (var >= num_variables()) throw VariableMismatch("variable index out of range");
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial q = m;
    q[var] -= 1;
    r.terms_.emplace(std::move(q), c * Rational(static_cast<long>(m[var])));
  }
  return r;
}

Polynomial Polynomial::partial(const Monomial& multi_index) const {
  if (multi_index.size() != num_variables()) throw VariableMismatch("multi-index length mismatch");
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (!multi_index.divides(m)) continue;
    Rational coeff = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (Monomial::Exponent k = 0; k < multi_index[i]; ++k) coeff *= Rational(static_cast<long>(m[i] - k));
    }
    r.terms_.emplace(multi_index.quotient_of(m), coeff);
  }
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != num_variables()) throw VariableMismatch("substitution needs one image per variable");
  if (images.empty()) {
    throw VariableMismatch("substitution from an empty ring needs a target ring");
  }
  const Variables& target = images.front().variables();
  for (const auto& img : images) {
    if (!same_variables(img.variables(), target)) throw VariableMismatch("substitution images over different rings");
  }
  // powers[i][k] = images[i]^k, filled lazily.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, Monomial::Exponent k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };
  Polynomial result(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) t = t * power(i, m[i]);
    }
    result += t;
  }
  return result;
}

Polynomial Polynomial::substitute_variable(std::size_t var, const Polynomial& image) const {
  check_same_ring(image);
  std::vector<Polynomial> images;
  images.reserve(num_variables());
  for (std::size_t i = 0; i < num_variables(); ++i) {
    images.push_back(i == var ? image : Polynomial::variable(vars_, i));
  }
  return substitute(images);
}

Polynomial Polynomial::translate(std::span<const Rational> point) const {
  if (point.size() != num_variables()) throw VariableMismatch("point length does not match variable count");
  if (std::all_of(point.begin(), point.end(), [](const Rational& r) { return r.is_zero(); })) return *this;
  std::vector<Polynomial> images;
  images.reserve(num_variables());
  for (std::size_t i = 0; i < num_variables(); ++i) {
    images.push_back(Polynomial::variable(vars_, i) + Polynomial::constant(vars_, point[i]));
  }
  return substitute(images);
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_variables()) throw VariableMismatch("point length does not match variable count");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i) {
      if (m[i] != 0) t *= point[i].pow(m[i]);
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::divide_by_variable_power(std::size_t var, Monomial::Exponent k) const {
  return divide_by_monomial(Monomial::unit_vector(num_variables(), var, k));
}

Polynomial Polynomial::divide_by_monomial(const Monomial& d) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (!d.divides(m)) throw ArithmeticError("inexact monomial division of " + to_string());
    r.terms_.emplace(d.quotient_of(m), c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  check_same_ring(d);
  if (d.is_zero()) throw ArithmeticError("division by the zero polynomial");
  Polynomial q(vars_);
  Polynomial r = *this;
  const Monomial& lm = d.leading_monomial();
  const Rational lc = d.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& top = r.leading_monomial();
    if (!lm.divides(top)) return std::nullopt;
    const Polynomial step = Polynomial::term(vars_, lm.quotient_of(top), r.leading_coefficient() / lc);
    q += step;
    r -= step * d;
  }
  return q;
}

Polynomial Polynomial::with_variables(Variables vars) const {
  if (vars->size() != num_variables()) throw VariableMismatch("renaming must keep the variable count");
  return Polynomial(std::move(vars), terms_);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || leading_coefficient().is_one()) return *this;
  const Rational inv = Rational(1) / leading_coefficient();
  return *this * inv;
}

Polynomial Polynomial::pow(unsigned long k) const {
  Polynomial result = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
  if (!same_variables(vars_, o.vars_)) throw VariableMismatch("operands over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same_ring(o);
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      auto [it, inserted] = r.terms_.try_emplace(std::move(m), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  // Compare from the lowest-degree end so that low-order generators sort first.
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.rend() && ib != b.terms_.rend();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.is_one();
    bool wrote = false;
    if (constant || !mag.is_one()) {
      os << mag.to_string();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << '*';
      os << (*vars_)[i];
      if (m[i] > 1) os << '^' << m[i];
      wrote = true;
    }
  }
  return os.str();
}

std::size_t Polynomial::hash() const {
  std::size_t h = 0;
  for (const auto& [m, c] : terms_) h = h * 31 + (m.hash() ^ (c.hash() << 1));
  return h;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial pow(const Polynomial& p, unsigned long k) { return p.pow(k); }
Polynomial partial(const Polynomial& p, std::size_t var) { return p.partial(var); }
Polynomial substitute(const Polynomial& p, std::span<const Polynomial> images) { return p.substitute(images); }
Order ord_at_origin(const Polynomial& p) { return p.order(); }
WeightedValue weighted_order(const Polynomial& p, std::span<const Rational> weights) {
  return p.weighted_order(weights);
}
Polynomial translate(const Polynomial& p, std::span<const Rational> point) { return p.translate(point); }

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const Polynomial& p, std::size_t var,
                                                    const BigInt& max_coefficient) {
  std::vector<Rational> roots;
  if (p.is_zero()) return roots;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != var && m[i] != 0) throw VariableMismatch("rational_roots expects a univariate polynomial");
    }
  }
  const auto low = p.min_exponent(var);
  const auto high = p.degree_in(var);
  if (low > 0) roots.emplace_back(0);
  if (high == low) return roots;

  // Dense integer coefficients of p / var^low.
  BigInt den_lcm = 1;
  for (const auto& [m, c] : p.terms()) den_lcm = lcm(den_lcm, c.denominator());
  std::vector<BigInt> coeffs(high - low + 1, BigInt(0));
  for (const auto& [m, c] : p.terms()) {
    const Rational scaled = c * Rational(den_lcm);
    coeffs[m[var] - low] = scaled.numerator();
  }
  const BigInt& a0 = coeffs.front();
  const BigInt& an = coeffs.back();
  if (abs(a0) > max_coefficient || abs(an) > max_coefficient) return std::nullopt;

  auto value_at = [&](const Rational& x) {
    Rational acc(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  };
  for (const auto& num : positive_divisors(a0)) {
    for (const auto& den : positive_divisors(an)) {
      if (gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        const Rational candidate(BigInt(num * sign), den);
        if (value_at(candidate).is_zero()) roots.push_back(candidate);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace wblowup
