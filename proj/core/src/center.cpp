#include "wblowup/center.hpp"

#include "wblowup/errors.hpp"

#include <algorithm>
#include <sstream>

namespace wblowup {

std::string FrameEntry::tail_string() const {
  if (num.is_zero()) return "0";
  if (!has_denominator()) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

Frame::Frame(Variables vars) : vars_(std::move(vars)), coords_(LinearChange::identity(vars_->size())) {}

Frame::Frame(Variables vars, LinearChange coords, std::vector<FrameEntry> entries)
    : vars_(std::move(vars)), coords_(std::move(coords)), entries_(std::move(entries)) {
  const std::size_t n = vars_->size();
  if (coords_.size() != n) throw TriangularizationError("frame coordinate change has the wrong size");
  std::vector<bool> used(n, false);
  for (const auto& e : entries_) {
    if (e.slot >= n || used[e.slot]) throw TriangularizationError("frame slots must be distinct and in range");
    used[e.slot] = true;
    if (!same_variables(e.num.variables(), vars_) || !same_variables(e.den.variables(), vars_)) {
      throw VariableMismatch("frame tail over a different variable list");
    }
    for (std::size_t s = 0; s < n; ++s) {
      if (used[s] && (e.num.involves(s) || e.den.involves(s))) {
        throw TriangularizationError("frame entry for " + (*vars_)[e.slot] + " has tail " + e.tail_string() +
                                     " involving an earlier or its own frame variable");
      }
    }
    if (!e.num.constant_term().is_zero()) {
      throw TriangularizationError("frame tail " + e.tail_string() + " does not vanish at the origin");
    }
    if (e.den.constant_term().is_zero()) {
      throw TriangularizationError("frame denominator " + e.den.to_string() + " vanishes at the origin");
    }
  }
}

Frame Frame::coordinate(Variables vars, const std::vector<std::size_t>& slots) {
  std::vector<FrameEntry> entries;
  for (std::size_t s : slots) {
    entries.push_back({s, Polynomial(vars), Polynomial::constant(vars, 1)});
  }
  const std::size_t n = vars->size();
  return Frame(vars, LinearChange::identity(n), std::move(entries));
}

std::vector<std::size_t> Frame::complement() const {
  std::vector<bool> used(vars_->size(), false);
  for (const auto& e : entries_) used[e.slot] = true;
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < used.size(); ++s) {
    if (!used[s]) out.push_back(s);
  }
  return out;
}

Polynomial Frame::inner_element(std::size_t i) const {
  const auto& e = entries_.at(i);
  return e.den * Polynomial::variable(vars_, e.slot) + e.num;
}

Polynomial Frame::element(std::size_t i) const { return coords_.to_outer(inner_element(i)); }

Frame Frame::transported(const LinearChange& l) const {
  LinearChange moved = coords_.is_identity() ? LinearChange(l.inverse())
                                             : LinearChange(multiply(l.inverse(), coords_.matrix()));
  return Frame(vars_, std::move(moved), entries_);
}

Polynomial rewrite_at_entry(const Polynomial& g, const FrameEntry& entry) {
  if (entry.num.is_zero() && !entry.has_denominator()) return g;
  const auto& vars = g.variables();
  const Polynomial t = Polynomial::variable(vars, entry.slot);
  if (!entry.has_denominator()) return g.substitute_variable(entry.slot, t - entry.num);
  // den^D g(z = (t den - num)/den) = sum_j g_j (t den - num)^j den^(D-j)
  const auto degree = g.degree_in(entry.slot);
  const Polynomial shifted = t * entry.den - entry.num;
  Polynomial out(vars);
  Polynomial shifted_pow = Polynomial::constant(vars, 1);
  for (Monomial::Exponent j = 0; j <= degree; ++j) {
    const Polynomial gj = g.coefficient_in(entry.slot, j);
    if (!gj.is_zero()) out += gj * shifted_pow * entry.den.pow(degree - j);
    if (j < degree) shifted_pow = shifted_pow * shifted;
  }
  return out;
}

Polynomial rewrite_in_frame(const Polynomial& f, const Frame& frame) {
  Polynomial g = frame.coords().to_inner(f);
  for (const auto& e : frame.entries()) g = rewrite_at_entry(g, e);
  return g;
}

Invariant Invariant::trivial() {
  Invariant inv;
  inv.trivial_ = true;
  return inv;
}

Invariant Invariant::of(std::vector<Rational> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].sign() <= 0) throw InternalError("multiorder entries must be positive");
    if (i > 0 && entries[i] < entries[i - 1]) throw InternalError("multiorder entries must be nondecreasing");
  }
  Invariant inv;
  inv.entries_ = std::move(entries);
  return inv;
}

Invariant Invariant::scaled(const Rational& factor) const {
  if (trivial_) return *this;
  std::vector<Rational> e = entries_;
  for (auto& d : e) d *= factor;
  return of(std::move(e));
}

namespace {

enum class RawStatus { ok, not_integral, too_large };

RawStatus compute_raw(const std::vector<Rational>& d, unsigned long max_factorial, std::vector<BigInt>& out) {
  BigInt prod = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Rational e = d[i] * Rational(prod);
    if (!e.is_integer()) return RawStatus::not_integral;
    out.push_back(e.numerator());
    if (i + 1 < d.size()) {
      const BigInt arg = e.numerator() - 1;
      if (arg > max_factorial) return RawStatus::too_large;
      prod *= factorial(arg.get_ui());
    }
  }
  return RawStatus::ok;
}

}  // namespace

std::optional<std::vector<BigInt>> Invariant::raw_orders(unsigned long max_factorial) const {
  std::vector<BigInt> out;
  if (trivial_) return out;
  if (compute_raw(entries_, max_factorial, out) != RawStatus::ok) return std::nullopt;
  return out;
}

std::optional<bool> Invariant::in_q1(unsigned long max_factorial) const {
  if (trivial_) return true;
  std::vector<BigInt> out;
  switch (compute_raw(entries_, max_factorial, out)) {
    case RawStatus::ok:
      return true;
    case RawStatus::not_integral:
      return false;
    case RawStatus::too_large:
      break;
  }
  return std::nullopt;
}

std::strong_ordering operator<=>(const Invariant& a, const Invariant& b) {
  if (a.trivial_ || b.trivial_) return static_cast<int>(!a.trivial_) <=> static_cast<int>(!b.trivial_);
  const std::size_t common = std::min(a.entries_.size(), b.entries_.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (auto c = a.entries_[i] <=> b.entries_[i]; c != 0) return c;
  }
  // The shorter tuple continues with infinity and is therefore larger.
  return b.entries_.size() <=> a.entries_.size();
}

std::strong_ordering invariant_compare(const Invariant& a, const Invariant& b) { return a <=> b; }

std::string Invariant::to_string() const {
  if (trivial_) return "(0)";
  std::string s = "(";
  for (const auto& d : entries_) s += d.to_string() + ", ";
  return s + "inf)";
}

std::ostream& operator<<(std::ostream& os, const Invariant& inv) { return os << inv.to_string(); }

WeightedCenter::WeightedCenter(Frame frame, std::vector<Rational> exponents, bool trivial)
    : frame_(std::move(frame)), exponents_(std::move(exponents)), trivial_(trivial) {}

WeightedCenter WeightedCenter::trivial(Variables vars) { return WeightedCenter(Frame(std::move(vars)), {}, true); }

WeightedCenter::WeightedCenter(Frame frame, std::vector<Rational> exponents)
    : frame_(std::move(frame)), exponents_(std::move(exponents)) {
  if (exponents_.size() != frame_.size()) throw InternalError("center needs one exponent per frame parameter");
  (void)Invariant::of(exponents_);
}

WeightedCenter WeightedCenter::coordinate(Variables vars, const std::vector<std::size_t>& slots,
                                          std::vector<Rational> exponents) {
  return WeightedCenter(Frame::coordinate(std::move(vars), slots), std::move(exponents));
}

BigInt WeightedCenter::n() const {
  BigInt acc = 1;
  for (const auto& d : exponents_) acc = lcm(acc, d.numerator());
  return acc;
}

std::vector<BigInt> WeightedCenter::blowup_weights() const {
  const Rational big_n(n());
  std::vector<BigInt> w;
  for (const auto& d : exponents_) w.push_back((big_n / d).numerator());
  return w;
}

Invariant WeightedCenter::invariant() const {
  if (trivial_) return Invariant::trivial();
  return Invariant::of(exponents_);
}

WeightedCenter WeightedCenter::transported(const LinearChange& l) const {
  if (trivial_) return *this;
  return WeightedCenter(frame_.transported(l), exponents_);
}

WeightedValue nu(const WeightedCenter& center, const Polynomial& f) {
  if (center.is_trivial()) throw ArithmeticError("the valuation of the trivial center is undefined");
  if (!same_variables(center.variables(), f.variables())) throw VariableMismatch("nu: polynomial over another ring");
  if (f.is_zero()) return WeightedValue::infinity();
  std::vector<Rational> weights(f.num_variables(), Rational(0));
  const auto& entries = center.frame().entries();
  for (std::size_t i = 0; i < entries.size(); ++i) weights[entries[i].slot] = Rational(1) / center.exponents()[i];
  return rewrite_in_frame(f, center.frame()).weighted_order(weights);
}

bool admissible(const WeightedCenter& center, const LocalIdeal& ideal) {
  if (center.is_trivial()) return true;
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Polynomial& g) { return nu(center, g) >= WeightedValue(Rational(1)); });
}

namespace {

void enumerate_rounding(const std::vector<Rational>& d, std::size_t i, Rational partial, std::vector<Monomial::Exponent>& a,
                        std::vector<Monomial>& out) {
  const std::size_t n = d.size();
  if (i + 1 == n) {
    const Rational need = (Rational(1) - partial) * d[i];
    a[i] = static_cast<Monomial::Exponent>(need.ceil().get_ui());
    out.emplace_back(a);
    a[i] = 0;
    return;
  }
  const unsigned long bound = d[i].ceil().get_ui();
  for (unsigned long k = 0; k <= bound; ++k) {
    a[i] = static_cast<Monomial::Exponent>(k);
    const Rational s = partial + Rational(static_cast<long>(k)) / d[i];
    if (s >= Rational(1)) {
      out.emplace_back(a);
      break;
    }
    enumerate_rounding(d, i + 1, s, a, out);
  }
  a[i] = 0;
}

}  // namespace

std::vector<std::vector<std::uint64_t>> rounding_exponents(const WeightedCenter& center) {
  std::vector<std::vector<std::uint64_t>> result;
  if (center.is_trivial() || center.length() == 0) return result;
  std::vector<Monomial> candidates;
  std::vector<Monomial::Exponent> a(center.length(), 0);
  enumerate_rounding(center.exponents(), 0, Rational(0), a, candidates);
  for (const auto& m : minimal_monomials(std::move(candidates))) {
    result.emplace_back(m.exponents().begin(), m.exponents().end());
  }
  return result;
}

LocalIdeal rounding(const WeightedCenter& center) {
  const auto& vars = center.variables();
  if (center.is_trivial()) return LocalIdeal::unit(vars);
  if (center.length() == 0) return LocalIdeal::zero(vars);
  const auto exps = rounding_exponents(center);
  std::vector<std::vector<Polynomial>> powers(center.length());
  for (std::size_t i = 0; i < center.length(); ++i) powers[i].push_back(Polynomial::constant(vars, 1));
  std::vector<Polynomial> gens;
  for (const auto& a : exps) {
    Polynomial g = Polynomial::constant(vars, 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      while (powers[i].size() <= a[i]) powers[i].push_back(powers[i].back() * center.frame().element(i));
      if (a[i] > 0) g = g * powers[i][a[i]];
    }
    gens.push_back(std::move(g));
  }
  return interreduce(LocalIdeal(vars, std::move(gens)));
}

bool center_equal(const WeightedCenter& a, const WeightedCenter& b) {
  if (!same_variables(a.variables(), b.variables())) return false;
  if (a.is_trivial() || b.is_trivial()) return a.is_trivial() == b.is_trivial();
  if (a.exponents() != b.exponents()) return false;
  for (std::size_t i = 0; i < a.length(); ++i) {
    const WeightedValue need(Rational(1) / a.exponents()[i]);
    if (nu(b, a.frame().element(i)) < need) return false;
    if (nu(a, b.frame().element(i)) < need) return false;
  }
  return true;
}

std::string to_string(const WeightedCenter& center) {
  if (center.is_trivial()) return "(1)";
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < center.length(); ++i) {
    if (i) os << ", ";
    const Polynomial t = center.frame().element(i);
    const bool bare = t.is_monomial() && t.total_degree() == 1 && t.leading_coefficient().is_one();
    os << (bare ? t.to_string() : "(" + t.to_string() + ")");
    const Rational& d = center.exponents()[i];
    if (!d.is_one()) os << '^' << (d.is_integer() ? d.to_string() : "(" + d.to_string() + ")");
  }
  os << ']';
  return os.str();
}

}  // namespace wblowup
