#include "wblowup/local_ideal.hpp"

#include "wblowup/errors.hpp"
#include "wblowup/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

namespace wblowup {

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& divisors) {
  return std::any_of(divisors.begin(), divisors.end(), [&](const Monomial& d) { return d.divides(m); });
}

// g == c * m * h for some monomial m and scalar c.
bool is_monomial_multiple(const Polynomial& g, const Polynomial& h) {
  if (g.size() != h.size() || !h.leading_monomial().divides(g.leading_monomial())) return false;
  const Monomial m = h.leading_monomial().quotient_of(g.leading_monomial());
  auto gi = g.terms().begin();
  for (const auto& [mono, coeff] : h.terms()) {
    if (gi->first != mono * m || gi->second != coeff) return false;
    ++gi;
  }
  return true;
}

std::vector<Polynomial> canonicalize(const Variables& vars, std::vector<Polynomial> input) {
  std::vector<Monomial> monomials;
  std::vector<Polynomial> others;
  for (auto& g : input) {
    if (g.is_zero()) continue;
    if (!same_variables(g.variables(), vars)) throw VariableMismatch("generator over a different variable list");
    if (g.is_constant()) return {Polynomial::constant(vars, 1)};
    if (g.is_monomial()) {
      monomials.push_back(g.leading_monomial());
    } else {
      others.push_back(g.monic());
    }
  }
  if (monomials.empty() && others.empty()) return {Polynomial(vars)};

  monomials = minimal_monomials(std::move(monomials));
  std::erase_if(others, [&](const Polynomial& g) {
    return std::all_of(g.terms().begin(), g.terms().end(),
                       [&](const auto& term) { return divisible_by_any(term.first, monomials); });
  });
  std::sort(others.begin(), others.end(), canonical_less);
  others.erase(std::unique(others.begin(), others.end()), others.end());

  if (others.size() <= 2000) {
    std::vector<bool> redundant(others.size(), false);
    for (std::size_t i = 0; i < others.size(); ++i) {
      for (std::size_t j = 0; j < others.size() && !redundant[i]; ++j) {
        if (i != j && !redundant[j] && is_monomial_multiple(others[i], others[j])) redundant[i] = true;
      }
    }
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if (!redundant[i]) kept.push_back(std::move(others[i]));
    }
    others = std::move(kept);
  }

  std::vector<Polynomial> out;
  out.reserve(monomials.size() + others.size());
  for (auto& m : monomials) out.push_back(Polynomial::term(vars, std::move(m)));
  for (auto& g : others) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

void check_budget(std::size_t n, const char* what) {
  if (n > kMaxGenerators) {
    throw ResourceLimitError(std::string(what) + " would produce " + std::to_string(n) +
                             " generators (limit " + std::to_string(kMaxGenerators) + ")");
  }
}

// All b <= c with |b| = target, appended as monomials.
void sub_monomials(const Monomial& c, std::uint64_t target, std::size_t var, Monomial& current,
                   std::uint64_t remaining_capacity, std::vector<Monomial>& out) {
  if (var == c.size()) {
    if (target == 0) out.push_back(current);
    return;
  }
  const std::uint64_t cap_after = remaining_capacity - c[var];
  const std::uint64_t lo = target > cap_after ? target - cap_after : 0;
  const std::uint64_t hi = std::min<std::uint64_t>(c[var], target);
  for (std::uint64_t k = lo; k <= hi; ++k) {
    current[var] = static_cast<Monomial::Exponent>(k);
    sub_monomials(c, target - k, var + 1, current, cap_after, out);
  }
  current[var] = 0;
}

}  // namespace

LocalIdeal::LocalIdeal() : LocalIdeal(Polynomial().variables()) {}

LocalIdeal::LocalIdeal(Variables vars) : vars_(std::move(vars)), gens_{Polynomial(vars_)} {}

LocalIdeal::LocalIdeal(Variables vars, std::vector<Polynomial> generators)
    : vars_(std::move(vars)), gens_(canonicalize(vars_, std::move(generators))) {}

LocalIdeal::LocalIdeal(const Polynomial& generator) : LocalIdeal(generator.variables(), {generator}) {}

LocalIdeal LocalIdeal::unit(Variables vars) {
  auto one = Polynomial::constant(vars, 1);
  return LocalIdeal(std::move(vars), {std::move(one)});
}

bool LocalIdeal::is_zero() const { return gens_.size() == 1 && gens_.front().is_zero(); }

bool LocalIdeal::is_unit() const {
  return std::any_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return !g.constant_term().is_zero(); });
}

bool LocalIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

Order LocalIdeal::order() const {
  Order best;
  for (const auto& g : gens_) best = std::min(best, g.order());
  return best;
}

std::uint64_t LocalIdeal::max_degree() const {
  std::uint64_t d = 0;
  for (const auto& g : gens_) {
    if (!g.is_zero()) d = std::max(d, g.total_degree());
  }
  return d;
}

LocalIdeal LocalIdeal::with_variables(Variables vars) const {
  std::vector<Polynomial> gens;
  gens.reserve(gens_.size());
  for (const auto& g : gens_) gens.push_back(g.with_variables(vars));
  return LocalIdeal(std::move(vars), std::move(gens));
}

std::string LocalIdeal::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string();
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LocalIdeal& ideal) { return os << ideal.to_string(); }

Order ord(const LocalIdeal& ideal) { return ideal.order(); }
bool is_unit(const LocalIdeal& ideal) { return ideal.is_unit(); }

LocalIdeal derivative_ideal(const LocalIdeal& ideal, unsigned i) {
  if (i == 0 || ideal.is_zero()) return ideal;
  const auto& vars = ideal.variables();
  const std::size_t n = vars->size();
  std::vector<Polynomial> out;
  for (const auto& g : ideal.generators()) {
    if (g.is_monomial()) {
      const Monomial& c = g.leading_monomial();
      const std::uint64_t deg = c.total_degree();
      if (deg <= i) return LocalIdeal::unit(vars);
      std::vector<Monomial> subs;
      Monomial current(n);
      sub_monomials(c, deg - i, 0, current, deg, subs);
      check_budget(out.size() + subs.size(), "derivative ideal");
      for (auto& m : subs) out.push_back(Polynomial::term(vars, std::move(m)));
      continue;
    }
    // Level-by-level partials, deduplicated up to scalars.
    std::unordered_set<std::size_t> seen;
    std::vector<Polynomial> level{g};
    out.push_back(g);
    for (unsigned k = 1; k <= i && !level.empty(); ++k) {
      std::vector<Polynomial> next;
      for (const auto& h : level) {
        for (std::size_t v = 0; v < n; ++v) {
          Polynomial d = h.partial(v);
          if (d.is_zero()) continue;
          if (!d.constant_term().is_zero()) return LocalIdeal::unit(vars);
          d = d.monic();
          if (!seen.insert(d.hash()).second) {
            const bool duplicate = std::any_of(next.begin(), next.end(), [&](const Polynomial& e) { return e == d; }) ||
                                   std::any_of(out.begin(), out.end(), [&](const Polynomial& e) { return e == d; });
            if (duplicate) continue;
          }
          next.push_back(std::move(d));
        }
      }
      check_budget(out.size() + next.size(), "derivative ideal");
      for (const auto& d : next) out.push_back(d);
      level = std::move(next);
    }
  }
  return LocalIdeal(vars, std::move(out));
}

Order ord_via_derivations(const LocalIdeal& ideal) {
  const std::uint64_t bound = 1 + ideal.max_degree();
  LocalIdeal current = ideal;
  for (std::uint64_t d = 0; d <= bound; ++d) {
    if (current.is_unit()) return Order(d);
    current = derivative_ideal(current, 1);
  }
  if (!ideal.is_zero()) throw InternalError("derivatives of a nonzero ideal never reached the unit ideal");
  return Order::infinity();
}

LocalIdeal coefficient_ideal(const LocalIdeal& ideal) {
  const Order d = ideal.order();
  if (d.is_infinite() || d.value() == 0) {
    throw ArithmeticError("coefficient ideal needs an ideal of positive finite order, got " + ideal.to_string());
  }
  if (d.value() > 12) throw ResourceLimitError("coefficient ideal of order " + std::to_string(d.value()) + " is too large");
  const unsigned e = static_cast<unsigned>(d.value());
  const unsigned long fact = factorial(e).get_ui();
  LocalIdeal acc = power(ideal, fact / e);
  for (unsigned i = 1; i < e; ++i) acc = sum(acc, power(derivative_ideal(ideal, i), fact / (e - i)));
  return acc;
}

LocalIdeal sum(const LocalIdeal& a, const LocalIdeal& b) {
  if (!same_variables(a.variables(), b.variables())) throw VariableMismatch("sum of ideals over different rings");
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  check_budget(gens.size(), "ideal sum");
  return LocalIdeal(a.variables(), std::move(gens));
}

LocalIdeal product(const LocalIdeal& a, const LocalIdeal& b) {
  if (!same_variables(a.variables(), b.variables())) throw VariableMismatch("product of ideals over different rings");
  check_budget(a.size() * b.size(), "ideal product");
  const auto& vars = a.variables();
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial> monos;
    monos.reserve(a.size() * b.size());
    for (const auto& g : a.generators()) {
      for (const auto& h : b.generators()) monos.push_back(g.leading_monomial() * h.leading_monomial());
    }
    std::vector<Polynomial> gens;
    for (auto& m : minimal_monomials(std::move(monos))) gens.push_back(Polynomial::term(vars, std::move(m)));
    return LocalIdeal(vars, std::move(gens));
  }
  std::vector<Polynomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  LocalIdeal result(vars, std::move(gens));
  if (result.size() > 48 && !result.is_monomial()) return interreduce(result);
  return result;
}

LocalIdeal power(const LocalIdeal& ideal, unsigned long k) {
  if (k == 0) return LocalIdeal::unit(ideal.variables());
  LocalIdeal result = ideal;
  LocalIdeal base = ideal;
  bool have = false;
  while (k > 0) {
    if (k & 1UL) {
      result = have ? product(result, base) : base;
      have = true;
    }
    k >>= 1;
    if (k > 0) base = product(base, base);
  }
  return result;
}

Variables without_variable(const Variables& vars, std::size_t var) {
  std::vector<std::string> names = vars->names();
  names.erase(names.begin() + static_cast<long>(var));
  return make_variables(std::move(names));
}

Polynomial drop_variable(const Polynomial& p, std::size_t var, const Variables& smaller) {
  Polynomial::Terms terms;
  for (const auto& [m, c] : p.terms()) {
    if (m[var] != 0) throw InternalError("drop_variable: variable still occurs");
    std::vector<Monomial::Exponent> e(m.exponents().begin(), m.exponents().end());
    e.erase(e.begin() + static_cast<long>(var));
    terms.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(smaller, std::move(terms));
}

LocalIdeal restrict(const LocalIdeal& ideal, std::size_t var) {
  const auto& vars = ideal.variables();
  if (var >= vars->size()) throw VariableMismatch("restrict: variable index out of range");
  Variables smaller = without_variable(vars, var);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    gens.push_back(drop_variable(g.coefficient_in(var, 0), var, smaller));
  }
  return LocalIdeal(std::move(smaller), std::move(gens));
}

LocalIdeal interreduce(const LocalIdeal& ideal) {
  if (ideal.is_zero() || ideal.size() == 1) return ideal;
  std::map<Monomial, std::size_t, GrlexDescending> columns;
  for (const auto& g : ideal.generators()) {
    for (const auto& term : g.terms()) columns.emplace(term.first, 0);
  }
  std::vector<Monomial> column_monomials;
  std::size_t idx = 0;
  for (auto& [m, i] : columns) {
    i = idx++;
    column_monomials.push_back(m);
  }
  RationalMatrix rows;
  for (const auto& g : ideal.generators()) {
    std::vector<Rational> row(columns.size(), Rational(0));
    for (const auto& [m, c] : g.terms()) row[columns[m]] = c;
    rows.push_back(std::move(row));
  }
  const RowEchelon e = reduced_row_echelon(std::move(rows));
  std::vector<Polynomial> gens;
  for (const auto& row : e.rows) {
    Polynomial::Terms terms;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) terms.emplace(column_monomials[c], row[c]);
    }
    gens.emplace_back(ideal.variables(), std::move(terms));
  }
  return LocalIdeal(ideal.variables(), std::move(gens));
}

}  // namespace wblowup
