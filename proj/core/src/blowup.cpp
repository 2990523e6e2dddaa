#include "wblowup/blowup.hpp"

#include "wblowup/errors.hpp"

#include <algorithm>
#include <set>

namespace wblowup {

std::string PolynomialFraction::to_string() const {
  if (is_polynomial()) return num.to_string();
  return "(" + num.to_string() + ")/(" + den.to_string() + ")";
}

namespace {

using Fraction = PolynomialFraction;

Fraction poly(Polynomial p) {
  Polynomial one = Polynomial::constant(p.variables(), 1);
  return {std::move(p), std::move(one)};
}

Fraction add(const Fraction& a, const Fraction& b) {
  if (a.den == b.den) return {a.num + b.num, a.den};
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

Fraction scale(Fraction a, const Rational& c) {
  a.num *= c;
  return a;
}

// p(images), cleared by prod den_k^{deg_k p}. Images of variables p does not
// involve are never read.
Fraction substitute_fractions(const Polynomial& p, const std::vector<Fraction>& images, const Variables& target) {
  const std::size_t n = p.num_variables();
  std::vector<Monomial::Exponent> deg(n, 0);
  bool plain = true;
  for (std::size_t k = 0; k < n; ++k) {
    deg[k] = p.degree_in(k);
    if (deg[k] > 0 && !images[k].is_polynomial()) plain = false;
  }
  if (plain) {
    std::vector<Polynomial> nums;
    for (std::size_t k = 0; k < n; ++k) nums.push_back(deg[k] > 0 ? images[k].num : Polynomial(target));
    return poly(p.substitute(nums));
  }
  Polynomial num(target);
  Polynomial den = Polynomial::constant(target, 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (deg[k] > 0) den = den * images[k].den.pow(deg[k]);
  }
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t k = 0; k < n; ++k) {
      if (deg[k] == 0) continue;
      if (m[k] > 0) t = t * images[k].num.pow(m[k]);
      if (deg[k] > m[k]) t = t * images[k].den.pow(deg[k] - m[k]);
    }
    num += t;
  }
  return {std::move(num), std::move(den)};
}

Monomial::Exponent small_exponent(const BigInt& w, const char* what) {
  if (!w.fits_uint_p() || w > BigInt(1U << 30)) {
    throw ResourceLimitError(std::string(what) + " " + w.get_str() + " is too large for a chart");
  }
  return static_cast<Monomial::Exponent>(w.get_ui());
}

std::string fresh_exceptional(const std::set<std::string>& taken) {
  if (!taken.contains("s")) return "s";
  for (int k = 2;; ++k) {
    std::string name = "s" + std::to_string(k);
    if (!taken.contains(name)) return name;
  }
}

}  // namespace

std::vector<Chart> canonical_blowup(const WeightedCenter& center, const std::string& parent_id) {
  if (center.is_trivial() || center.length() == 0) {
    throw AdmissibilityError("cannot blow up the center " + to_string(center));
  }
  const Frame& frame = center.frame();
  const Variables& parent = center.variables();
  const std::size_t nv = parent->size();
  const BigInt big_n = center.n();
  const std::vector<BigInt> weights = center.blowup_weights();
  std::vector<Monomial::Exponent> w;
  for (const auto& wj : weights) w.push_back(small_exponent(wj, "blowup weight"));
  (void)small_exponent(big_n, "blowup degree");

  std::vector<Chart> charts;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const std::size_t exc = frame.entries()[i].slot;
    std::set<std::string> taken(parent->names().begin(), parent->names().end());
    std::vector<std::string> names = parent->names();
    const auto complement = frame.complement();
    std::set<std::string> chart_names;
    for (auto c : complement) chart_names.insert(names[c]);
    for (std::size_t j = 0; j < frame.size(); ++j) {
      if (j == i) continue;
      const std::size_t slot = frame.entries()[j].slot;
      std::string primed = names[slot] + "'";
      while (taken.contains(primed) || chart_names.contains(primed)) primed += "'";
      names[slot] = primed;
      chart_names.insert(primed);
    }
    std::set<std::string> all = taken;
    all.insert(chart_names.begin(), chart_names.end());
    names[exc] = fresh_exceptional(all);
    const Variables vars = make_variables(std::move(names));

    const Polynomial s = Polynomial::variable(vars, exc);
    std::vector<Fraction> z(nv, poly(Polynomial(vars)));
    for (auto c : complement) z[c] = poly(Polynomial::variable(vars, c));
    for (std::size_t j = 0; j < frame.size(); ++j) {
      const std::size_t slot = frame.entries()[j].slot;
      z[slot] = poly(j == i ? s.pow(w[j]) : Polynomial::variable(vars, slot) * s.pow(w[j]));
    }
    // z_slot = t - num/den, innermost entries first.
    for (std::size_t j = frame.size(); j-- > 0;) {
      const FrameEntry& e = frame.entries()[j];
      if (e.num.is_zero()) continue;
      const Fraction num = substitute_fractions(e.num, z, vars);
      Fraction tail = num;
      if (e.has_denominator()) {
        const Fraction den = substitute_fractions(e.den, z, vars);
        tail = {num.num * den.den, num.den * den.num};
      }
      z[e.slot] = add(z[e.slot], scale(tail, Rational(-1)));
    }

    Chart chart;
    chart.substitution.reserve(nv);
    const auto& a = frame.coords().matrix();
    for (std::size_t k = 0; k < nv; ++k) {
      if (frame.coords().is_identity()) {
        chart.substitution.push_back(z[k]);
        continue;
      }
      Fraction img = poly(Polynomial(vars));
      for (std::size_t l = 0; l < nv; ++l) {
        if (!a[k][l].is_zero()) img = add(img, scale(z[l], a[k][l]));
      }
      chart.substitution.push_back(std::move(img));
    }
    for (auto& f : chart.substitution) {
      if (!f.den.is_constant()) {
        chart.unit_factors.push_back(f.den);
      } else if (!f.den.is_one()) {
        const Rational c = f.den.constant_term();
        f.num *= Rational(1) / c;
        f.den = Polynomial::constant(vars, 1);
      }
    }
    std::sort(chart.unit_factors.begin(), chart.unit_factors.end(), canonical_less);
    chart.unit_factors.erase(std::unique(chart.unit_factors.begin(), chart.unit_factors.end()),
                             chart.unit_factors.end());

    chart.parameter = (*parent)[exc];
    chart.id = parent_id + "/" + chart.parameter;
    chart.parent = parent_id;
    chart.index = i;
    chart.parent_variables = parent;
    chart.variables = vars;
    chart.exceptional = exc;
    for (const auto& e : frame.entries()) chart.frame_slots.push_back(e.slot);
    chart.n = big_n;
    chart.weights = weights;
    chart.mu_order = weights[i];
    chart.mu_weights.assign(nv, BigInt(0));
    chart.mu_weights[exc] = weights[i] == 1 ? BigInt(0) : BigInt(1);
    for (std::size_t j = 0; j < frame.size(); ++j) {
      if (j == i) continue;
      BigInt r = (-weights[j]) % weights[i];
      if (r < 0) r += weights[i];
      chart.mu_weights[frame.entries()[j].slot] = r;
    }
    charts.push_back(std::move(chart));
  }
  return charts;
}

PolynomialFraction pullback(const Polynomial& f, const Chart& chart) {
  if (!same_variables(f.variables(), chart.parent_variables)) {
    throw VariableMismatch("pullback of a polynomial over a different ring than the chart's parent");
  }
  return substitute_fractions(f, chart.substitution, chart.variables);
}

Order exceptional_order(const Polynomial& f, const Chart& chart) {
  const auto pb = pullback(f, chart);
  if (pb.num.is_zero()) return Order::infinity();
  return Order(pb.num.min_exponent(chart.exceptional));
}

TransformedIdeal transform(const LocalIdeal& ideal, const Chart& chart) {
  const auto n = small_exponent(chart.n, "blowup degree");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    const auto pb = pullback(g, chart);
    if (pb.num.is_zero()) continue;
    if (pb.num.min_exponent(chart.exceptional) < n) {
      throw AdmissibilityError("pullback of " + g.to_string() + " to chart " + chart.id + " is not divisible by " +
                               chart.exceptional_name() + "^" + chart.n.get_str());
    }
    gens.push_back(pb.num.divide_by_variable_power(chart.exceptional, n));
  }
  return {LocalIdeal(chart.variables, std::move(gens)), chart.n};
}

Polynomial strict_transform_hypersurface(const Polynomial& f, const Chart& chart) {
  if (f.is_zero()) throw ArithmeticError("strict transform of the zero polynomial");
  const auto pb = pullback(f, chart);
  return pb.num.divide_by_variable_power(chart.exceptional, pb.num.min_exponent(chart.exceptional));
}

std::optional<BigInt> mu_weight(const Polynomial& p, const Chart& chart) {
  std::optional<BigInt> out;
  for (const auto& [m, c] : p.terms()) {
    BigInt total = 0;
    for (std::size_t k = 0; k < m.size(); ++k) total += chart.mu_weights[k] * static_cast<unsigned long>(m[k]);
    if (chart.mu_order > 1) {
      total %= chart.mu_order;
    } else {
      total = 0;
    }
    if (out && *out != total) return std::nullopt;
    out = total;
  }
  if (!out) out = BigInt(0);
  return out;
}

}  // namespace wblowup
