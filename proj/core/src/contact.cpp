#include "wblowup/contact.hpp"

#include "wblowup/errors.hpp"

#include <map>
#include <set>

namespace wblowup {

namespace {

struct Candidate {
  Polynomial poly;
  std::size_t generator = 0;
  Monomial derivative;
};

constexpr std::size_t kMaxCandidates = 64;

std::vector<Rational> linear_part(const Polynomial& t) {
  const std::size_t n = t.num_variables();
  std::vector<Rational> c(n);
  for (std::size_t v = 0; v < n; ++v) c[v] = t.coefficient(Monomial::unit_vector(n, v));
  return c;
}

ContactChoice make_choice(const Candidate& cand, LinearChange coords, FrameEntry entry, std::string method) {
  const auto& vars = cand.poly.variables();
  const Polynomial inner = entry.den * Polynomial::variable(vars, entry.slot) + entry.num;
  ContactChoice c;
  c.element = coords.to_outer(inner);
  c.source = cand.poly;
  c.source_index = cand.generator;
  c.derivative = cand.derivative;
  c.coords = std::move(coords);
  c.entry = std::move(entry);
  c.method = std::move(method);
  return c;
}

// t = c z_v + p with c constant.
std::optional<FrameEntry> coordinate_entry(const Polynomial& t, std::size_t v) {
  if (t.degree_in(v) != 1) return std::nullopt;
  const Polynomial a = t.coefficient_in(v, 1);
  if (!a.is_constant() || a.is_zero()) return std::nullopt;
  const Rational inv = Rational(1) / a.constant_term();
  return FrameEntry{v, t.coefficient_in(v, 0) * inv, Polynomial::constant(t.variables(), 1)};
}

// t = a z_v + p with a(0) != 0.
std::optional<FrameEntry> affine_entry(const Polynomial& t, std::size_t v) {
  if (t.degree_in(v) != 1) return std::nullopt;
  const Polynomial a = t.coefficient_in(v, 1);
  if (a.constant_term().is_zero()) return std::nullopt;
  const Rational inv = Rational(1) / a.constant_term();
  return FrameEntry{v, t.coefficient_in(v, 0) * inv, a * inv};
}

// Linear change x = S z with column k of S equal to the direction D.
LinearChange shear_along(const std::vector<Rational>& d, std::size_t& k) {
  k = 0;
  while (d[k].is_zero()) ++k;
  RationalMatrix s = identity_matrix(d.size());
  for (std::size_t j = 0; j < d.size(); ++j) s[j][k] = d[j];
  return LinearChange(std::move(s));
}

Polynomial directional(const Polynomial& t, const std::vector<Rational>& d) {
  Polynomial out(t.variables());
  for (std::size_t v = 0; v < d.size(); ++v) {
    if (!d[v].is_zero()) out += t.partial(v) * d[v];
  }
  return out;
}

std::optional<ContactChoice> try_direction(const Candidate& cand, const std::vector<Rational>& d,
                                           const char* method) {
  const Polynomial& t = cand.poly;
  const auto lin = linear_part(t);
  Rational dl(0);
  for (std::size_t v = 0; v < d.size(); ++v) dl += d[v] * lin[v];
  if (dl.is_zero()) return std::nullopt;
  if (!directional(directional(t, d), d).is_zero()) return std::nullopt;
  std::size_t k = 0;
  LinearChange s = shear_along(d, k);
  const Polynomial moved = s.to_inner(t);
  if (auto e = coordinate_entry(moved, k)) return make_choice(cand, std::move(s), std::move(*e), method);
  if (auto e = affine_entry(moved, k)) return make_choice(cand, std::move(s), std::move(*e), method);
  return std::nullopt;
}

// Direction D with D(t) = 1 identically.
std::optional<ContactChoice> try_constant_derivative(const Candidate& cand) {
  const Polynomial& t = cand.poly;
  const std::size_t n = t.num_variables();
  const auto lin = linear_part(t);
  Polynomial q = t;
  for (std::size_t v = 0; v < n; ++v) {
    if (!lin[v].is_zero()) q -= Polynomial::variable(t.variables(), v) * lin[v];
  }
  std::map<Monomial, std::vector<Rational>, GrlexDescending> rows;
  for (std::size_t v = 0; v < n; ++v) {
    const Polynomial dq = q.partial(v);
    for (const auto& [m, c] : dq.terms()) {
      auto& row = rows.try_emplace(m, std::vector<Rational>(n, Rational(0))).first->second;
      row[v] = c;
    }
  }
  RationalMatrix a{lin};
  std::vector<Rational> b{Rational(1)};
  for (auto& [m, row] : rows) {
    a.push_back(std::move(row));
    b.emplace_back(0);
  }
  auto d = solve_linear(a, b);
  if (!d) return std::nullopt;
  return try_direction(cand, *d, "shear");
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m, std::size_t cols) {
  const RowEchelon e = reduced_row_echelon(m);
  std::vector<bool> pivot(cols, false);
  for (auto p : e.pivots) pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  return Rational(BigInt(sqrt(num)), BigInt(sqrt(den)));
}

// Directions along which the quadratic part of t is isotropic.
std::optional<ContactChoice> try_isotropic(const Candidate& cand) {
  const Polynomial& t = cand.poly;
  const std::size_t n = t.num_variables();
  RationalMatrix hessian(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      Monomial m(n);
      m[u] += 1;
      m[v] += 1;
      hessian[u][v] = t.coefficient(m) * Rational(u == v ? 2 : 1);
    }
  }
  std::vector<std::vector<Rational>> directions = nullspace(hessian, n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      // H_uu + 2 lambda H_uv + lambda^2 H_vv = 0 for D = e_u + lambda e_v.
      const Rational& a = hessian[v][v];
      const Rational b = hessian[u][v] * Rational(2);
      const Rational& c = hessian[u][u];
      std::vector<Rational> lambdas;
      if (a.is_zero()) {
        if (!b.is_zero()) lambdas.push_back(-c / b);
        std::vector<Rational> d(n, Rational(0));
        d[v] = 1;
        directions.push_back(std::move(d));
      } else if (auto root = rational_sqrt(b * b - Rational(4) * a * c)) {
        lambdas.push_back((-b + *root) / (Rational(2) * a));
        lambdas.push_back((-b - *root) / (Rational(2) * a));
      }
      for (const auto& l : lambdas) {
        std::vector<Rational> d(n, Rational(0));
        d[u] = 1;
        d[v] = l;
        directions.push_back(std::move(d));
      }
    }
  }
  for (const auto& d : directions) {
    if (auto c = try_direction(cand, d, "isotropic")) return c;
  }
  return std::nullopt;
}

// Coordinates in which the linear part of t is the coordinate z_k.
std::optional<ContactChoice> try_linear_form(const Candidate& cand) {
  const Polynomial& t = cand.poly;
  const auto lin = linear_part(t);
  std::size_t k = 0;
  while (k < lin.size() && lin[k].is_zero()) ++k;
  if (k == lin.size()) return std::nullopt;
  RationalMatrix m = identity_matrix(lin.size());
  m[k] = lin;
  LinearChange s(*invert(m));
  const Polynomial moved = s.to_inner(t);
  if (auto e = coordinate_entry(moved, k)) return make_choice(cand, std::move(s), std::move(*e), "linear");
  if (moved.min_exponent(k) > 0) {
    FrameEntry e{k, Polynomial(t.variables()), Polynomial::constant(t.variables(), 1)};
    return make_choice(cand, std::move(s), std::move(e), "linear");
  }
  if (auto e = affine_entry(moved, k)) return make_choice(cand, std::move(s), std::move(*e), "linear");
  return std::nullopt;
}

std::optional<ContactChoice> normalize(const std::vector<Candidate>& cands) {
  for (const auto& cand : cands) {
    const auto lin = linear_part(cand.poly);
    for (std::size_t v = 0; v < lin.size(); ++v) {
      if (lin[v].is_zero()) continue;
      if (auto e = coordinate_entry(cand.poly, v)) {
        return make_choice(cand, LinearChange::identity(lin.size()), std::move(*e), "coordinate");
      }
    }
  }
  for (const auto& cand : cands) {
    const auto lin = linear_part(cand.poly);
    for (std::size_t v = 0; v < lin.size(); ++v) {
      if (lin[v].is_zero() || cand.poly.min_exponent(v) == 0) continue;
      FrameEntry e{v, Polynomial(cand.poly.variables()), Polynomial::constant(cand.poly.variables(), 1)};
      return make_choice(cand, LinearChange::identity(lin.size()), std::move(e), "divisible");
    }
  }
  for (const auto& cand : cands) {
    if (auto c = try_constant_derivative(cand)) return c;
  }
  for (const auto& cand : cands) {
    const auto lin = linear_part(cand.poly);
    for (std::size_t v = 0; v < lin.size(); ++v) {
      if (lin[v].is_zero()) continue;
      if (auto e = affine_entry(cand.poly, v)) {
        return make_choice(cand, LinearChange::identity(lin.size()), std::move(*e), "affine");
      }
    }
  }
  for (const auto& cand : cands) {
    if (auto c = try_linear_form(cand)) return c;
  }
  for (const auto& cand : cands) {
    if (auto c = try_isotropic(cand)) return c;
  }
  return std::nullopt;
}

}  // namespace

ContactChoice find_maximal_contact(const LocalIdeal& ideal) {
  const Order d = ideal.order();
  if (d.is_infinite() || d.value() == 0) {
    throw ArithmeticError("maximal contact needs an ideal of positive finite order, got " + ideal.to_string());
  }
  return find_maximal_contact(ideal, d.value());
}

ContactChoice find_maximal_contact(const LocalIdeal& ideal, std::uint64_t order) {
  std::vector<Candidate> cands;
  std::vector<Polynomial> all_partials;
  const auto& gens = ideal.generators();
  for (std::size_t gi = 0; gi < gens.size() && cands.size() < kMaxCandidates; ++gi) {
    const Polynomial& g = gens[gi];
    if (g.order() != Order(order)) continue;
    std::set<Monomial, GrlexDescending> alphas;
    for (const auto& [m, c] : g.terms()) {
      if (m.total_degree() != order) continue;
      for (std::size_t v = 0; v < m.size(); ++v) {
        if (m[v] == 0) continue;
        Monomial alpha = m;
        alpha[v] -= 1;
        alphas.insert(std::move(alpha));
      }
    }
    for (const auto& alpha : alphas) {
      Polynomial p = g.partial(alpha);
      if (p.is_zero()) continue;
      if (all_partials.size() < 4 * kMaxCandidates) all_partials.push_back(p);
      if (p.order() == Order(1)) {
        cands.push_back({std::move(p), gi, alpha});
        if (cands.size() >= kMaxCandidates) break;
      }
    }
  }
  if (cands.empty()) {
    throw InternalError("no order-one derivative found for " + ideal.to_string() + " of order " +
                        std::to_string(order));
  }
  if (auto c = normalize(cands)) return *c;

  // Elements of the rational span of the partials, reduced against each other.
  const LocalIdeal span = interreduce(LocalIdeal(ideal.variables(), all_partials));
  std::vector<Candidate> reduced;
  for (const auto& p : span.generators()) {
    if (p.order() == Order(1)) reduced.push_back({p, cands.front().generator, cands.front().derivative});
  }
  if (auto c = normalize(reduced)) {
    c->method = "span";
    return *c;
  }
  throw TriangularizationError("contact element " + cands.front().poly.to_string() +
                               " admits no exact triangular form");
}

LocalIdeal restrict_to_contact(const LocalIdeal& ideal, const ContactChoice& contact) {
  const auto& vars = ideal.variables();
  const std::size_t slot = contact.entry.slot;
  Variables smaller = without_variable(vars, slot);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    const Polynomial rewritten = rewrite_at_entry(contact.coords.to_inner(g), contact.entry);
    gens.push_back(drop_variable(rewritten.coefficient_in(slot, 0), slot, smaller));
  }
  return LocalIdeal(std::move(smaller), std::move(gens));
}

}  // namespace wblowup
