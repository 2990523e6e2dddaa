#include "wblowup/canonical.hpp"

#include "wblowup/errors.hpp"

#include <map>
#include <set>

namespace wblowup {

namespace {

// Bound on the number of marked elements carried to the next level.
constexpr std::size_t kMaxMarked = 50000;

Polynomial embed(const Polynomial& p, const std::vector<std::size_t>& slots, const Variables& full) {
  Polynomial::Terms terms;
  for (const auto& [m, c] : p.terms()) {
    Monomial big(full->size());
    for (std::size_t i = 0; i < slots.size(); ++i) big[slots[i]] = m[i];
    terms.emplace(std::move(big), c);
  }
  return Polynomial(full, std::move(terms));
}

Variables names_of(const Variables& full, const std::vector<std::size_t>& slots) {
  std::vector<std::string> names;
  for (auto s : slots) names.push_back((*full)[s]);
  return make_variables(std::move(names));
}

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const { return canonical_less(a, b); }
};

// Marked elements (g, w): an admissible center has nu(g) >= w for each of them.
// An ideal I is {(g, 1)}; the level below a maximal contact t of order e is
// {(d^b g_a |_{t=0}, w - (a + |b|)/e)} over the Taylor coefficients g_a of g
// in t, which is C(I)|_{t=0} with the weights divided by (e-1)!.
class Marked {
public:
  explicit Marked(Variables vars) : vars_(std::move(vars)) {}

  const Variables& variables() const { return vars_; }
  bool empty() const { return items_.empty(); }
  const std::map<Polynomial, Rational, PolynomialLess>& items() const { return items_; }

  void add(const Polynomial& g, const Rational& w) {
    if (g.is_zero() || w.sign() <= 0) return;
    auto [it, fresh] = items_.try_emplace(g.monic(), w);
    if (!fresh && it->second < w) it->second = w;
    if (items_.size() > kMaxMarked) {
      throw ResourceLimitError("more than " + std::to_string(kMaxMarked) + " marked elements in a coefficient ideal");
    }
  }

  // g and all its partials d^b g with w - |b|/e > 0, weighted accordingly.
  void add_with_derivatives(const Polynomial& g, const Rational& w, const Rational& e) {
    std::set<Polynomial, PolynomialLess> level{g.monic()};
    Rational weight = w;
    const Rational step = Rational(1) / e;
    while (!level.empty() && weight.sign() > 0) {
      std::set<Polynomial, PolynomialLess> next;
      for (const auto& h : level) {
        add(h, weight);
        if (weight <= step) continue;
        for (std::size_t v = 0; v < h.num_variables(); ++v) {
          Polynomial d = h.partial(v);
          if (!d.is_zero()) next.insert(d.monic());
        }
      }
      level = std::move(next);
      weight -= step;
    }
  }

  // min ord(g)/w; infinite for the empty collection.
  std::optional<Rational> order() const {
    std::optional<Rational> best;
    for (const auto& [g, w] : items_) {
      const Rational r = Rational(static_cast<long>(g.order().value())) / w;
      if (!best || r < *best) best = r;
    }
    return best;
  }

  void apply(const LinearChange& l) {
    std::map<Polynomial, Rational, PolynomialLess> moved;
    for (const auto& [g, w] : items_) {
      auto [it, fresh] = moved.try_emplace(l.to_inner(g).monic(), w);
      if (!fresh && it->second < w) it->second = w;
    }
    items_ = std::move(moved);
  }

private:
  Variables vars_;
  std::map<Polynomial, Rational, PolynomialLess> items_;
};

// Maximal contact from the elements attaining the order e = ord(g)/w, tried by
// increasing ord(g).
ContactChoice contact_of(const Marked& m, const Rational& e) {
  std::map<std::uint64_t, std::vector<Polynomial>> by_order;
  for (const auto& [g, w] : m.items()) {
    const std::uint64_t o = g.order().value();
    if (Rational(static_cast<long>(o)) / w == e) by_order[o].push_back(g);
  }
  std::optional<TriangularizationError> failure;
  for (auto& [o, gens] : by_order) {
    try {
      return find_maximal_contact(LocalIdeal(m.variables(), std::move(gens)), o);
    } catch (const TriangularizationError& err) {
      if (!failure) failure = err;
    }
  }
  if (failure) throw *failure;
  throw InternalError("no element attains the order of the coefficient ideal");
}

struct LevelState {
  Variables full;
  RationalMatrix a;
  std::vector<std::size_t> remaining;
  std::vector<FrameEntry> entries;
};

// Applies the level shear x_sub = S z_sub to the cumulative data.
void apply_shear(LevelState& st, const LinearChange& shear) {
  const std::size_t n = st.full->size();
  RationalMatrix big = identity_matrix(n);
  for (std::size_t i = 0; i < st.remaining.size(); ++i) {
    for (std::size_t j = 0; j < st.remaining.size(); ++j) big[st.remaining[i]][st.remaining[j]] = shear.matrix()[i][j];
  }
  for (auto& e : st.entries) {
    e.num = apply_linear(e.num, big);
    e.den = apply_linear(e.den, big);
  }
  st.a = multiply(st.a, big);
}

}  // namespace

CanonicalResult canonical_center(const LocalIdeal& ideal) {
  const Variables& full = ideal.variables();
  const std::size_t n = full->size();
  if (ideal.is_unit()) {
    return {WeightedCenter::trivial(full), Invariant::trivial(), {}, std::vector<BigInt>{}};
  }
  if (ideal.is_zero()) {
    return {WeightedCenter(Frame(full), {}), Invariant::of({}), {}, std::vector<BigInt>{}};
  }

  LevelState st{full, identity_matrix(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) st.remaining.push_back(i);

  std::vector<Rational> exponents;
  std::vector<ContactChoice> flag;
  Marked m(full);
  for (const auto& g : ideal.generators()) m.add(g, Rational(1));

  while (true) {
    const Rational e = *m.order();
    exponents.push_back(e);

    if (st.remaining.size() == 1) {
      // One variable: the center is a power of the remaining coordinate.
      const std::size_t slot = st.remaining.front();
      st.entries.push_back({slot, Polynomial(full), Polynomial::constant(full, 1)});
      const Variables one = names_of(full, st.remaining);
      ContactChoice c;
      c.element = Polynomial::variable(one, 0);
      c.source = c.element;
      c.coords = LinearChange::identity(1);
      c.entry = {0, Polynomial(one), Polynomial::constant(one, 1)};
      c.method = "coordinate";
      flag.push_back(std::move(c));
      break;
    }

    ContactChoice contact = contact_of(m, e);
    if (!contact.coords.is_identity()) {
      apply_shear(st, contact.coords);
      m.apply(contact.coords);
    }
    const std::size_t r = contact.entry.slot;
    st.entries.push_back({st.remaining[r], embed(contact.entry.num, st.remaining, full),
                          embed(contact.entry.den, st.remaining, full)});
    flag.push_back(contact);

    // Taylor coefficients in t of every element, t = 0 afterwards.
    const Variables smaller = without_variable(m.variables(), r);
    Marked next(smaller);
    const Rational step = Rational(1) / e;
    for (const auto& [g, w] : m.items()) {
      const Polynomial rewritten = rewrite_at_entry(g, contact.entry);
      Rational wa = w;
      for (Monomial::Exponent a = 0; wa.sign() > 0; ++a, wa -= step) {
        const Polynomial ga = rewritten.coefficient_in(r, a);
        if (!ga.is_zero()) next.add_with_derivatives(drop_variable(ga, r, smaller), wa, e);
      }
    }
    st.remaining.erase(st.remaining.begin() + static_cast<long>(r));
    if (next.empty()) break;
    m = std::move(next);
  }

  Frame frame(full, LinearChange(st.a), std::move(st.entries));
  WeightedCenter center(std::move(frame), exponents);
  if (!admissible(center, ideal)) {
    throw InternalError("computed center " + to_string(center) + " does not contain " + ideal.to_string());
  }
  Invariant inv = center.invariant();
  auto raw = inv.raw_orders();
  return {std::move(center), std::move(inv), std::move(flag), std::move(raw)};
}

Invariant mord(const LocalIdeal& ideal) { return canonical_center(ideal).invariant; }

}  // namespace wblowup
