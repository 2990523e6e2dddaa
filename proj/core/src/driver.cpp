#include "wblowup/driver.hpp"

#include "wblowup/errors.hpp"

#include <algorithm>

namespace wblowup {

const Node* BlowupTree::find(const std::string& id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

std::vector<const Node*> BlowupTree::children(const Node& node) const {
  std::vector<const Node*> out;
  for (const auto& n : nodes) {
    if (n.parent == node.id) out.push_back(&n);
  }
  return out;
}

std::vector<const Node*> BlowupTree::leaves() const {
  std::vector<const Node*> out;
  for (const auto& n : nodes) {
    if (children(n).empty()) out.push_back(&n);
  }
  return out;
}

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::principalize:
      return "principalize";
    case Mode::embedded_resolve:
      return "embedded_resolve";
    case Mode::center_only:
      return "center_only";
  }
  return "?";
}

std::string to_string(NodeStatus status) {
  switch (status) {
    case NodeStatus::active:
      return "active";
    case NodeStatus::principal:
      return "principal";
    case NodeStatus::blown_up:
      return "blown_up";
    case NodeStatus::exhausted:
      return "exhausted";
  }
  return "?";
}

std::string point_string(const std::vector<Rational>& coords) {
  std::string s = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) s += ",";
    s += coords[i].to_string();
  }
  return s + ")";
}

namespace {

bool is_origin(const std::vector<Rational>& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); });
}

// An order-1 generator dividing every generator, if any.
std::optional<Polynomial> smooth_divisor(const LocalIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (g.order() != Order(1)) continue;
    const bool divides_all = std::all_of(ideal.generators().begin(), ideal.generators().end(),
                                         [&](const Polynomial& h) { return h.divide_exact(g).has_value(); });
    if (divides_all) return g;
  }
  return std::nullopt;
}

MarkedPoint make_point(const LocalIdeal& ideal, std::vector<Rational> coords, std::string source) {
  MarkedPoint p;
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.generators()) moved.push_back(g.translate(coords));
  p.local = LocalIdeal(ideal.variables(), std::move(moved));
  p.coords = std::move(coords);
  p.source = std::move(source);
  if (p.local.is_unit()) {
    p.invariant = Invariant::trivial();
    return p;
  }
  try {
    p.center = canonical_center(p.local);
    p.invariant = p.center->invariant;
  } catch (const TriangularizationError&) {
    p.divisor = smooth_divisor(p.local);
    if (!p.divisor) throw;
    p.invariant = Invariant::of({Rational(1)});
  }
  return p;
}

bool pending(const MarkedPoint& p, Mode mode) {
  if (p.blown_up || (!p.center && !p.divisor) || p.invariant.is_trivial()) return false;
  if (mode == Mode::embedded_resolve) return p.local.order() >= Order(2);
  return true;
}

void check_descent(const Node& child, const Invariant& parent) {
  for (const auto& p : child.points) {
    if (!(p.invariant < parent)) {
      throw InternalError("invariant did not drop on " + child.id + " at " + point_string(p.coords) + ": " +
                          p.invariant.to_string() + " is not below " + parent.to_string());
    }
  }
}

Node make_root(const LocalIdeal& ideal, const RunConfig& cfg) {
  Node root;
  root.id = "root";
  root.ideal = ideal;
  std::vector<std::vector<Rational>> pts = cfg.points;
  if (cfg.point_search == PointSearch::user_supplied && pts.empty()) {
    throw ParseError("user_supplied point search needs at least one point");
  }
  if (pts.empty()) pts.emplace_back(ideal.variables()->size(), Rational(0));
  for (auto& pt : pts) {
    if (pt.size() != ideal.variables()->size()) {
      throw VariableMismatch("point " + point_string(pt) + " does not match the " +
                             std::to_string(ideal.variables()->size()) + " variables");
    }
    const bool origin = is_origin(pt);
    if (std::any_of(root.points.begin(), root.points.end(), [&](const MarkedPoint& q) { return q.coords == pt; })) {
      continue;
    }
    root.points.push_back(make_point(ideal, pt, origin ? "origin" : "user"));
  }
  root.search_log.push_back(cfg.points.empty() ? "root: origin" : "root: user points");
  return root;
}

void finalize_status(BlowupTree& tree) {
  for (auto& n : tree.nodes) {
    const bool open = std::any_of(n.points.begin(), n.points.end(),
                                  [&](const MarkedPoint& p) { return pending(p, tree.config.mode); });
    const bool blown = std::any_of(n.points.begin(), n.points.end(), [](const MarkedPoint& p) { return p.blown_up; });
    const bool has_children =
        std::any_of(n.points.begin(), n.points.end(), [](const MarkedPoint& p) { return !p.children.empty(); });
    if (open) {
      n.status = tree.config.mode == Mode::center_only || tree.terminated ? NodeStatus::active : NodeStatus::exhausted;
    } else {
      n.status = blown && has_children ? NodeStatus::blown_up : NodeStatus::principal;
    }
  }
}

std::vector<Node> blow_up_point(const Node& node, MarkedPoint& point, const RunConfig& cfg) {
  if (!point.center) return {};
  const std::string prefix = is_origin(point.coords) ? node.id : node.id + "@" + point_string(point.coords);
  std::vector<Node> out;
  for (auto& chart : canonical_blowup(point.center->center, prefix)) {
    Node child;
    child.id = chart.id;
    child.parent = node.id;
    child.parent_point = point.coords;
    child.depth = node.depth + 1;
    child.parent_invariant = point.invariant;
    if (cfg.mode == Mode::embedded_resolve) {
      child.ideal = LocalIdeal(strict_transform_hypersurface(point.local.generators().front(), chart));
    } else {
      child.ideal = transform(point.local, chart).ideal;
    }
    child.chart = std::move(chart);
    child.points = find_marked_points(child, cfg, &child.search_log);
    check_descent(child, point.invariant);
    point.children.push_back(child.id);
    out.push_back(std::move(child));
  }
  return out;
}

BlowupTree drive(const LocalIdeal& ideal, const RunConfig& cfg) {
  if (cfg.max_steps < 1) throw ParseError("max_steps must be at least 1");
  BlowupTree tree;
  tree.config = cfg;
  tree.nodes.push_back(make_root(ideal, cfg));
  if (cfg.mode == Mode::center_only) {
    tree.terminated = true;
    finalize_status(tree);
    return tree;
  }
  while (true) {
    std::optional<Invariant> top;
    for (const auto& n : tree.nodes) {
      for (const auto& p : n.points) {
        if (pending(p, cfg.mode) && (!top || *top < p.invariant)) top = p.invariant;
      }
    }
    if (!top) {
      tree.terminated = true;
      break;
    }
    if (tree.steps == cfg.max_steps) break;
    ++tree.steps;
    std::vector<Node> fresh;
    const std::size_t count = tree.nodes.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (auto& p : tree.nodes[i].points) {
        if (!pending(p, cfg.mode) || p.invariant != *top) continue;
        auto kids = blow_up_point(tree.nodes[i], p, cfg);
        p.blown_up = true;
        p.step = tree.steps;
        for (auto& k : kids) fresh.push_back(std::move(k));
      }
    }
    for (auto& k : fresh) tree.nodes.push_back(std::move(k));
  }
  finalize_status(tree);
  return tree;
}

}  // namespace

std::vector<MarkedPoint> find_marked_points(const Node& node, const RunConfig& cfg, std::vector<std::string>* log) {
  const auto& vars = node.ideal.variables();
  const std::size_t n = vars->size();
  std::vector<std::vector<Rational>> candidates{std::vector<Rational>(n, Rational(0))};
  std::vector<std::string> sources{"origin"};
  auto note = [&](std::string line) {
    if (log) log->push_back(node.id + ": " + std::move(line));
  };
  note("origin");

  if (node.chart && cfg.point_search == PointSearch::rational_roots) {
    const std::size_t s = node.chart->exceptional;
    for (std::size_t v : node.chart->frame_slots) {
      if (v == s) continue;
      std::vector<Polynomial> images;
      for (std::size_t k = 0; k < n; ++k) images.push_back(k == v ? Polynomial::variable(vars, v) : Polynomial(vars));
      std::optional<std::vector<Rational>> common;
      bool gave_up = false;
      for (const auto& g : node.ideal.generators()) {
        const Polynomial r = g.substitute(images);
        if (r.is_zero()) continue;
        auto roots = rational_roots(r, v);
        if (!roots) {
          gave_up = true;
          break;
        }
        if (!common) {
          common = std::move(*roots);
        } else {
          std::vector<Rational> keep;
          std::set_intersection(common->begin(), common->end(), roots->begin(), roots->end(), std::back_inserter(keep));
          common = std::move(keep);
        }
      }
      const std::string axis = "axis " + (*vars)[v];
      if (gave_up) {
        note(axis + ": coefficients too large, skipped");
        continue;
      }
      if (!common) {
        note(axis + ": contained in the zero locus");
        continue;
      }
      std::string roots_text;
      for (const auto& r : *common) {
        if (r.is_zero()) continue;
        std::vector<Rational> pt(n, Rational(0));
        pt[v] = r;
        roots_text += " " + r.to_string();
        candidates.push_back(std::move(pt));
        sources.push_back(axis);
      }
      note(axis + ":" + (roots_text.empty() ? " no nonzero rational roots" : " roots" + roots_text));
    }
  }

  std::vector<MarkedPoint> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (node.chart) {
      bool vanishes = false;
      for (const auto& u : node.chart->unit_factors) vanishes = vanishes || u.evaluate(candidates[i]).is_zero();
      if (vanishes) {
        note(point_string(candidates[i]) + " skipped, outside the chart's domain");
        continue;
      }
    }
    out.push_back(make_point(node.ideal, std::move(candidates[i]), std::move(sources[i])));
  }
  return out;
}

BlowupTree principalize(const LocalIdeal& ideal, const RunConfig& cfg) {
  if (ideal.is_zero()) throw ArithmeticError("cannot principalize the zero ideal");
  RunConfig c = cfg;
  c.mode = Mode::principalize;
  return drive(ideal, c);
}

BlowupTree embedded_resolve(const Polynomial& f, const RunConfig& cfg) {
  if (f.is_zero()) throw ArithmeticError("cannot resolve the zero polynomial");
  RunConfig c = cfg;
  c.mode = Mode::embedded_resolve;
  return drive(LocalIdeal(f), c);
}

BlowupTree center_only(const LocalIdeal& ideal, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.mode = Mode::center_only;
  return drive(ideal, c);
}

BlowupTree run(const LocalIdeal& ideal, const RunConfig& cfg) {
  switch (cfg.mode) {
    case Mode::principalize:
      return principalize(ideal, cfg);
    case Mode::embedded_resolve:
      if (ideal.size() != 1) {
        throw ParseError("embedded resolution takes exactly one generator, got " + std::to_string(ideal.size()));
      }
      return embedded_resolve(ideal.generators().front(), cfg);
    case Mode::center_only:
      return center_only(ideal, cfg);
  }
  throw InternalError("unknown mode");
}

}  // namespace wblowup
