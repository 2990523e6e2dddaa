#include "wblowup_cli/report.hpp"

namespace wblowup::cli {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.to_string());
  return out;
}

Json integers(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.get_str());
  return out;
}

}  // namespace

Json center_json(const CanonicalResult& result) {
  const WeightedCenter& c = result.center;
  Json out;
  out["text"] = to_string(c);
  out["invariant"] = result.invariant.to_string();
  if (c.is_trivial()) return out;
  Json frame = Json::array();
  const auto& vars = *c.variables();
  for (std::size_t i = 0; i < c.length(); ++i) {
    const auto& e = c.frame().entries()[i];
    frame.push_back({{"slot", vars[e.slot]},
                     {"parameter", c.frame().element(i).to_string()},
                     {"tail", e.tail_string()},
                     {"exponent", c.exponents()[i].to_string()}});
  }
  out["frame"] = std::move(frame);
  out["exponents"] = rationals(c.exponents());
  if (!c.frame().coords().is_identity()) {
    Json rows = Json::array();
    for (const auto& row : c.frame().coords().matrix()) rows.push_back(rationals(row));
    out["coordinate_change"] = std::move(rows);
  }
  out["raw_orders"] = result.raw_orders ? integers(*result.raw_orders) : Json();
  if (c.length() > 0) {
    out["N"] = c.n().get_str();
    out["weights"] = integers(c.blowup_weights());
  }
  return out;
}

Json chart_json(const Chart& chart) {
  Json subst = Json::object();
  for (std::size_t k = 0; k < chart.substitution.size(); ++k) {
    subst[(*chart.parent_variables)[k]] = chart.substitution[k].to_string();
  }
  Json out{{"id", chart.id},
           {"parent", chart.parent},
           {"variables", chart.variables->names()},
           {"substitution", std::move(subst)},
           {"exceptional", chart.exceptional_name()},
           {"N", chart.n.get_str()},
           {"weights", integers(chart.weights)},
           {"mu", {{"order", chart.mu_order.get_str()}, {"weights", integers(chart.mu_weights)}}}};
  if (!chart.unit_factors.empty()) {
    Json units = Json::array();
    for (const auto& u : chart.unit_factors) units.push_back(u.to_string());
    out["unit_factors"] = std::move(units);
  }
  return out;
}

Json point_json(const MarkedPoint& point) {
  Json out{{"coords", rationals(point.coords)},
           {"source", point.source},
           {"invariant", point.invariant.to_string()},
           {"center", point.center ? center_json(*point.center) : Json()}};
  if (point.divisor) out["divisor"] = point.divisor->to_string();
  out["blown_up"] = point.blown_up;
  if (point.blown_up) out["step"] = point.step;
  out["children"] = point.children;
  return out;
}

Json node_json(const Node& node) {
  Json gens = Json::array();
  for (const auto& g : node.ideal.generators()) gens.push_back(g.to_string());
  Json points = Json::array();
  for (const auto& p : node.points) points.push_back(point_json(p));
  return {{"id", node.id},
          {"parent", node.parent.empty() ? Json() : Json(node.parent)},
          {"depth", node.depth},
          {"chart", node.chart ? chart_json(*node.chart) : Json()},
          {"parent_point", node.chart ? rationals(node.parent_point) : Json()},
          {"parent_invariant", node.parent_invariant ? Json(node.parent_invariant->to_string()) : Json()},
          {"variables", node.ideal.variables()->names()},
          {"generators", std::move(gens)},
          {"points", std::move(points)},
          {"search", node.search_log},
          {"status", to_string(node.status)}};
}

Json input_json(const InputSpec& input) {
  Json pts = Json::array();
  for (const auto& p : input.points) pts.push_back(rationals(p));
  return {{"variables", input.variables},
          {"generators", input.generators},
          {"points", std::move(pts)},
          {"mode", to_string(input.mode)},
          {"max_steps", input.max_steps}};
}

Json report_json(const InputSpec& input, const BlowupTree& tree) {
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) nodes.push_back(node_json(n));
  return {{"input", input_json(input)},
          {"nodes", std::move(nodes)},
          {"steps", tree.steps},
          {"terminated", tree.terminated}};
}

}  // namespace wblowup::cli
