#ifndef WBLOWUP_DRIVER_HPP
#define WBLOWUP_DRIVER_HPP

#include "wblowup/blowup.hpp"
#include "wblowup/canonical.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wblowup {

enum class Mode { principalize, embedded_resolve, center_only };
enum class PointSearch { origins_only, rational_roots, user_supplied };

struct RunConfig {
  std::size_t max_steps = 64;
  PointSearch point_search = PointSearch::rational_roots;
  Mode mode = Mode::principalize;
  /// Marked points of the root, in ambient coordinates. Empty means the origin.
  std::vector<std::vector<Rational>> points;
};

struct MarkedPoint {
  std::vector<Rational> coords;
  /// "origin", "user" or "axis <var>".
  std::string source;
  /// Node ideal translated so that the point is the origin.
  LocalIdeal local;
  Invariant invariant;
  /// Canonical center, present for points whose localization is not the unit
  /// ideal unless the divisor shortcut below applies.
  std::optional<CanonicalResult> center;
  /// Set when the local ideal is generated by one element g of order 1 whose
  /// contact element has no exact triangular form: the invariant is (1, inf),
  /// and blowing up the divisor (g) is the identity with unit transform, so the
  /// point is finished without a chart.
  std::optional<Polynomial> divisor;
  bool blown_up = false;
  /// Pass in which the point was blown up (1-based).
  std::size_t step = 0;
  std::vector<std::string> children;
};

enum class NodeStatus { active, principal, blown_up, exhausted };

struct Node {
  std::string id;
  /// Empty for the root.
  std::string parent;
  /// Chart of the parent's blowup (absent at the root); its parent variables are
  /// the parent's coordinates translated to parent_point.
  std::optional<Chart> chart;
  std::vector<Rational> parent_point;
  /// Transform (or strict transform) in chart coordinates.
  LocalIdeal ideal;
  std::vector<MarkedPoint> points;
  /// What the point search looked at, for the report.
  std::vector<std::string> search_log;
  /// Invariant of the blown-up parent point.
  std::optional<Invariant> parent_invariant;
  std::size_t depth = 0;
  NodeStatus status = NodeStatus::active;
};

struct BlowupTree {
  RunConfig config;
  std::vector<Node> nodes;
  std::size_t steps = 0;
  /// False when max_steps was hit with points still pending.
  bool terminated = false;

  const Node& root() const { return nodes.front(); }
  const Node* find(const std::string& id) const;
  std::vector<const Node*> children(const Node& node) const;
  std::vector<const Node*> leaves() const;
};

std::string to_string(Mode mode);
std::string to_string(NodeStatus status);
std::string point_string(const std::vector<Rational>& coords);

/// Candidate points of a non-root node: the chart origin and, unless the
/// search is origins_only, the rational roots of the restrictions of the ideal
/// to each coordinate axis of the fiber over the blown-up point (the primed
/// frame parameters; complement axes leave the fiber). Each candidate is
/// translated, its invariant computed, and points where the unit factors of
/// the chart vanish are skipped. All candidates are returned; the driver keeps
/// the maximal ones for blowing up.
std::vector<MarkedPoint> find_marked_points(const Node& node, const RunConfig& cfg,
                                            std::vector<std::string>* log = nullptr);

/// Dream principalization of I: repeated canonical blowups of the points of
/// maximal invariant until every searched point has unit transform. Asserts a
/// strict invariant drop on every edge (InternalError otherwise).
BlowupTree principalize(const LocalIdeal& ideal, const RunConfig& cfg = {});

/// Same loop tracking the strict transform of f; a point is finished once f
/// has order at most 1 there.
BlowupTree embedded_resolve(const Polynomial& f, const RunConfig& cfg = {});

/// Root points with their canonical centers, no blowups.
BlowupTree center_only(const LocalIdeal& ideal, const RunConfig& cfg = {});

/// Dispatches on cfg.mode; embedded_resolve requires a single generator.
BlowupTree run(const LocalIdeal& ideal, const RunConfig& cfg);

}  // namespace wblowup

#endif  // WBLOWUP_DRIVER_HPP
