#ifndef WBLOWUP_CLI_REPORT_HPP
#define WBLOWUP_CLI_REPORT_HPP

#include <wblowup/driver.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace wblowup::cli {

using Json = nlohmann::ordered_json;

struct InputSpec {
  std::vector<std::string> variables;
  std::vector<std::string> generators;
  std::vector<std::vector<Rational>> points;
  Mode mode = Mode::principalize;
  std::size_t max_steps = 64;
};

Json center_json(const CanonicalResult& result);
Json chart_json(const Chart& chart);
Json point_json(const MarkedPoint& point);
Json node_json(const Node& node);
Json input_json(const InputSpec& input);

/// { input, nodes, steps, terminated }. Identical trees give identical text.
Json report_json(const InputSpec& input, const BlowupTree& tree);

}  // namespace wblowup::cli

#endif  // WBLOWUP_CLI_REPORT_HPP
