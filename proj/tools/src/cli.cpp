#include "wblowup_cli/cli.hpp"

#include "wblowup_cli/report.hpp"

#include <wblowup/errors.hpp>
#include <wblowup/parse.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace wblowup::cli {

namespace {

struct Options {
  std::string input_file;
  std::string vars;
  std::vector<std::string> gens;
  std::vector<std::string> points;
  std::optional<std::size_t> max_steps;
  std::string json_file;
  bool trace = false;
};

Mode mode_from_name(const std::string& name) {
  if (name == "center" || name == "center_only") return Mode::center_only;
  if (name == "principalize") return Mode::principalize;
  if (name == "resolve" || name == "embedded_resolve") return Mode::embedded_resolve;
  throw ParseError("unknown mode '" + name + "'");
}

std::string json_scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("expected an integer or a string, got " + v.dump());
}

std::vector<Rational> json_point(const Json& v) {
  if (!v.is_array()) throw ParseError("a point must be an array, got " + v.dump());
  std::vector<Rational> out;
  for (const auto& c : v) out.push_back(Rational::parse(json_scalar(c)));
  return out;
}

InputSpec read_input(const Options& opt, Mode mode) {
  InputSpec spec;
  spec.mode = mode;
  if (!opt.input_file.empty()) {
    std::ifstream in(opt.input_file);
    if (!in) throw ParseError("cannot read input file " + opt.input_file);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::parse_error& e) {
      throw ParseError("input file " + opt.input_file + ": " + e.what());
    }
    if (j.contains("variables")) {
      for (const auto& v : j["variables"]) spec.variables.push_back(v.get<std::string>());
    }
    if (j.contains("generators")) {
      for (const auto& g : j["generators"]) spec.generators.push_back(json_scalar(g));
    }
    if (j.contains("point")) spec.points.push_back(json_point(j["point"]));
    if (j.contains("points")) {
      for (const auto& p : j["points"]) spec.points.push_back(json_point(p));
    }
    if (j.contains("mode") && mode_from_name(j["mode"].get<std::string>()) != mode) {
      throw ParseError("input file asks for mode " + j["mode"].get<std::string>() + " but the command is " +
                       to_string(mode));
    }
    if (j.contains("max_steps")) spec.max_steps = j["max_steps"].get<std::size_t>();
  }
  if (!opt.vars.empty()) spec.variables = split_list(opt.vars);
  if (!opt.gens.empty()) {
    spec.generators.clear();
    for (const auto& g : opt.gens) {
      for (auto& piece : split_list(g)) spec.generators.push_back(std::move(piece));
    }
  }
  if (!opt.points.empty()) {
    spec.points.clear();
    for (const auto& p : opt.points) spec.points.push_back(parse_point(p));
  }
  if (opt.max_steps) spec.max_steps = *opt.max_steps;
  if (spec.variables.empty()) throw ParseError("no variables given (use --vars or an input file)");
  if (spec.generators.empty()) throw ParseError("no generators given (use --gens or an input file)");
  return spec;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string join_integers(const std::vector<BigInt>& items) {
  std::vector<std::string> s;
  for (const auto& i : items) s.push_back(i.get_str());
  return "(" + join(s, ", ") + ")";
}

void print_center(std::ostream& out, const CanonicalResult& r, bool trace, const std::string& indent) {
  const WeightedCenter& c = r.center;
  out << indent << "center " << to_string(c) << "\n";
  if (c.is_trivial() || c.length() == 0) return;
  for (std::size_t i = 0; i < c.length(); ++i) {
    out << indent << "  t" << i + 1 << " = " << c.frame().element(i) << "  (exponent " << c.exponents()[i] << ")\n";
  }
  out << indent << "N = " << c.n().get_str() << ", weights " << join_integers(c.blowup_weights()) << "\n";
  if (r.raw_orders) out << indent << "raw orders " << join_integers(*r.raw_orders) << "\n";
  if (trace) {
    for (std::size_t i = 0; i < r.flag.size(); ++i) {
      out << indent << "  level " << i + 1 << ": order " << c.exponents()[i] << ", contact "
          << r.flag[i].element << " via " << r.flag[i].method << "\n";
    }
  }
}

void print_point(std::ostream& out, const MarkedPoint& p, bool trace) {
  out << "  point " << point_string(p.coords) << " [" << p.source << "]: invariant " << p.invariant << "\n";
  if (p.center) print_center(out, *p.center, trace, "    ");
  if (p.divisor) out << "    smooth divisor " << *p.divisor << ", identity blowup\n";
  if (p.blown_up) {
    out << "    blown up in step " << p.step;
    if (!p.children.empty()) out << " -> " << join(p.children, ", ");
    out << "\n";
  }
}

void print_tree(std::ostream& out, const BlowupTree& tree, bool trace) {
  for (const auto& n : tree.nodes) {
    out << n.id << " [" << to_string(n.status) << "]";
    if (n.chart) {
      const Chart& ch = *n.chart;
      std::vector<std::string> subst;
      for (std::size_t k = 0; k < ch.substitution.size(); ++k) {
        subst.push_back((*ch.parent_variables)[k] + " = " + ch.substitution[k].to_string());
      }
      out << " from " << n.parent << " at " << point_string(n.parent_point) << ": " << join(subst, ", ")
          << "; exceptional " << ch.exceptional_name() << ", N = " << ch.n.get_str() << ", mu_" << ch.mu_order.get_str()
          << " weights " << join_integers(ch.mu_weights);
    }
    out << "\n  " << (n.chart ? (tree.config.mode == Mode::embedded_resolve ? "strict transform " : "transform ")
                              : "ideal ")
        << n.ideal << "\n";
    if (trace) {
      for (const auto& line : n.search_log) out << "  search " << line << "\n";
    }
    for (const auto& p : n.points) print_point(out, p, trace);
  }
  out << "steps " << tree.steps << ", " << (tree.terminated ? "terminated" : "exhausted (max steps reached)") << "\n";
}

int execute(Mode mode, const Options& opt, std::ostream& out) {
  const InputSpec spec = read_input(opt, mode);
  const Variables vars = make_variables(spec.variables);
  std::vector<Polynomial> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_polynomial(g, vars));
  RunConfig cfg;
  cfg.mode = mode;
  cfg.max_steps = spec.max_steps;
  cfg.points = spec.points;
  for (const auto& p : cfg.points) {
    if (p.size() != spec.variables.size()) {
      throw ParseError("point " + point_string(p) + " has " + std::to_string(p.size()) + " coordinates for " +
                       std::to_string(spec.variables.size()) + " variables");
    }
  }
  const LocalIdeal ideal(vars, gens);
  if (mode == Mode::embedded_resolve && ideal.size() != 1) {
    throw ParseError("resolve takes exactly one generator");
  }
  const BlowupTree tree = run(ideal, cfg);

  if (mode == Mode::center_only) {
    out << "ideal " << ideal << " in " << join(spec.variables, ", ") << "\n";
    for (const auto& p : tree.root().points) {
      out << "point " << point_string(p.coords) << ": invariant " << p.invariant << "\n";
      if (p.center) {
        print_center(out, *p.center, opt.trace, "  ");
        if (!p.center->center.is_trivial() && p.center->center.length() > 0) {
          out << "  rounding " << rounding(p.center->center) << "\n";
        }
      }
    }
  } else {
    print_tree(out, tree, opt.trace);
  }

  if (!opt.json_file.empty()) {
    std::ofstream js(opt.json_file);
    if (!js) throw Error("cannot write " + opt.json_file);
    js << report_json(spec, tree).dump(2) << "\n";
  }
  return tree.terminated ? kOk : kExhausted;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical weighted centers, weighted blowups and dream principalization over Q", "wblowup"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input_file, "JSON input {variables, generators, point, mode, max_steps}");
    sub->add_option("--vars", opt.vars, "comma separated variable names");
    sub->add_option("--gens", opt.gens, "generators, comma or semicolon separated");
    sub->add_option("--point", opt.points, "marked point, e.g. 0,1/2 (repeatable)");
    sub->add_option("--max-steps", opt.max_steps, "blowup passes before giving up")->check(CLI::PositiveNumber);
    sub->add_option("--json", opt.json_file, "write the JSON report here");
    sub->add_flag("--trace", opt.trace, "print contact choices and the point search");
  };
  CLI::App* center = app.add_subcommand("center", "canonical center and invariant at the marked points");
  CLI::App* principalize = app.add_subcommand("principalize", "dream principalization of the ideal");
  CLI::App* resolve = app.add_subcommand("resolve", "embedded resolution of a hypersurface");
  for (auto* sub : {center, principalize, resolve}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  const Mode mode = center->parsed() ? Mode::center_only
                    : principalize->parsed() ? Mode::principalize
                                             : Mode::embedded_resolve;
  try {
    return execute(mode, opt, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const VariableMismatch& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const Json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace wblowup::cli
