#include <wblowup_cli/cli.hpp>
#include <wblowup_cli/report.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "wblowup");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = wblowup::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wblowup_test_" + name);
}

}  // namespace

TEST(Cli, CenterPrintsInvariantAndRounding) {
  const auto r = run_cli({"center", "--vars", "x,y", "--gens", "x^2+x*y^2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("invariant (2, 4, inf)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("rounding (x^2, x*y^2, y^4)"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"principalize", "--vars", "x,y", "--gens", "x^2+y^3"}).code, 0);
  EXPECT_EQ(run_cli({"center", "--vars", "x,y", "--gens", "x^2+w"}).code, 2);
  EXPECT_EQ(run_cli({"center", "--vars", "x,y"}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"principalize", "--vars", "x,y", "--gens", "x^5+y^7", "--max-steps", "1"}).code, 3);
  EXPECT_EQ(run_cli({"resolve", "--vars", "x,y", "--gens", "x,y"}).code, 2);
  EXPECT_EQ(run_cli({"principalize", "--vars", "x,y", "--gens", "0"}).code, 1);
  EXPECT_EQ(run_cli({"center", "--vars", "x,y", "--gens", "x", "--point", "1,2,3"}).code, 2);
}

TEST(Cli, RepeatedGensAndPoints) {
  const auto r = run_cli({"center", "--vars", "x,y", "--gens", "x^2", "--gens", "(y-1)^3", "--point", "0,1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("point (0,1): invariant (2, 3, inf)"), std::string::npos) << r.out;
}

TEST(Cli, JsonReportIsDeterministic) {
  const auto a = temp_file("a.json");
  const auto b = temp_file("b.json");
  ASSERT_EQ(run_cli({"principalize", "--vars", "x,y,z", "--gens", "x^2+y^2*z", "--json", a.string()}).code, 0);
  ASSERT_EQ(run_cli({"principalize", "--vars", "x,y,z", "--gens", "x^2+y^2*z", "--json", b.string()}).code, 0);
  const std::string ta = slurp(a);
  EXPECT_EQ(ta, slurp(b));
  const auto j = wblowup::cli::Json::parse(ta);
  for (const char* key : {"input", "nodes", "steps", "terminated"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["nodes"][0]["id"], "root");
  EXPECT_EQ(j["nodes"][0]["points"][0]["invariant"], "(2, 3, 3, inf)");
  EXPECT_EQ(j["nodes"][0]["points"][0]["center"]["raw_orders"], wblowup::cli::Json::array({"2", "3", "6"}));
  EXPECT_EQ(j["nodes"][1]["chart"]["N"], "6");
  EXPECT_TRUE(j["terminated"].get<bool>());
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, InputFile) {
  const auto in = temp_file("in.json");
  {
    std::ofstream f(in);
    f << R"({"variables": ["x", "y"], "generators": ["x^2 + y^3"], "point": [0, 0], "max_steps": 10})";
  }
  const auto r = run_cli({"principalize", "--input", in.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("root/x"), std::string::npos);
  {
    std::ofstream f(in);
    f << R"({"variables": ["x"], "generators": ["x"], "mode": "resolve"})";
  }
  EXPECT_EQ(run_cli({"principalize", "--input", in.string()}).code, 2);
  {
    std::ofstream f(in);
    f << "{ not json";
  }
  EXPECT_EQ(run_cli({"center", "--input", in.string()}).code, 2);
  std::filesystem::remove(in);
}
