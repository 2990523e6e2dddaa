#include <wblowup/canonical.hpp>
#include <wblowup/driver.hpp>
#include <wblowup/parse.hpp>

#include <benchmark/benchmark.h>

using namespace wblowup;

namespace {

LocalIdeal ideal_of(const char* gens, std::vector<std::string> names) {
  const Variables vars = make_variables(std::move(names));
  std::vector<Polynomial> out;
  for (const auto& g : split_list(gens)) out.push_back(parse_polynomial(g, vars));
  return LocalIdeal(vars, std::move(out));
}

void BM_PolynomialPower(benchmark::State& state) {
  const Variables vars = make_variables({"x", "y", "z"});
  const Polynomial f = parse_polynomial("x^2 + 3*x*y - 1/2*y^2*z + z^3 + 7", vars);
  for (auto _ : state) benchmark::DoNotOptimize(f.pow(static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_PolynomialPower)->Arg(4)->Arg(8)->Arg(12);

void BM_CanonicalCenter(benchmark::State& state, const char* gens) {
  const LocalIdeal ideal = ideal_of(gens, {"x", "y", "z"});
  for (auto _ : state) benchmark::DoNotOptimize(canonical_center(ideal));
}
BENCHMARK_CAPTURE(BM_CanonicalCenter, paper, "x^2 + x*y^2");
BENCHMARK_CAPTURE(BM_CanonicalCenter, whitney, "x^2 + y^2*z");
BENCHMARK_CAPTURE(BM_CanonicalCenter, cubic, "x^3 + y^3*z + z^5");
BENCHMARK_CAPTURE(BM_CanonicalCenter, cubic_cubed, "(x^3 + y^3*z + z^5)^3");

void BM_Principalize(benchmark::State& state, const char* gens) {
  const LocalIdeal ideal = ideal_of(gens, {"x", "y", "z"});
  for (auto _ : state) benchmark::DoNotOptimize(principalize(ideal));
}
BENCHMARK_CAPTURE(BM_Principalize, cusp, "x^2 + y^3");
BENCHMARK_CAPTURE(BM_Principalize, whitney, "x^2 + y^2*z");
BENCHMARK_CAPTURE(BM_Principalize, e8, "x^2 + y^3 + z^5");

}  // namespace

BENCHMARK_MAIN();
