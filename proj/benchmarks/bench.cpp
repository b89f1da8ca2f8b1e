#include "cycleforge/bifurcation/ggt.hpp"
#include "cycleforge/dynamics/families.hpp"
#include "cycleforge/dynamics/numeric.hpp"
#include "cycleforge/exactalg/parse.hpp"
#include "cycleforge/lyapunov/normalize.hpp"
#include "cycleforge/lyapunov/quantities.hpp"
#include "cycleforge/resultants/cascade.hpp"
#include "cycleforge/resultants/resultant.hpp"

#include <benchmark/benchmark.h>

using namespace cycleforge;

static void BM_ResultantBivariate(benchmark::State& state) {
    auto f = parse_qpoly("x^3*y + 2*x^2*y^2 - 3*x + y^3 - 1");
    auto g = parse_qpoly("x^2*y^2 - x*y + 5*x^3 - 2*y + 7");
    for (auto _ : state) benchmark::DoNotOptimize(resultant(f, g, "x"));
}
BENCHMARK(BM_ResultantBivariate);

static void BM_LyapunovP4(benchmark::State& state) {
    auto nf = to_rational(normalize_at(family_P4(), Rational(0), Rational(0)));
    for (auto _ : state) benchmark::DoNotOptimize(lyapunov_quantities(nf, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LyapunovP4)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_CascadeP4(benchmark::State& state) {
    auto nf = to_rational(normalize_at(family_P4(), Rational(0), Rational(0)));
    auto L = lyapunov_quantities(nf, 4).quantities;
    for (auto _ : state) benchmark::DoNotOptimize(cascade(L, {"a11", "a02", "b20"}, 2));
}
BENCHMARK(BM_CascadeP4)->Unit(benchmark::kMillisecond);

static void BM_GGT(benchmark::State& state) {
    const char* label = state.range(0) == 7 ? "P7" : "P8";
    auto setup = canned_setup(label);
    for (auto _ : state) benchmark::DoNotOptimize(ggt_analyze(setup));
}
BENCHMARK(BM_GGT)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ReturnMap(benchmark::State& state) {
    auto vf = family_P4().bind({{"a11", Rational(1)}, {"a02", Rational(1, 2)}, {"b20", Rational(-1, 3)}, {"b11", Rational(1, 4)}});
    NumericField field(vf);
    auto radii = log_radii(1e-3, 1e-1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(return_map(field, {0, 0}, {1, 0}, radii));
}
BENCHMARK(BM_ReturnMap)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
