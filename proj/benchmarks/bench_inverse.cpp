#include <benchmark/benchmark.h>

#include "vecinv/inverse.hpp"
#include "vecinv/parser.hpp"

using namespace vecinv;

namespace {

VectorField field(const char* system, const char* e1, const char* e2, const char* e3) {
    return make_vector_field({parse(e1), parse(e2), parse(e3)}, builtin(system));
}

void BM_Parse(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse("(x*y + z^2/4)^3 - sin(2*x + y)*exp(z) + x^-2*y/7"));
    }
}
BENCHMARK(BM_Parse);

void BM_Canonicalize(benchmark::State& state) {
    const Expression e = parse("(x + y + z + 1)^" + std::to_string(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(e));
}
BENCHMARK(BM_Canonicalize)->Arg(2)->Arg(4)->Arg(8);

void BM_InverseCurlCartesian(benchmark::State& state) {
    const VectorField b = field("cartesian", "x*y*z + y^2", "x*z + y", "-z - y*z^2/2");
    for (auto _ : state) benchmark::DoNotOptimize(inverse_curl(b));
}
BENCHMARK(BM_InverseCurlCartesian);

void BM_InverseCurlSpherical(benchmark::State& state) {
    const VectorField b = curl(field("spherical", "r^2*theta*phi", "r*phi^2 - theta^3", "r^3*theta^2*phi/5"));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_curl(b));
}
BENCHMARK(BM_InverseCurlSpherical);

void BM_InverseDivergence(benchmark::State& state) {
    const ScalarField f = make_scalar_field(parse("rho^3*phi^2*z - 2*rho*z^3/3 + phi"), builtin("cylindrical"));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_divergence(f));
}
BENCHMARK(BM_InverseDivergence);

void BM_InverseGradient(benchmark::State& state) {
    const VectorField a = gradient(make_scalar_field(parse("r^3*cos(theta)*phi^2 + r*theta"), builtin("spherical")));
    for (auto _ : state) benchmark::DoNotOptimize(inverse_gradient(a));
}
BENCHMARK(BM_InverseGradient);

}  // namespace

BENCHMARK_MAIN();
