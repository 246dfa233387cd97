#include <benchmark/benchmark.h>

#include "hypertel/modular.hpp"
#include "hypertel/solver.hpp"

using namespace hypertel;

namespace {

ProperTerm h_omega(long omega) { return family_h_omega(omega); }

BiPoly dense_binomial_poly(long dn, long dk) {
    std::vector<std::vector<Int>> grid(dn + 1, std::vector<Int>(dk + 1));
    Int v(1);
    for (auto& row : grid)
        for (auto& cell : row) {
            cell = v;
            v = v * 3 + 1;
        }
    return BiPoly(KBasis::Binomial, std::move(grid));
}

void bipoly_product(benchmark::State& state) {
    BiPoly a = dense_binomial_poly(state.range(0), state.range(0));
    BiPoly b = dense_binomial_poly(state.range(0), state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(bipoly_product)->Arg(4)->Arg(8)->Arg(12);

void linear_multiplier_chain(benchmark::State& state) {
    BiPoly q = dense_binomial_poly(2, state.range(0));
    for (auto _ : state) {
        BiPoly acc = q;
        for (long i = 0; i < 8; ++i)
            acc = acc.mul_linear_binomial(Int(2), Int(-1), Int(i));
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(linear_multiplier_chain)->Arg(4)->Arg(16);

void az_construction(benchmark::State& state) {
    ProperTerm t = h_omega(state.range(0));
    long r = shape_params(t).nu;
    for (auto _ : state) benchmark::DoNotOptimize(build_az_polys(t, r));
}
BENCHMARK(az_construction)->Arg(1)->Arg(2)->Arg(3);

void system_nullspace(benchmark::State& state) {
    ProperTerm t = h_omega(state.range(0));
    PolyMatrix m = minimal_system(t);
    for (auto _ : state) benchmark::DoNotOptimize(nullspace_poly(m));
}
BENCHMARK(system_nullspace)->Arg(1)->Arg(2)->Arg(3);

void minimal_solve(benchmark::State& state) {
    ProperTerm t = h_omega(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_minimal(t));
}
BENCHMARK(minimal_solve)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void single_prime_solve(benchmark::State& state) {
    ProperTerm t = h_omega(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_minimal_mod(t, 1073741789ULL));
}
BENCHMARK(single_prime_solve)->Arg(1)->Arg(2)->Arg(3);

void modular_pipeline(benchmark::State& state) {
    ProperTerm t = h_omega(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(modular_telescoper(t));
}
BENCHMARK(modular_pipeline)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
