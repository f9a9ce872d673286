#include <random>

#include <benchmark/benchmark.h>

#include "caytop/cayley.hpp"
#include "caytop/coloring.hpp"
#include "caytop/group.hpp"
#include "caytop/lattice.hpp"
#include "caytop/ncomplex.hpp"
#include "caytop/pi1.hpp"

namespace {

using namespace caytop;

IntMatrix random_matrix(std::size_t n, std::mt19937_64& eng) {
    IntMatrix a(n, n);
    std::uniform_int_distribution<int> d(-20, 20);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.at(i, j) = d(eng);
    return a;
}

void bm_smith_normal_form(benchmark::State& state) {
    std::mt19937_64 eng(12345);
    auto n = static_cast<std::size_t>(state.range(0));
    std::vector<IntMatrix> pool;
    for (int i = 0; i < 16; ++i) pool.push_back(random_matrix(n, eng));
    std::size_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(smith_normal_form(pool[k++ % pool.size()]));
    }
}
BENCHMARK(bm_smith_normal_form)->Arg(4)->Arg(6)->Arg(8);

void bm_chromatic_circulant(benchmark::State& state) {
    auto n = static_cast<long long>(state.range(0));
    FgAbelianGroup g = FgAbelianGroup::parse("Z/" + std::to_string(n));
    GroupElement one = g.basis_element(0);
    auto s = SymmetricSet::symmetrize(g, {one, g.scalar_mul(2, one)});
    Graph x = build_cayley(g, s, CayleyScope::whole_group).graph();
    for (auto _ : state) {
        benchmark::DoNotOptimize(chromatic_number_exact(x));
    }
}
BENCHMARK(bm_chromatic_circulant)->Arg(24)->Arg(60)->Arg(120);

void bm_pi1_pipeline(benchmark::State& state) {
    auto n = static_cast<long long>(state.range(0));
    FgAbelianGroup g = FgAbelianGroup::parse("Z/" + std::to_string(n));
    GroupElement one = g.basis_element(0);
    auto s = SymmetricSet::symmetrize(
        g, {one, g.scalar_mul(2, one), g.scalar_mul(3, one), g.scalar_mul(4, one)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(pi1_invariants(s));
        benchmark::DoNotOptimize(pi1_even_invariants(s));
    }
}
BENCHMARK(bm_pi1_pipeline)->Arg(30)->Arg(90);

void bm_neighborhood_h1(benchmark::State& state) {
    auto n = static_cast<long long>(state.range(0));
    FgAbelianGroup g = FgAbelianGroup::parse("Z/" + std::to_string(n));
    GroupElement one = g.basis_element(0);
    auto s = SymmetricSet::symmetrize(g, {one, g.scalar_mul(2, one)});
    Graph x = build_cayley(g, s, CayleyScope::whole_group).graph();
    for (auto _ : state) {
        Complex2 nc = neighborhood_complex_2skeleton(x);
        benchmark::DoNotOptimize(h1_invariants(nc));
    }
}
BENCHMARK(bm_neighborhood_h1)->Arg(12)->Arg(24);

} // namespace

BENCHMARK_MAIN();
