// Bitset kernels vs. the serial std::set reference on catalog-sized and
// base-expanded inputs.

#include <benchmark/benchmark.h>

#include "mstd/constructions.hpp"
#include "mstd/core_sets.hpp"
#include "mstd/reference.hpp"

using namespace mstd;

namespace {

IntSet expanded(int64_t t) { return base_expand(catalog("A_1"), t, std::nullopt); }

void bm_bitset_profile(benchmark::State& state, const IntSet& a) {
    for (auto _ : state) {
        SumDiffProfile p = profile(a);
        benchmark::DoNotOptimize(p.delta);
    }
    state.SetItemsProcessed(state.iterations() * a.size());
}

void bm_reference_profile(benchmark::State& state, const IntSet& a) {
    for (auto _ : state) {
        ref::Profile p = ref::profile(a.elements());
        benchmark::DoNotOptimize(p.sum_size);
    }
    state.SetItemsProcessed(state.iterations() * a.size());
}

} // namespace

BENCHMARK_CAPTURE(bm_bitset_profile, catalog_27_elems, catalog("A_14"));
BENCHMARK_CAPTURE(bm_reference_profile, catalog_27_elems, catalog("A_14"));
BENCHMARK_CAPTURE(bm_bitset_profile, expanded_64_elems, expanded(2));
BENCHMARK_CAPTURE(bm_reference_profile, expanded_64_elems, expanded(2));
BENCHMARK_CAPTURE(bm_bitset_profile, expanded_512_elems, expanded(3));
BENCHMARK_CAPTURE(bm_reference_profile, expanded_512_elems, expanded(3));

BENCHMARK_MAIN();
