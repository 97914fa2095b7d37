#include <benchmark/benchmark.h>

#include <random>

#include "hpcproj/fitting.hpp"
#include "hpcproj/model_io.hpp"
#include "hpcproj/projection.hpp"

using namespace hpcproj;

namespace {

std::string data(const std::string& n) {
    return std::string(HPCPROJ_TEST_DATA_DIR) + "/" + n;
}

const catalog& cat() {
    static catalog c = load_catalog_file(data("catalog.json"));
    return c;
}

} // namespace

static void BM_PredictKernel(benchmark::State& state) {
    const auto kernels = load_characteristics_file(data("acraneb2_chars.json"));
    const auto& gpu = cat().gpu("geforce-970");
    for (auto _ : state) {
        for (const auto& k : kernels) {
            benchmark::DoNotOptimize(predict_kernel(k, gpu, 3.2e6));
        }
    }
}
BENCHMARK(BM_PredictKernel);

static void BM_DwarfTime(benchmark::State& state) {
    const auto m = load_dwarf_model_file(data("sh_tco639.json"));
    const auto& spec = cat().cpu("xeon-e5-2697v3");
    cpu_state st{freq_tag::of(2.6), 14};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dwarf_time(m, st, spec));
    }
}
BENCHMARK(BM_DwarfTime);

static void BM_MemoryFit(benchmark::State& state) {
    const auto& spec = cat().cpu("xeon-e5-2697v3");
    std::vector<std::pair<cpu_state, double>> pts;
    for (const auto& s : spec.state_list()) {
        const auto& v = spec.lookup(s);
        pts.emplace_back(s, 0.3 * v.bw_l1 + 0.1 * v.bw_l3 + 0.9 * v.bw_dram);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit_memory_coefficients(pts, spec));
    }
}
BENCHMARK(BM_MemoryFit);

static void BM_ParetoFront(benchmark::State& state) {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(1.0, 100.0);
    std::vector<projection_result> pts(static_cast<size_t>(state.range(0)));
    for (auto& p : pts) {
        p.tts_s = u(rng);
        p.ets_j = u(rng);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(pareto_front(pts));
    }
}
BENCHMARK(BM_ParetoFront)->Arg(64)->Arg(512);

BENCHMARK_MAIN();
