#include <doctest.h>

#include <cmath>
#include <map>

#include "hpcproj/gpu_model.hpp"
#include "test_data.hpp"

using namespace hpcproj;

namespace {

// Independently hand-evaluated per-kernel simulated times at
// N = 3.2e6 (exact component sums), frozen as the reference oracle.
const std::map<std::string, std::map<std::string, double>> kSimOracle = {
    {"geforce-970",
     {{"acraneb_transt3_212_gpu_A", 8.860774319244e-01},
      {"acraneb_transt3_341_gpu_A", 7.201864882697e-01},
      {"acraneb_transt3_463_gpu_A", 1.259089490817e+00},
      {"acraneb_transt3_589_gpu_A", 1.220790307712e-01},
      {"acraneb_transt3_649_gpu_A", 1.612889221279e+00},
      {"acraneb_transt3_827_gpu_A", 1.191544847154e+00},
      {"acraneb_transt3_956_gpu_A", 1.254511103540e-01},
      {"TOTAL", 5.917317620570e+00}}},
    {"tesla-k20m",
     {{"acraneb_transt3_212_gpu_A", 9.646217452324e-01},
      {"acraneb_transt3_341_gpu_A", 7.962124275291e-01},
      {"acraneb_transt3_463_gpu_A", 1.058357001124e+00},
      {"acraneb_transt3_589_gpu_A", 1.673967773623e-01},
      {"acraneb_transt3_649_gpu_A", 1.801819126017e+00},
      {"acraneb_transt3_827_gpu_A", 1.048651816040e+00},
      {"acraneb_transt3_956_gpu_A", 1.781107475380e-01},
      {"TOTAL", 6.015169640843e+00}}},
    {"tesla-2070q",
     {{"acraneb_transt3_212_gpu_A", 9.121309490827e-01},
      {"acraneb_transt3_341_gpu_A", 7.745168001347e-01},
      {"acraneb_transt3_463_gpu_A", 1.170567271627e+00},
      {"acraneb_transt3_589_gpu_A", 1.620615707994e-01},
      {"acraneb_transt3_649_gpu_A", 1.559137866437e+00},
      {"acraneb_transt3_827_gpu_A", 1.132410002791e+00},
      {"acraneb_transt3_956_gpu_A", 1.635293957869e-01},
      {"TOTAL", 5.874353856659e+00}}},
};

} // namespace

TEST_CASE("predict_kernel matches the frozen hand-evaluated oracle") {
    const auto& cat = testdata::catalog();
    const auto& kernels = testdata::acraneb2();
    for (const auto& [gpu_name, expected] : kSimOracle) {
        const auto& gpu = cat.gpu(gpu_name);
        double total = 0;
        for (const auto& k : kernels) {
            auto t = predict_kernel(k, gpu, 3.2e6);
            REQUIRE(expected.count(k.name) == 1);
            CHECK(t.sim_s ==
                  doctest::Approx(expected.at(k.name)).epsilon(1e-9));
            total += t.sim_s;
        }
        CHECK(total == doctest::Approx(expected.at("TOTAL")).epsilon(1e-9));
        auto dwarf = predict_dwarf(kernels, gpu, 3.2e6);
        CHECK(dwarf.total_s ==
              doctest::Approx(expected.at("TOTAL")).epsilon(1e-9));
        CHECK(dwarf.kernels.size() == kernels.size());
    }
}

TEST_CASE("sim_s is the exact component sum") {
    const auto& gpu = testdata::catalog().gpu("tesla-k20m");
    for (const auto& k : testdata::acraneb2()) {
        auto t = predict_kernel(k, gpu, 3.2e6);
        double sum = t.inactive_s + t.misc_s + t.control_flow_s + t.fp32_s +
                     t.fp64_s + t.int_s + t.transfer_s;
        CHECK(t.sim_s == sum);
    }
}

TEST_CASE("prediction is homogeneous (linear) in N") {
    const auto& gpu = testdata::catalog().gpu("geforce-970");
    const auto& k = testdata::acraneb2().front();
    auto base = predict_kernel(k, gpu, 4e5);
    for (double n : {8e5, 3.2e6}) {
        auto t = predict_kernel(k, gpu, n);
        double scale = n / 4e5;
        CHECK(t.sim_s == doctest::Approx(base.sim_s * scale).epsilon(1e-12));
        CHECK(t.transfer_s ==
              doctest::Approx(base.transfer_s * scale).epsilon(1e-12));
        CHECK(t.fp64_s == doctest::Approx(base.fp64_s * scale).epsilon(1e-12));
    }
}

TEST_CASE("N = 0 predicts zero everywhere") {
    const auto& gpu = testdata::catalog().gpu("geforce-970");
    auto t = predict_kernel(testdata::acraneb2().front(), gpu, 0.0);
    CHECK(t.sim_s == 0.0);
    CHECK(t.transfer_s == 0.0);
}

TEST_CASE("fermi memory-efficiency adjustment") {
    CHECK(adjust_ge_fermi(0.30, gpu_arch::fermi) == doctest::Approx(0.075));
    CHECK(adjust_ge_fermi(0.40, gpu_arch::fermi) ==
          doctest::Approx(0.40 * 2.0 / 3.0));
    CHECK(adjust_ge_fermi(0.60, gpu_arch::fermi) ==
          doctest::Approx(0.40));
    // identity off fermi
    CHECK(adjust_ge_fermi(0.30, gpu_arch::kepler) == 0.30);
    CHECK(adjust_ge_fermi(0.30, gpu_arch::maxwell) == 0.30);
    // output never exceeds input; upward jump at the threshold
    CHECK(adjust_ge_fermi(0.3999, gpu_arch::fermi) <
          adjust_ge_fermi(0.40, gpu_arch::fermi));
    for (double g = 0.01; g < 1.0; g += 0.01) {
        CHECK(adjust_ge_fermi(g, gpu_arch::fermi) <= g);
    }
}

TEST_CASE("derive_characteristics round trip") {
    // Synthesize counters from known characteristics on two fictitious
    // devices and check the unweighted device mean recovers them.
    kernel_characteristics want;
    want.name = "k";
    want.inactive_fraction = 0.65;
    want.misc_fraction = 0.08;
    want.control_flow_fraction = 0.015;
    want.mem_request_efficiency = 0.31;
    want.requested_bytes_per_point = 660.0;
    want.int_instr_per_point = 3.7e3;
    want.fp32_instr_per_point = 9.2e2;
    want.fp64_instr_per_point = 9.1e3;
    want.warp_instr_per_point = 1.9e3;
    want.ipc = 0.58;

    std::vector<gpu_kernel_counters> samples;
    const double n = 4e5;
    for (std::string dev : {"devA", "devB"}) {
        gpu_kernel_counters c;
        c.kernel = "k";
        c.device = dev;
        c.domain_size = n;
        c.duration_s = dev == "devA" ? 1.0 : 2.0;  // same bytes, slower run
        c.instr_executed_warps = want.warp_instr_per_point * n;
        c.instr_integer = want.int_instr_per_point * n;
        c.instr_fp32 = want.fp32_instr_per_point * n;
        c.instr_fp64 = want.fp64_instr_per_point * n;
        c.instr_misc = want.misc_fraction * c.instr_executed_warps * 32.0;
        c.instr_control_flow =
            want.control_flow_fraction * c.instr_executed_warps * 32.0;
        // active share = int + fp32 + fp64 + misc/ls/cf/bc threads
        double active = c.instr_integer + c.instr_fp32 + c.instr_fp64;
        c.instr_load_store =
            (1.0 - want.inactive_fraction) * c.instr_executed_warps * 32.0 -
            active - c.instr_misc - c.instr_control_flow;
        c.instr_bit_convert = 0.0;
        c.ipc_executed = want.ipc;
        c.req_load_bps =
            want.requested_bytes_per_point * n / c.duration_s;
        c.req_store_bps = 0.0;
        c.req_load_nc_bps = 0.0;
        c.achieved_load_bps = c.req_load_bps / want.mem_request_efficiency;
        c.achieved_store_bps = 0.0;
        c.achieved_load_nc_bps = 0.0;
        samples.push_back(c);
    }
    auto got = derive_characteristics(samples);
    CHECK(got.inactive_fraction ==
          doctest::Approx(want.inactive_fraction).epsilon(1e-12));
    CHECK(got.misc_fraction ==
          doctest::Approx(want.misc_fraction).epsilon(1e-12));
    CHECK(got.control_flow_fraction ==
          doctest::Approx(want.control_flow_fraction).epsilon(1e-12));
    CHECK(got.mem_request_efficiency ==
          doctest::Approx(want.mem_request_efficiency).epsilon(1e-12));
    CHECK(got.requested_bytes_per_point ==
          doctest::Approx(want.requested_bytes_per_point).epsilon(1e-12));
    CHECK(got.warp_instr_per_point ==
          doctest::Approx(want.warp_instr_per_point).epsilon(1e-12));
    CHECK(got.ipc == doctest::Approx(want.ipc).epsilon(1e-12));
}

TEST_CASE("derive_characteristics rejects empty input") {
    CHECK_THROWS_AS(derive_characteristics({}), domain_error);
}

TEST_CASE("roofline_point and intensity scale invariance") {
    auto p = roofline_point(6.40e11, 4.39e10, 1.18e1);
    CHECK(p.intensity == doctest::Approx(14.6).epsilon(0.01));
    CHECK(p.performance / 1e9 == doctest::Approx(54.2).epsilon(0.01));
    auto scaled = roofline_point(6.40e11 * 3, 4.39e10 * 3, 1.18e1);
    CHECK(scaled.intensity == doctest::Approx(p.intensity).epsilon(1e-12));
    CHECK_THROWS_AS(roofline_point(1.0, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(roofline_point(1.0, 1.0, 0.0), domain_error);
}

TEST_CASE("relative_difference and square_error") {
    CHECK(relative_difference(1.1, 1.0) == doctest::Approx(0.1));
    CHECK(relative_difference(0.9, 1.0) == doctest::Approx(-0.1));
    CHECK_THROWS_AS(relative_difference(1.0, 0.0), domain_error);
    CHECK(square_error({0.1, -0.1}) == doctest::Approx(0.1));
    CHECK(square_error({0.05}) == doctest::Approx(0.05));
    CHECK(square_error({0.0, 0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(square_error({}), domain_error);
    // Seven per-kernel differences evaluated from full-precision
    // simulated/profiled pairs; the rounded headline figure is 8%.
    std::vector<double> diffs = {-0.0338, -0.0490, 0.0099, 0.1759,
                                 0.0286,  0.0225,  0.0666};
    CHECK(square_error(diffs) == doctest::Approx(0.0759).epsilon(0.01));
}

TEST_CASE("quality_metrics on absolute differences") {
    auto s = quality_metrics({0.1, -0.3});
    CHECK(s.max == doctest::Approx(0.3));
    CHECK(s.min == doctest::Approx(0.1));
    CHECK(s.mean == doctest::Approx(0.2));
    CHECK(s.stddev == doctest::Approx(0.1));
    auto one = quality_metrics({0.05});
    CHECK(one.max == doctest::Approx(0.05));
    CHECK(one.stddev == 0.0);
    CHECK_THROWS_AS(quality_metrics({}), domain_error);
}

TEST_CASE("measured vs simulated energy pairs metrics") {
    // Nine measured/simulated energy pairs for the FFT dwarf.
    const double m[] = {298.08,   1940.28, 6740.8,  291.27,     1937.2,
                        6367.35,  300.5533, 1921.705, 6871.2};
    const double s[] = {305.5483945, 1944.655154, 6784.060006,
                        295.5290953, 1867.5104,   6258.223867,
                        294.2090385, 1848.455974, 6453.66827};
    std::vector<double> diffs;
    for (int i = 0; i < 9; ++i) diffs.push_back(relative_difference(s[i], m[i]));
    auto q = quality_metrics(diffs);
    CHECK(std::round(q.max * 1e4) / 1e2 == doctest::Approx(6.08));
    CHECK(std::round(q.min * 1e4) / 1e2 == doctest::Approx(0.23));
}
