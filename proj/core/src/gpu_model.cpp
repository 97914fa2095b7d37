#include "hpcproj/gpu_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hpcproj {

namespace {

double instr_sum(const gpu_kernel_counters& c) {
    return c.instr_control_flow + c.instr_misc + c.instr_load_store +
           c.instr_fp32 + c.instr_fp64 + c.instr_bit_convert + c.instr_integer;
}

} // namespace

kernel_characteristics derive_characteristics(
    const std::vector<gpu_kernel_counters>& samples) {
    if (samples.empty()) {
        throw domain_error("derive_characteristics: no samples");
    }
    const double n = samples.front().domain_size;
    if (n <= 0) throw domain_error("derive_characteristics: domain size <= 0");

    kernel_characteristics out;
    out.name = samples.front().kernel;
    for (const auto& s : samples) {
        if (s.domain_size != n) {
            throw domain_error("derive_characteristics: samples of '" +
                               s.kernel + "' disagree on domain size");
        }
        if (s.instr_executed_warps <= 0) {
            throw domain_error("derive_characteristics: kernel '" + s.kernel +
                               "' on '" + s.device +
                               "' executed no warp instructions");
        }
        const double requested =
            s.req_load_bps + s.req_store_bps + s.req_load_nc_bps;
        const double achieved =
            s.achieved_load_bps + s.achieved_store_bps + s.achieved_load_nc_bps;
        if (achieved <= 0 && requested > 0) {
            throw domain_error("derive_characteristics: kernel '" + s.kernel +
                               "' on '" + s.device +
                               "' requested traffic with zero achieved "
                               "throughput");
        }

        const double slots = s.instr_executed_warps * 32.0;
        const double active = instr_sum(s) / slots;
        out.inactive_fraction += 1.0 - active;
        out.misc_fraction += s.instr_misc / slots;
        out.control_flow_fraction += s.instr_control_flow / slots;
        out.mem_request_efficiency += achieved > 0 ? requested / achieved : 1.0;
        out.requested_bytes_per_point += requested * s.duration_s / n;
        out.int_instr_per_point += s.instr_integer / n;
        out.fp32_instr_per_point += s.instr_fp32 / n;
        out.fp64_instr_per_point += s.instr_fp64 / n;
        out.warp_instr_per_point += s.instr_executed_warps / n;
        out.ipc += s.ipc_executed;
    }
    const double k = static_cast<double>(samples.size());
    out.inactive_fraction /= k;
    out.misc_fraction /= k;
    out.control_flow_fraction /= k;
    out.mem_request_efficiency /= k;
    out.requested_bytes_per_point /= k;
    out.int_instr_per_point /= k;
    out.fp32_instr_per_point /= k;
    out.fp64_instr_per_point /= k;
    out.warp_instr_per_point /= k;
    out.ipc /= k;
    return out;
}

double adjust_ge_fermi(double g_e, gpu_arch arch) {
    if (arch != gpu_arch::fermi) return g_e;
    return g_e < 0.40 ? g_e / 4.0 : g_e * 2.0 / 3.0;
}

gpu_time_breakdown predict_kernel(const kernel_characteristics& chars,
                                  const gpu_spec& gpu, double n) {
    if (chars.ipc <= 0) {
        throw domain_error("predict_kernel: kernel '" + chars.name +
                           "' has ipc <= 0");
    }
    const double g_e = adjust_ge_fermi(chars.mem_request_efficiency, gpu.arch);
    if (g_e <= 0) {
        throw domain_error("predict_kernel: kernel '" + chars.name +
                           "' has memory efficiency <= 0");
    }

    gpu_time_breakdown t;
    const double issue_rate = chars.ipc * gpu.gpu_clock_hz * gpu.sm_count;
    const double warp_instr = chars.warp_instr_per_point * n;
    t.inactive_s = chars.inactive_fraction * warp_instr / issue_rate;
    t.misc_s = chars.misc_fraction * warp_instr / issue_rate;
    t.control_flow_s = chars.control_flow_fraction * warp_instr / issue_rate;
    // FP peaks count an FMA as two FLOP, counters count instructions
    t.fp32_s = n * chars.fp32_instr_per_point * 2.0 / gpu.peak.fp32;
    t.fp64_s = n * chars.fp64_instr_per_point * 2.0 / gpu.peak.fp64;
    t.int_s = n * chars.int_instr_per_point / gpu.peak.integer;
    t.transfer_s =
        chars.requested_bytes_per_point * n / (gpu.bandwidth_bps * g_e);
    t.sim_s = t.inactive_s + t.misc_s + t.control_flow_s + t.fp32_s + t.fp64_s +
              t.int_s + t.transfer_s;
    return t;
}

gpu_dwarf_prediction predict_dwarf(
    const std::vector<kernel_characteristics>& kernels, const gpu_spec& gpu,
    double n) {
    if (kernels.empty()) throw domain_error("predict_dwarf: no kernels");
    gpu_dwarf_prediction out;
    out.kernels.reserve(kernels.size());
    for (const auto& k : kernels) {
        out.kernels.push_back(predict_kernel(k, gpu, n));
        out.total_s += out.kernels.back().sim_s;
    }
    return out;
}

roofline_sample roofline_point(double work_flop, double traffic_bytes,
                               double time_s) {
    if (traffic_bytes <= 0) throw domain_error("roofline_point: Q <= 0");
    if (time_s <= 0) throw domain_error("roofline_point: T <= 0");
    return {work_flop / traffic_bytes, work_flop / time_s};
}

double relative_difference(double t_sim, double t_prof) {
    if (t_prof <= 0) throw domain_error("relative_difference: t_prof <= 0");
    return t_sim / t_prof - 1.0;
}

double square_error(const std::vector<double>& differences) {
    if (differences.empty()) throw domain_error("square_error: empty list");
    double ss = 0;
    for (double d : differences) ss += d * d;
    return std::sqrt(ss / static_cast<double>(differences.size()));
}

difference_stats quality_metrics(const std::vector<double>& differences) {
    if (differences.empty()) throw domain_error("quality_metrics: empty list");
    difference_stats s;
    s.min = std::abs(differences.front());
    double sum = 0;
    for (double d : differences) {
        const double a = std::abs(d);
        s.max = std::max(s.max, a);
        s.min = std::min(s.min, a);
        sum += a;
    }
    const double k = static_cast<double>(differences.size());
    s.mean = sum / k;
    double var = 0;
    for (double d : differences) {
        const double dev = std::abs(d) - s.mean;
        var += dev * dev;
    }
    s.stddev = std::sqrt(var / k);
    return s;
}

} // namespace hpcproj
