#pragma once

#include <string>
#include <vector>

#include "hpcproj/catalog.hpp"
#include "hpcproj/errors.hpp"

namespace hpcproj {

/// Raw profiler counters for one kernel run on one device.
/// Instruction counts are summed over all threads; throughputs are B/s.
struct gpu_kernel_counters {
    std::string kernel;
    std::string device;
    double duration_s = 0.0;
    double instr_control_flow = 0.0;
    double instr_bit_convert = 0.0;
    double instr_misc = 0.0;
    double instr_load_store = 0.0;
    double instr_integer = 0.0;
    double instr_fp32 = 0.0;
    double instr_fp64 = 0.0;
    double instr_executed_warps = 0.0;  // warp-level instruction count
    double active_cycles = 0.0;         // carried, unused by the time model
    double ipc_executed = 0.0;
    double req_load_bps = 0.0;
    double req_store_bps = 0.0;
    double req_load_nc_bps = 0.0;
    double achieved_load_bps = 0.0;
    double achieved_store_bps = 0.0;
    double achieved_load_nc_bps = 0.0;
    double domain_size = 0.0;  // product of domain dimensions
};

/// Device-averaged, size-normalized kernel description. All *_per_point
/// fields are per domain point.
struct kernel_characteristics {
    std::string name;
    double inactive_fraction = 0.0;      // p_i
    double misc_fraction = 0.0;          // p_m
    double control_flow_fraction = 0.0;  // p_cfl
    double mem_request_efficiency = 0.0; // g_e, requested / fetched
    double requested_bytes_per_point = 0.0;
    double int_instr_per_point = 0.0;
    double fp32_instr_per_point = 0.0;
    double fp64_instr_per_point = 0.0;
    double warp_instr_per_point = 0.0;
    double ipc = 0.0;
};

/// Predicted kernel time split by activity; sim_s is the exact
/// component sum.
struct gpu_time_breakdown {
    double inactive_s = 0.0;
    double misc_s = 0.0;
    double control_flow_s = 0.0;
    double fp32_s = 0.0;
    double fp64_s = 0.0;
    double int_s = 0.0;
    double transfer_s = 0.0;
    double sim_s = 0.0;
};

struct gpu_dwarf_prediction {
    std::vector<gpu_time_breakdown> kernels;
    double total_s = 0.0;
};

/// Average per-device counter samples of one kernel (same domain size)
/// into device-neutral characteristics.
kernel_characteristics derive_characteristics(
    const std::vector<gpu_kernel_counters>& samples);

/// Memory-efficiency correction for the Fermi generation: 1/4 below a
/// 40% efficiency threshold, 2/3 at or above it. Identity elsewhere.
double adjust_ge_fermi(double g_e, gpu_arch arch);

/// Evaluate the per-kernel time model at domain size n. Applies the
/// Fermi adjustment internally, keyed on gpu.arch.
gpu_time_breakdown predict_kernel(const kernel_characteristics& chars,
                                  const gpu_spec& gpu, double n);

gpu_dwarf_prediction predict_dwarf(
    const std::vector<kernel_characteristics>& kernels, const gpu_spec& gpu,
    double n);

struct roofline_sample {
    double intensity = 0.0;    // FLOP/B
    double performance = 0.0;  // FLOP/s
};

/// (W/Q, W/T) for a measured or predicted run.
roofline_sample roofline_point(double work_flop, double traffic_bytes,
                               double time_s);

/// Signed prediction error: t_sim / t_prof - 1.
double relative_difference(double t_sim, double t_prof);

/// Root-mean-square of a list of differences.
double square_error(const std::vector<double>& differences);

struct difference_stats {
    double max = 0.0;
    double min = 0.0;
    double mean = 0.0;
    double stddev = 0.0;  // population
};

/// Max/min/mean/stddev of |difference|.
difference_stats quality_metrics(const std::vector<double>& differences);

} // namespace hpcproj
