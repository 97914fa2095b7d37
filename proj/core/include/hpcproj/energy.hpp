#pragma once

#include <vector>

#include "hpcproj/errors.hpp"
#include "hpcproj/fitting.hpp"

namespace hpcproj {

struct energy_fit {
    double load_coeff = 0.0;  // weight of the benchmarked loaded power
    double idle_coeff = 0.0;  // weight of the idle power
    double residual_norm = 0.0;
};

/// Least squares over bench * U + idle * S = measured. Points are
/// (benchmarked power, measured application power) pairs under load.
energy_fit fit_power_coefficients(
    const std::vector<std::pair<double, double>>& points, double idle_w);

/// bench * load_coeff + idle * idle_coeff.
double modeled_power(double bench_w, double idle_w, double load_coeff,
                     double idle_coeff);

struct energy_breakdown {
    double pkg_j = 0.0;
    double dram_j = 0.0;
    double const_j = 0.0;
    double total_j = 0.0;
};

/// Single-node energy: package power over the compute time, DRAM power
/// over the memory time, and the idle draw of the shorter side over the
/// gap between them.
/// compute_time_s = W * t_flop, memory_time_s = Q * t_mop. Passing the
/// full loop duration for both reproduces full-duration accounting.
energy_breakdown energy_single(double compute_time_s, double memory_time_s,
                               double pkg_power_w, double dram_power_w,
                               double pkg_idle_w, double dram_idle_w);

/// GPU energy: run time times (host package idle draw + the used
/// fraction of the GPU power limit).
double energy_gpu(double time_s, double cpu_pkg_idle_w, double s_fraction,
                  double power_limit_w);

/// Sum of per-node totals.
double energy_multinode(const std::vector<energy_breakdown>& per_node);

/// Two dwarfs on two architectures.
struct workflow_energy_inputs {
    double e1_j = 0.0;
    double e2_j = 0.0;
    double t1_s = 0.0;
    double t2_s = 0.0;
    double e1_const_w = 0.0;  // idle draw of architecture 1
    double e2_const_w = 0.0;  // idle draw of architecture 2
};

/// Serial execution: each architecture idles for the other's full run.
double workflow_energy_no_overlap(const workflow_energy_inputs& in);

/// Simultaneous execution: only the earlier finisher idles, for the
/// difference of the two durations.
double workflow_energy_overlap(const workflow_energy_inputs& in);

} // namespace hpcproj
