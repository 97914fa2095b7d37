#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hpcproj/catalog.hpp"
#include "hpcproj/errors.hpp"
#include "hpcproj/fitting.hpp"

namespace hpcproj {

/// Problem-size parameters of one dwarf test case.
struct problem_case {
    long long nsmax = 0;   // spectral truncation
    long long gridn = 0;   // latitude / grid count
    long long pts = 0;     // gridpoint count
    long long iterations = 0;
    long long fields = 0;
};

enum class loop_kind { compute_and_memory, memory_only };
enum class scaling_rule { spectral, gridpoint, explicit_value };

/// Work/traffic scaling description of one loop.
struct loop_spec {
    std::string name;
    loop_kind kind = loop_kind::memory_only;
    scaling_rule scaling = scaling_rule::gridpoint;
    std::optional<double> w_per_iteration;  // FLOP
    std::optional<double> q_per_iteration;  // B
    std::optional<double> intensity;        // FLOP/B
    std::optional<double> explicit_w;       // FLOP, scaling=explicit_value
    std::optional<double> explicit_q;       // B, scaling=explicit_value
};

/// Fitted memory-path weights (L1/L2/L3/DRAM) and compute fraction.
struct loop_coefficients {
    double v = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    std::optional<double> u;  // absent for memory-only loops
    std::optional<double> s;  // affine offset, GFLOP/s
};

/// Stored per-dwarf energy coefficients (idle-weighted regression).
struct energy_coefficients_record {
    double pkg_u = 0.0;
    double pkg_s = 0.0;
    double dram_x = 0.0;
    double dram_y = 0.0;
};

struct dwarf_model {
    std::string name;
    problem_case problem;
    double spectral_factor = 0.833;  // overridable empirical constant
    std::vector<std::pair<loop_spec, loop_coefficients>> loops;
    std::optional<energy_coefficients_record> energy;
};

/// Total FLOP of a loop under its scaling rule.
double estimate_w(const loop_spec& loop, const problem_case& pc,
                  double spectral_factor = 0.833);

enum class q_source { from_intensity, from_bytes_per_iter, explicit_value };

struct q_estimate {
    double bytes = 0.0;
    q_source source = q_source::from_bytes_per_iter;
};

/// Total bytes moved; uses W/I when an intensity is given, otherwise
/// the per-iteration byte rule. Reports which source was used.
q_estimate estimate_q(const loop_spec& loop, const problem_case& pc, double w,
                      double spectral_factor = 0.833);

struct memory_fit {
    double v = 0.0, x = 0.0, y = 0.0, z = 0.0;
    double residual_norm = 0.0;
};

/// Nonnegative least squares over L1*V + L2*X + L3*Y + DRAM*Z = R.
memory_fit fit_memory_coefficients(
    const std::vector<std::pair<cpu_state, double>>& measured_gbps,
    const cpu_spec& spec);

struct compute_fit {
    double u = 0.0;
    std::optional<double> s;
    double residual_norm = 0.0;
};

/// Least squares over P*U (+S) = M.
compute_fit fit_compute_coefficients(
    const std::vector<std::pair<cpu_state, double>>& measured_gflops,
    const cpu_spec& spec, bool affine);

/// Seconds per FLOP: 1 / (P*U [+ S]), P in GFLOP/s.
double t_flop(const cpu_state_values& v, const loop_coefficients& c);

/// Seconds per byte: 1 / (L1*V + L2*X + L3*Y + DRAM*Z), bandwidths GB/s.
double t_mop(const cpu_state_values& v, const loop_coefficients& c);

enum class bound_side { compute, memory, balanced };

struct loop_time_result {
    double seconds = 0.0;
    bound_side bound = bound_side::memory;
    double compute_s = 0.0;
    double memory_s = 0.0;
};

/// max(W * t_flop, Q * t_mop), reporting the binding side.
loop_time_result loop_time(double w, double q, double tflop, double tmop);

struct dwarf_time_result {
    std::vector<std::pair<std::string, loop_time_result>> per_loop;
    double total_s = 0.0;
};

/// Sum of loop times at a tabulated CPU state.
dwarf_time_result dwarf_time(const dwarf_model& model, const cpu_state& state,
                             const cpu_spec& spec);

/// Like dwarf_time but with every loop's W and Q scaled by `share`
/// (per-node evaluation of an equal partition).
dwarf_time_result dwarf_time_scaled(const dwarf_model& model,
                                    const cpu_state& state,
                                    const cpu_spec& spec, double share);

struct roofline_ceilings {
    double intensity = 0.0;
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
    double dram = 0.0;
    double peak = 0.0;  // GFLOP/s
};

/// Cache-aware ceilings min(peak, bw * I) for each memory level.
std::vector<roofline_ceilings> roofline_series(
    const cpu_spec& spec, const cpu_state& state,
    const std::vector<double>& intensities,
    std::optional<double> effective_peak = std::nullopt);

} // namespace hpcproj
