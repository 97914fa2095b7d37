#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpcproj/errors.hpp"

namespace hpcproj {

/// Operating frequency of a CPU. "turbo" is a discrete named state,
/// not a number; it compares after all numeric frequencies.
struct freq_tag {
    double ghz = 0.0;
    bool turbo = false;

    static freq_tag of(double ghz) { return {ghz, false}; }
    static freq_tag turbo_state() { return {0.0, true}; }

    friend std::partial_ordering operator<=>(const freq_tag& a,
                                             const freq_tag& b) {
        if (a.turbo != b.turbo) return a.turbo <=> b.turbo;
        return a.ghz <=> b.ghz;
    }
    friend bool operator==(const freq_tag&, const freq_tag&) = default;

    std::string str() const;
};

/// (frequency, active cores) operating point. Hyper-Threading off.
struct cpu_state {
    freq_tag freq;
    int cores = 0;

    friend auto operator<=>(const cpu_state&, const cpu_state&) = default;
};

/// Measured capability of a CPU at one operating point.
struct cpu_state_values {
    double perf_gflops = 0.0;
    double bw_l1 = 0.0;   // GB/s
    double bw_l2 = 0.0;
    double bw_l3 = 0.0;
    double bw_dram = 0.0;
};

struct cpu_spec {
    std::string name;
    int physical_cores = 0;
    int vector_width_doubles = 0;
    int fma_ops_per_cycle = 0;
    std::map<cpu_state, cpu_state_values> states;

    /// Exact tabulated lookup; throws missing_state_error otherwise.
    const cpu_state_values& lookup(const cpu_state& s) const;

    std::vector<cpu_state> state_list() const;
};

enum class gpu_arch { fermi, kepler, maxwell, other };

std::string to_string(gpu_arch a);
gpu_arch gpu_arch_from_string(const std::string& s);

struct gpu_peak_set {
    double fp64 = 0.0;  // FLOP/s
    double fp32 = 0.0;
    double integer = 0.0;  // OP/s
};

struct gpu_spec {
    std::string name;
    gpu_arch arch = gpu_arch::other;
    double gpu_clock_hz = 0.0;
    double mem_clock_hz = 0.0;   // informational
    int mem_bus_bits = 0;        // informational
    int sm_count = 0;
    int ops_per_clock_fp64 = 0;
    int ops_per_clock_fp32 = 0;
    int ops_per_clock_int = 0;
    gpu_peak_set peak;           // published peaks take precedence
    double bandwidth_bps = 0.0;  // B/s
    double max_domain_points = 0.0;  // 0 = no declared capacity limit
};

/// Peaks derived from clock/SM/per-SM issue width. FP peaks count an
/// FMA as two FLOP; the integer peak does not.
gpu_peak_set gpu_peaks(const gpu_spec& spec);

/// Peak DP performance in GFLOP/s: freq * vector width * vector ops
/// per clock * cores.
double cpu_peak_performance(double freq_ghz, int vector_width,
                            int vector_ops_per_clock, int cores);

/// Benchmarked package / DRAM power per operating state. Values are
/// watts (source measurements over 1 s windows, so J double as W).
struct energy_bench {
    std::string name;
    std::map<cpu_state, double> pkg_power_w;
    std::map<cpu_state, double> dram_power_w;
    std::map<freq_tag, double> pkg_idle_w;
    std::map<freq_tag, double> dram_idle_w;

    double pkg(const cpu_state& s) const;
    double dram(const cpu_state& s) const;
    double pkg_idle(const freq_tag& f) const;
    double dram_idle(const freq_tag& f) const;
};

struct gpu_power_spec {
    std::string name;
    double power_limit_w = 0.0;
    std::optional<double> default_s_fraction;  // in [0,1]
};

/// Immutable after load; safe to share across readers.
struct catalog {
    std::map<std::string, cpu_spec> cpus;
    std::map<std::string, gpu_spec> gpus;
    std::map<std::string, energy_bench> energy_benches;
    std::map<std::string, gpu_power_spec> gpu_power;

    const cpu_spec& cpu(const std::string& name) const;
    const gpu_spec& gpu(const std::string& name) const;
    const energy_bench& bench(const std::string& name) const;
    const gpu_power_spec& power(const std::string& name) const;
};

/// Parse and validate a catalog JSON document.
/// Throws parse_error on schema violations (message names the offending
/// path) and validation_error on invariant breaches.
catalog load_catalog(const std::string& json_text);
catalog load_catalog_file(const std::string& path);

} // namespace hpcproj
