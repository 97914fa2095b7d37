#pragma once

#include <string>
#include <vector>

#include "hpcproj/cpu_model.hpp"
#include "hpcproj/csv.hpp"
#include "hpcproj/errors.hpp"
#include "hpcproj/gpu_model.hpp"
#include "hpcproj/multinode.hpp"
#include "hpcproj/projection.hpp"

namespace hpcproj {

/// Dwarf model document: {name, problem{nsmax,gridn,pts,iter,fields},
/// spectral_factor?, loops:[{name,kind,scaling,w_per_iter?,q_per_iter?,
/// intensity?,explicit_w?,explicit_q?,coeffs{v,x,y,z,u?,s?}}],
/// energy:{pkg_u,pkg_s,dram_x,dram_y}?}.
dwarf_model load_dwarf_model(const std::string& json_text);
dwarf_model load_dwarf_model_file(const std::string& path);
std::string save_dwarf_model(const dwarf_model& model);

/// Kernel characteristics document: object keyed by kernel name, each
/// value holding the ten characteristic fields.
std::vector<kernel_characteristics> load_characteristics(
    const std::string& json_text);
std::vector<kernel_characteristics> load_characteristics_file(
    const std::string& path);
std::string save_characteristics(
    const std::vector<kernel_characteristics>& kernels);

/// Profiler counter ingestion. One row per (kernel, device, N); columns
/// carry the profiler's own names ("Duration(s)", "FP
/// Instructions(Double)", "Requested Global Load
/// Throughput(bytes/sec)", ...) plus "Kernel", "Device" and "Size of
/// computational domain".
std::vector<gpu_kernel_counters> load_counters_csv(const csv_table& table);
std::vector<gpu_kernel_counters> load_counters_file(const std::string& path);

/// Per-loop fit input: CSV rows (freq, cores, measured).
std::vector<std::pair<cpu_state, double>> load_fit_points_file(
    const std::string& path, const std::string& value_column);

struct energy_fit_input {
    std::vector<std::pair<double, double>> pkg_points;   // bench, measured
    std::vector<std::pair<double, double>> dram_points;  // bench, measured
    double pkg_idle_w = 0.0;
    double dram_idle_w = 0.0;
};

/// Energy fit input: CSV rows (freq, cores, bench_pkg_w, measured_pkg_w,
/// bench_dram_w, measured_dram_w); the row with cores = 0 is the idle
/// row.
energy_fit_input load_energy_fit_file(const std::string& path);

struct multinode_scenario {
    std::string dwarf;
    int nodes = 1;
    std::string cpu;
    cpu_state state;
    bool comm_additive = false;
    comm_pattern comm;
};

/// Scenario document: {dwarf, nodes, cpu, state:{freq,cores},
/// comm:{mode: overlap|additive, t_single_s_per_byte, q_in, q_out,
/// iterations, shape}}.
multinode_scenario load_scenario(const std::string& json_text);
multinode_scenario load_scenario_file(const std::string& path);

/// Workflow document: {name, timesteps, overlap, bindings:[{dwarf,
/// calls_per_timestep, device:{kind: cpu|gpu, ...}}]}.
workflow_spec load_workflow(const std::string& json_text);
workflow_spec load_workflow_file(const std::string& path);

/// Sweep grid document: {nodes:[], cores:[], freqs:[], cpus:[],
/// gpus:[]}; absent lists keep the workflow's own values.
config_grid load_grid(const std::string& json_text);
config_grid load_grid_file(const std::string& path);

} // namespace hpcproj
