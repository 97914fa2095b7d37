#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hpcproj/catalog.hpp"
#include "hpcproj/cpu_model.hpp"
#include "hpcproj/energy.hpp"
#include "hpcproj/gpu_model.hpp"
#include "hpcproj/multinode.hpp"

namespace hpcproj {

/// CPU-side placement of a dwarf: multinode run at one operating state.
struct cpu_device_binding {
    std::string cpu_name;
    cpu_state state;
    int nodes = 1;
    std::string energy_bench;  // bench powers for the energy model
};

/// GPU placement: kernel set evaluated at a fixed domain size.
struct gpu_device_binding {
    std::string gpu_name;
    std::string power_name;  // gpu_power entry in the catalog
    double domain_size = 0.0;
    double host_idle_w = 0.0;  // idle draw of the host package
    std::optional<double> s_fraction;  // overrides the power spec default
};

struct dwarf_binding {
    std::string dwarf;  // name in the model registry
    std::variant<cpu_device_binding, gpu_device_binding> device;
    long long calls_per_timestep = 1;
};

struct workflow_spec {
    std::string name;
    std::vector<dwarf_binding> bindings;
    long long timesteps = 1;
    bool overlap = false;  // bindings run simultaneously vs serially
};

/// Dwarf models addressable by name.
struct model_registry {
    std::map<std::string, dwarf_model> cpu_dwarfs;
    std::map<std::string, std::vector<kernel_characteristics>> gpu_dwarfs;
};

/// One point of a hardware sweep. Empty names / zero counts keep the
/// binding's own values.
struct config_point {
    int nodes = 0;
    int cores = 0;
    std::optional<freq_tag> freq;
    std::string cpu_name;
    std::string gpu_name;

    std::string label() const;
};

struct binding_result {
    std::string dwarf;
    double time_s = 0.0;
    double energy_j = 0.0;
    double const_draw_w = 0.0;  // architecture idle draw, for composition
    std::string bound;          // compute/memory mix tag (CPU bindings)
};

struct projection_result {
    config_point config;
    double tts_s = 0.0;
    double ets_j = 0.0;
    std::vector<binding_result> bindings;
};

/// CPU energy accounting: "literal" charges the package over W*t_flop
/// and the DRAM over Q*t_mop plus an idle term over the gap;
/// "full_duration" charges both domains over the whole loop time.
enum class energy_accounting { literal, full_duration };

energy_accounting energy_accounting_from_string(const std::string& s);

/// Evaluate one workflow at one configuration. Times combine by max
/// (overlap) or sum (serial); energies combine by the two-architecture
/// workflow rule, folded pairwise left to right for more bindings.
projection_result project_config(const workflow_spec& workflow,
                                 const config_point& config,
                                 const catalog& cat,
                                 const model_registry& models,
                                 energy_accounting energy_mode);

struct config_grid {
    std::vector<int> nodes{0};
    std::vector<int> cores{0};
    std::vector<std::optional<freq_tag>> freqs{std::nullopt};
    std::vector<std::string> cpu_names{""};
    std::vector<std::string> gpu_names{""};
};

struct sweep_result {
    std::vector<projection_result> results;
    std::vector<std::pair<config_point, std::string>> invalid;  // config, why
};

/// Cross-product sweep; invalid configurations are reported, never
/// silently dropped. Result order follows grid order.
sweep_result sweep(const workflow_spec& workflow, const config_grid& grid,
                   const catalog& cat, const model_registry& models,
                   energy_accounting energy_mode);

/// All results not strictly dominated in (tts, ets), sorted by tts
/// ascending; ties kept.
std::vector<projection_result> pareto_front(
    const std::vector<projection_result>& results);

enum class selection_policy { min_tts, min_ets, lex_tts_ets, lex_ets_tts };

selection_policy policy_from_string(const std::string& s);

/// Deterministic winner; ties broken by input order.
const projection_result& best_by(const std::vector<projection_result>& results,
                                 selection_policy policy);

} // namespace hpcproj
