#include "hpcproj/projection.hpp"

#include <algorithm>
#include <sstream>

namespace hpcproj {

std::string config_point::label() const {
    std::ostringstream os;
    os << "cpu=" << (cpu_name.empty() ? "-" : cpu_name)
       << ",gpu=" << (gpu_name.empty() ? "-" : gpu_name)
       << ",nodes=" << nodes << ",cores=" << cores
       << ",freq=" << (freq ? freq->str() : "-");
    return os.str();
}

namespace {

struct combined {
    double time_s = 0.0;
    double energy_j = 0.0;
    double const_draw_w = 0.0;
};

binding_result eval_cpu_binding(const dwarf_binding& b,
                                const cpu_device_binding& dev,
                                const config_point& cfg, const catalog& cat,
                                const model_registry& models,
                                energy_accounting energy_mode) {
    auto it = models.cpu_dwarfs.find(b.dwarf);
    if (it == models.cpu_dwarfs.end()) {
        throw config_error("binding '" + b.dwarf + "': unknown cpu dwarf");
    }
    const dwarf_model& model = it->second;

    const std::string cpu_name =
        cfg.cpu_name.empty() ? dev.cpu_name : cfg.cpu_name;
    cpu_state state = dev.state;
    if (cfg.freq) state.freq = *cfg.freq;
    if (cfg.cores > 0) state.cores = cfg.cores;
    const int nodes = cfg.nodes > 0 ? cfg.nodes : dev.nodes;
    if (nodes < 1) {
        throw config_error("binding '" + b.dwarf + "': node count < 1");
    }

    const cpu_spec& spec = cat.cpu(cpu_name);
    const double calls =
        static_cast<double>(b.calls_per_timestep) * 1.0;

    dwarf_time_result per_node;
    try {
        per_node = dwarf_time_scaled(model, state, spec, 1.0 / nodes);
    } catch (const missing_state_error& e) {
        throw config_error("binding '" + b.dwarf + "': " + e.what());
    }

    binding_result out;
    out.dwarf = b.dwarf;
    // identical nodes: the slowest node is any node
    out.time_s = per_node.total_s * calls;

    int n_compute = 0, n_memory = 0;
    for (const auto& [_, lt] : per_node.per_loop) {
        (lt.bound == bound_side::compute ? n_compute : n_memory)++;
    }
    out.bound = n_compute == 0  ? "memory"
                : n_memory == 0 ? "compute"
                                : "mixed";

    const energy_bench& bench = cat.bench(dev.energy_bench);
    double pkg_bench, dram_bench, pkg_idle, dram_idle;
    try {
        pkg_bench = bench.pkg(state);
        dram_bench = bench.dram(state);
        pkg_idle = bench.pkg_idle(state.freq);
        dram_idle = bench.dram_idle(state.freq);
    } catch (const missing_state_error& e) {
        throw config_error("binding '" + b.dwarf + "': " + e.what());
    }
    double pkg_power = pkg_bench;
    double dram_power = dram_bench;
    if (model.energy) {
        pkg_power = modeled_power(pkg_bench, pkg_idle, model.energy->pkg_u,
                                  model.energy->pkg_s);
        dram_power = modeled_power(dram_bench, dram_idle,
                                   model.energy->dram_x, model.energy->dram_y);
    }

    energy_breakdown node_energy;
    for (const auto& [_, lt] : per_node.per_loop) {
        const bool full = energy_mode == energy_accounting::full_duration;
        const double tc = full ? lt.seconds : lt.compute_s;
        const double tm = full ? lt.seconds : lt.memory_s;
        const energy_breakdown e = energy_single(tc, tm, pkg_power,
                                                 dram_power, pkg_idle,
                                                 dram_idle);
        node_energy.pkg_j += e.pkg_j;
        node_energy.dram_j += e.dram_j;
        node_energy.const_j += e.const_j;
        node_energy.total_j += e.total_j;
    }
    out.energy_j =
        energy_multinode(std::vector<energy_breakdown>(
            static_cast<size_t>(nodes), node_energy)) *
        calls;
    out.const_draw_w = (pkg_idle + dram_idle) * nodes;
    return out;
}

binding_result eval_gpu_binding(const dwarf_binding& b,
                                const gpu_device_binding& dev,
                                const config_point& cfg, const catalog& cat,
                                const model_registry& models) {
    auto it = models.gpu_dwarfs.find(b.dwarf);
    if (it == models.gpu_dwarfs.end()) {
        throw config_error("binding '" + b.dwarf + "': unknown gpu dwarf");
    }
    const std::string gpu_name =
        cfg.gpu_name.empty() ? dev.gpu_name : cfg.gpu_name;
    const gpu_spec& gpu = cat.gpu(gpu_name);
    if (gpu.max_domain_points > 0 && dev.domain_size > gpu.max_domain_points) {
        throw config_error("binding '" + b.dwarf + "': domain size exceeds "
                           "capacity of gpu '" + gpu_name + "'");
    }
    const gpu_power_spec& power = cat.power(
        dev.power_name.empty() ? gpu_name : dev.power_name);
    double s_fraction;
    if (dev.s_fraction) {
        s_fraction = *dev.s_fraction;
    } else if (power.default_s_fraction) {
        s_fraction = *power.default_s_fraction;
    } else {
        throw config_error("binding '" + b.dwarf +
                           "': no power-limit fraction available");
    }

    const double calls = static_cast<double>(b.calls_per_timestep);
    binding_result out;
    out.dwarf = b.dwarf;
    out.time_s = predict_dwarf(it->second, gpu, dev.domain_size).total_s * calls;
    out.energy_j = energy_gpu(out.time_s, dev.host_idle_w, s_fraction,
                              power.power_limit_w);
    out.const_draw_w = dev.host_idle_w;
    out.bound = "gpu";
    return out;
}

} // namespace

energy_accounting energy_accounting_from_string(const std::string& s) {
    if (s == "literal") return energy_accounting::literal;
    if (s == "full-duration" || s == "full_duration")
        return energy_accounting::full_duration;
    throw parse_error("unknown energy accounting mode '" + s + "'");
}

projection_result project_config(const workflow_spec& workflow,
                                 const config_point& config,
                                 const catalog& cat,
                                 const model_registry& models,
                                 energy_accounting energy_mode) {
    if (workflow.bindings.empty()) {
        throw config_error("workflow '" + workflow.name + "' has no bindings");
    }
    projection_result out;
    out.config = config;
    for (const auto& b : workflow.bindings) {
        binding_result r =
            std::holds_alternative<cpu_device_binding>(b.device)
                ? eval_cpu_binding(b, std::get<cpu_device_binding>(b.device),
                                   config, cat, models, energy_mode)
                : eval_gpu_binding(b, std::get<gpu_device_binding>(b.device),
                                   config, cat, models);
        const double steps = static_cast<double>(workflow.timesteps);
        r.time_s *= steps;
        r.energy_j *= steps;
        out.bindings.push_back(std::move(r));
    }

    // fold the two-architecture combination rule left to right
    combined acc{out.bindings.front().time_s, out.bindings.front().energy_j,
                 out.bindings.front().const_draw_w};
    for (size_t i = 1; i < out.bindings.size(); ++i) {
        const auto& b = out.bindings[i];
        const workflow_energy_inputs in{acc.energy_j, b.energy_j, acc.time_s,
                                        b.time_s, acc.const_draw_w,
                                        b.const_draw_w};
        combined next;
        if (workflow.overlap) {
            next.time_s = std::max(acc.time_s, b.time_s);
            next.energy_j = workflow_energy_overlap(in);
        } else {
            next.time_s = acc.time_s + b.time_s;
            next.energy_j = workflow_energy_no_overlap(in);
        }
        next.const_draw_w = acc.const_draw_w + b.const_draw_w;
        acc = next;
    }
    out.tts_s = acc.time_s;
    out.ets_j = acc.energy_j;
    return out;
}

sweep_result sweep(const workflow_spec& workflow, const config_grid& grid,
                   const catalog& cat, const model_registry& models,
                   energy_accounting energy_mode) {
    if (grid.nodes.empty() || grid.cores.empty() || grid.freqs.empty() ||
        grid.cpu_names.empty() || grid.gpu_names.empty()) {
        throw domain_error("sweep: empty configuration grid");
    }
    sweep_result out;
    for (const auto& cpu : grid.cpu_names)
        for (const auto& gpu : grid.gpu_names)
            for (int n : grid.nodes)
                for (int c : grid.cores)
                    for (const auto& f : grid.freqs) {
                        config_point cfg{n, c, f, cpu, gpu};
                        try {
                            out.results.push_back(
                                project_config(workflow, cfg, cat, models,
                                               energy_mode));
                        } catch (const config_error& e) {
                            out.invalid.emplace_back(cfg, e.what());
                        } catch (const missing_state_error& e) {
                            out.invalid.emplace_back(cfg, e.what());
                        }
                    }
    return out;
}

std::vector<projection_result> pareto_front(
    const std::vector<projection_result>& results) {
    std::vector<projection_result> front;
    for (const auto& r : results) {
        const bool dominated = std::any_of(
            results.begin(), results.end(), [&](const projection_result& o) {
                return o.tts_s <= r.tts_s && o.ets_j <= r.ets_j &&
                       (o.tts_s < r.tts_s || o.ets_j < r.ets_j);
            });
        if (!dominated) front.push_back(r);
    }
    std::stable_sort(front.begin(), front.end(),
                     [](const projection_result& a, const projection_result& b) {
                         return a.tts_s < b.tts_s;
                     });
    return front;
}

selection_policy policy_from_string(const std::string& s) {
    if (s == "min_tts") return selection_policy::min_tts;
    if (s == "min_ets") return selection_policy::min_ets;
    if (s == "lex_tts_ets") return selection_policy::lex_tts_ets;
    if (s == "lex_ets_tts") return selection_policy::lex_ets_tts;
    throw parse_error("unknown selection policy '" + s + "'");
}

const projection_result& best_by(const std::vector<projection_result>& results,
                                 selection_policy policy) {
    if (results.empty()) throw domain_error("best_by: empty result list");
    auto better = [policy](const projection_result& a,
                           const projection_result& b) {
        switch (policy) {
            case selection_policy::min_tts:
                return a.tts_s < b.tts_s;
            case selection_policy::min_ets:
                return a.ets_j < b.ets_j;
            case selection_policy::lex_tts_ets:
                return a.tts_s != b.tts_s ? a.tts_s < b.tts_s
                                          : a.ets_j < b.ets_j;
            case selection_policy::lex_ets_tts:
                return a.ets_j != b.ets_j ? a.ets_j < b.ets_j
                                          : a.tts_s < b.tts_s;
        }
        return false;
    };
    const projection_result* best = &results.front();
    for (const auto& r : results) {
        if (better(r, *best)) best = &r;  // strict: first wins ties
    }
    return *best;
}

} // namespace hpcproj
