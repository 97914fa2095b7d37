#include "hpcproj/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hpcproj {

using nlohmann::json;

namespace {

json parse_doc(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(what + ": " + e.what());
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

freq_tag parse_freq(const json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "turbo") return freq_tag::turbo_state();
        throw parse_error(path + ": frequency must be a number or \"turbo\"");
    }
    if (!j.is_number()) {
        throw parse_error(path + ": frequency must be a number or \"turbo\"");
    }
    return freq_tag::of(j.get<double>());
}

loop_kind kind_from_string(const std::string& s, const std::string& path) {
    if (s == "compute_and_memory") return loop_kind::compute_and_memory;
    if (s == "memory_only") return loop_kind::memory_only;
    throw parse_error(path + ": unknown loop kind '" + s + "'");
}

std::string kind_to_string(loop_kind k) {
    return k == loop_kind::compute_and_memory ? "compute_and_memory"
                                              : "memory_only";
}

scaling_rule scaling_from_string(const std::string& s,
                                 const std::string& path) {
    if (s == "spectral") return scaling_rule::spectral;
    if (s == "gridpoint") return scaling_rule::gridpoint;
    if (s == "explicit") return scaling_rule::explicit_value;
    throw parse_error(path + ": unknown scaling rule '" + s + "'");
}

std::string scaling_to_string(scaling_rule r) {
    switch (r) {
        case scaling_rule::spectral: return "spectral";
        case scaling_rule::gridpoint: return "gridpoint";
        default: return "explicit";
    }
}

} // namespace

dwarf_model load_dwarf_model(const std::string& json_text) {
    const json doc = parse_doc(json_text, "dwarf model");
    dwarf_model m;
    try {
        m.name = doc.at("name").get<std::string>();
        const json& p = doc.at("problem");
        m.problem.nsmax = p.value("nsmax", 0LL);
        m.problem.gridn = p.value("gridn", 0LL);
        m.problem.pts = p.value("pts", 0LL);
        m.problem.iterations = p.at("iter").get<long long>();
        m.problem.fields = p.at("fields").get<long long>();
        m.spectral_factor = doc.value("spectral_factor", 0.833);
        size_t idx = 0;
        for (const auto& jl : doc.value("loops", json::array())) {
            const std::string lp = "loops[" + std::to_string(idx++) + "]";
            loop_spec spec;
            spec.name = jl.at("name").get<std::string>();
            spec.kind = kind_from_string(jl.at("kind").get<std::string>(),
                                         lp + ".kind");
            spec.scaling = scaling_from_string(
                jl.at("scaling").get<std::string>(), lp + ".scaling");
            if (jl.contains("w_per_iter"))
                spec.w_per_iteration = jl.at("w_per_iter").get<double>();
            if (jl.contains("q_per_iter"))
                spec.q_per_iteration = jl.at("q_per_iter").get<double>();
            if (jl.contains("intensity"))
                spec.intensity = jl.at("intensity").get<double>();
            if (jl.contains("explicit_w"))
                spec.explicit_w = jl.at("explicit_w").get<double>();
            if (jl.contains("explicit_q"))
                spec.explicit_q = jl.at("explicit_q").get<double>();
            loop_coefficients c;
            const json& jc = jl.at("coeffs");
            c.v = jc.value("v", 0.0);
            c.x = jc.value("x", 0.0);
            c.y = jc.value("y", 0.0);
            c.z = jc.value("z", 0.0);
            if (jc.contains("u")) c.u = jc.at("u").get<double>();
            if (jc.contains("s")) c.s = jc.at("s").get<double>();
            if (c.v < 0 || c.x < 0 || c.y < 0 || c.z < 0 ||
                (c.u && *c.u < 0)) {
                throw validation_error("dwarf model '" + m.name + "', " + lp +
                                       ": negative coefficient");
            }
            if (c.v == 0 && c.x == 0 && c.y == 0 && c.z == 0) {
                throw validation_error("dwarf model '" + m.name + "', " + lp +
                                       ": all memory weights are zero");
            }
            if (spec.kind == loop_kind::compute_and_memory &&
                spec.scaling != scaling_rule::explicit_value &&
                !spec.q_per_iteration && !spec.intensity) {
                throw validation_error(
                    "dwarf model '" + m.name + "', " + lp +
                    ": compute_and_memory loop needs q_per_iter or intensity");
            }
            m.loops.emplace_back(std::move(spec), c);
        }
        if (doc.contains("energy")) {
            const json& je = doc.at("energy");
            energy_coefficients_record e;
            e.pkg_u = je.at("pkg_u").get<double>();
            e.pkg_s = je.at("pkg_s").get<double>();
            e.dram_x = je.at("dram_x").get<double>();
            e.dram_y = je.at("dram_y").get<double>();
            m.energy = e;
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("dwarf model: ") + e.what());
    }
    return m;
}

dwarf_model load_dwarf_model_file(const std::string& path) {
    return load_dwarf_model(slurp(path));
}

std::string save_dwarf_model(const dwarf_model& model) {
    json doc;
    doc["name"] = model.name;
    doc["problem"] = {{"nsmax", model.problem.nsmax},
                      {"gridn", model.problem.gridn},
                      {"pts", model.problem.pts},
                      {"iter", model.problem.iterations},
                      {"fields", model.problem.fields}};
    doc["spectral_factor"] = model.spectral_factor;
    doc["loops"] = json::array();
    for (const auto& [spec, c] : model.loops) {
        json jl;
        jl["name"] = spec.name;
        jl["kind"] = kind_to_string(spec.kind);
        jl["scaling"] = scaling_to_string(spec.scaling);
        if (spec.w_per_iteration) jl["w_per_iter"] = *spec.w_per_iteration;
        if (spec.q_per_iteration) jl["q_per_iter"] = *spec.q_per_iteration;
        if (spec.intensity) jl["intensity"] = *spec.intensity;
        if (spec.explicit_w) jl["explicit_w"] = *spec.explicit_w;
        if (spec.explicit_q) jl["explicit_q"] = *spec.explicit_q;
        json jc = {{"v", c.v}, {"x", c.x}, {"y", c.y}, {"z", c.z}};
        if (c.u) jc["u"] = *c.u;
        if (c.s) jc["s"] = *c.s;
        jl["coeffs"] = std::move(jc);
        doc["loops"].push_back(std::move(jl));
    }
    if (model.energy) {
        doc["energy"] = {{"pkg_u", model.energy->pkg_u},
                         {"pkg_s", model.energy->pkg_s},
                         {"dram_x", model.energy->dram_x},
                         {"dram_y", model.energy->dram_y}};
    }
    return doc.dump(2) + "\n";
}

std::vector<kernel_characteristics> load_characteristics(
    const std::string& json_text) {
    const json doc = parse_doc(json_text, "kernel characteristics");
    std::vector<kernel_characteristics> out;
    try {
        for (const auto& [name, j] : doc.items()) {
            kernel_characteristics k;
            k.name = name;
            k.inactive_fraction = j.at("p_i").get<double>();
            k.misc_fraction = j.at("p_m").get<double>();
            k.control_flow_fraction = j.at("p_cfl").get<double>();
            k.mem_request_efficiency = j.at("g_e").get<double>();
            k.requested_bytes_per_point = j.at("g_r_n").get<double>();
            k.int_instr_per_point = j.at("i_i_n").get<double>();
            k.fp32_instr_per_point = j.at("i_f_n").get<double>();
            k.fp64_instr_per_point = j.at("i_d_n").get<double>();
            k.warp_instr_per_point = j.at("i_e_n").get<double>();
            k.ipc = j.at("ipc_e").get<double>();
            out.push_back(std::move(k));
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("kernel characteristics: ") + e.what());
    }
    return out;
}

std::vector<kernel_characteristics> load_characteristics_file(
    const std::string& path) {
    return load_characteristics(slurp(path));
}

std::string save_characteristics(
    const std::vector<kernel_characteristics>& kernels) {
    json doc = json::object();
    for (const auto& k : kernels) {
        doc[k.name] = {{"p_i", k.inactive_fraction},
                       {"p_m", k.misc_fraction},
                       {"p_cfl", k.control_flow_fraction},
                       {"g_e", k.mem_request_efficiency},
                       {"g_r_n", k.requested_bytes_per_point},
                       {"i_i_n", k.int_instr_per_point},
                       {"i_f_n", k.fp32_instr_per_point},
                       {"i_d_n", k.fp64_instr_per_point},
                       {"i_e_n", k.warp_instr_per_point},
                       {"ipc_e", k.ipc}};
    }
    return doc.dump(2) + "\n";
}

std::vector<gpu_kernel_counters> load_counters_csv(const csv_table& table) {
    for (const char* col :
         {"Kernel", "Device", "Duration(s)", "Instructions Executed",
          "Size of computational domain"}) {
        if (!table.has_column(col)) {
            throw parse_error(std::string("counters csv: missing column '") +
                              col + "'");
        }
    }
    std::vector<gpu_kernel_counters> out;
    out.reserve(table.rows());
    for (size_t r = 0; r < table.rows(); ++r) {
        gpu_kernel_counters c;
        c.kernel = table.at(r, "Kernel");
        c.device = table.at(r, "Device");
        c.duration_s = table.number(r, "Duration(s)");
        c.instr_control_flow = table.number(r, "Control Flow Instructions");
        c.instr_bit_convert = table.number(r, "Bit Convert Instructions");
        c.instr_misc = table.number(r, "Misc Instructions");
        c.instr_load_store = table.number(r, "Load/Store Instructions");
        c.instr_integer = table.number(r, "Integer Instructions");
        c.instr_fp32 = table.number(r, "FP Instructions(Single)");
        c.instr_fp64 = table.number(r, "FP Instructions(Double)");
        c.instr_executed_warps = table.number(r, "Instructions Executed");
        c.active_cycles = table.number(r, "Active Cycles");
        c.ipc_executed = table.number(r, "Executed IPC");
        c.req_load_bps =
            table.number(r, "Requested Global Load Throughput(bytes/sec)");
        c.req_store_bps =
            table.number(r, "Requested Global Store Throughput(bytes/sec)");
        c.req_load_nc_bps = table.number(
            r, "Requested Non Coherent Global Load Throughput(bytes/sec)");
        c.achieved_load_bps =
            table.number(r, "Global Load Throughput(bytes/sec)");
        c.achieved_store_bps =
            table.number(r, "Global Store Throughput(bytes/sec)");
        c.achieved_load_nc_bps = table.number(
            r, "Non Coherent Global Memory Load Throughput(bytes/sec)");
        c.domain_size = table.number(r, "Size of computational domain");
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<gpu_kernel_counters> load_counters_file(const std::string& path) {
    return load_counters_csv(csv_table::parse_file(path));
}

std::vector<std::pair<cpu_state, double>> load_fit_points_file(
    const std::string& path, const std::string& value_column) {
    const csv_table t = csv_table::parse_file(path);
    std::vector<std::pair<cpu_state, double>> out;
    for (size_t r = 0; r < t.rows(); ++r) {
        cpu_state s;
        const std::string& f = t.at(r, "freq");
        s.freq = (f == "turbo") ? freq_tag::turbo_state()
                                : freq_tag::of(t.number(r, "freq"));
        s.cores = static_cast<int>(t.number(r, "cores"));
        out.emplace_back(s, t.number(r, value_column));
    }
    return out;
}

energy_fit_input load_energy_fit_file(const std::string& path) {
    const csv_table t = csv_table::parse_file(path);
    energy_fit_input in;
    bool idle_seen = false;
    for (size_t r = 0; r < t.rows(); ++r) {
        const int cores = static_cast<int>(t.number(r, "cores"));
        if (cores == 0) {
            in.pkg_idle_w = t.number(r, "bench_pkg_w");
            in.dram_idle_w = t.number(r, "bench_dram_w");
            idle_seen = true;
        } else {
            in.pkg_points.emplace_back(t.number(r, "bench_pkg_w"),
                                       t.number(r, "measured_pkg_w"));
            in.dram_points.emplace_back(t.number(r, "bench_dram_w"),
                                        t.number(r, "measured_dram_w"));
        }
    }
    if (!idle_seen) {
        throw parse_error("energy fit csv '" + path +
                          "': no idle row (cores = 0)");
    }
    return in;
}

multinode_scenario load_scenario(const std::string& json_text) {
    const json doc = parse_doc(json_text, "scenario");
    multinode_scenario sc;
    try {
        sc.dwarf = doc.at("dwarf").get<std::string>();
        sc.nodes = doc.at("nodes").get<int>();
        sc.cpu = doc.at("cpu").get<std::string>();
        const json& js = doc.at("state");
        sc.state.freq = parse_freq(js.at("freq"), "state.freq");
        sc.state.cores = js.at("cores").get<int>();
        if (doc.contains("comm")) {
            const json& jc = doc.at("comm");
            const std::string mode = jc.at("mode").get<std::string>();
            if (mode == "additive") {
                sc.comm_additive = true;
            } else if (mode != "overlap") {
                throw parse_error(
                    "scenario comm.mode must be 'overlap' or 'additive'");
            }
            sc.comm.t_single_s_per_byte =
                jc.value("t_single_s_per_byte", 0.0);
            sc.comm.q_in_bytes = jc.value("q_in", 0.0);
            sc.comm.q_out_bytes = jc.value("q_out", 0.0);
            sc.comm.iterations = jc.value("iterations", 0LL);
            sc.comm.shape =
                comm_shape_from_string(jc.value("shape", std::string("none")));
        }
        if (!sc.comm_additive) sc.comm.shape = comm_shape::none;
    } catch (const json::exception& e) {
        throw parse_error(std::string("scenario: ") + e.what());
    }
    if (sc.nodes < 1) throw validation_error("scenario: nodes must be >= 1");
    return sc;
}

multinode_scenario load_scenario_file(const std::string& path) {
    return load_scenario(slurp(path));
}

workflow_spec load_workflow(const std::string& json_text) {
    const json doc = parse_doc(json_text, "workflow");
    workflow_spec wf;
    try {
        wf.name = doc.at("name").get<std::string>();
        wf.timesteps = doc.value("timesteps", 1LL);
        wf.overlap = doc.at("overlap").get<bool>();
        size_t idx = 0;
        for (const auto& jb : doc.at("bindings")) {
            const std::string bp = "bindings[" + std::to_string(idx++) + "]";
            dwarf_binding b;
            b.dwarf = jb.at("dwarf").get<std::string>();
            b.calls_per_timestep = jb.value("calls_per_timestep", 1LL);
            if (b.calls_per_timestep < 1) {
                throw validation_error("workflow " + bp +
                                       ": calls_per_timestep must be >= 1");
            }
            const json& jd = jb.at("device");
            const std::string kind = jd.at("kind").get<std::string>();
            if (kind == "cpu") {
                cpu_device_binding dev;
                dev.cpu_name = jd.at("cpu").get<std::string>();
                const json& js = jd.at("state");
                dev.state.freq = parse_freq(js.at("freq"), bp + ".freq");
                dev.state.cores = js.at("cores").get<int>();
                dev.nodes = jd.value("nodes", 1);
                dev.energy_bench = jd.value("energy_bench", std::string());
                b.device = dev;
            } else if (kind == "gpu") {
                gpu_device_binding dev;
                dev.gpu_name = jd.at("gpu").get<std::string>();
                dev.power_name = jd.value("power", std::string());
                dev.domain_size = jd.at("n").get<double>();
                dev.host_idle_w = jd.value("host_idle_w", 0.0);
                if (jd.contains("s_fraction"))
                    dev.s_fraction = jd.at("s_fraction").get<double>();
                b.device = dev;
            } else {
                throw parse_error("workflow " + bp +
                                  ": device.kind must be 'cpu' or 'gpu'");
            }
            wf.bindings.push_back(std::move(b));
        }
    } catch (const json::exception& e) {
        throw parse_error(std::string("workflow: ") + e.what());
    }
    return wf;
}

workflow_spec load_workflow_file(const std::string& path) {
    return load_workflow(slurp(path));
}

config_grid load_grid(const std::string& json_text) {
    const json doc = parse_doc(json_text, "sweep grid");
    config_grid g;
    try {
        if (doc.contains("nodes"))
            g.nodes = doc.at("nodes").get<std::vector<int>>();
        if (doc.contains("cores"))
            g.cores = doc.at("cores").get<std::vector<int>>();
        if (doc.contains("freqs")) {
            g.freqs.clear();
            for (const auto& jf : doc.at("freqs"))
                g.freqs.push_back(parse_freq(jf, "freqs"));
        }
        if (doc.contains("cpus"))
            g.cpu_names = doc.at("cpus").get<std::vector<std::string>>();
        if (doc.contains("gpus"))
            g.gpu_names = doc.at("gpus").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw parse_error(std::string("sweep grid: ") + e.what());
    }
    for (auto* v : {&g.nodes, &g.cores}) {
        if (v->empty()) v->push_back(0);
    }
    if (g.freqs.empty()) g.freqs.push_back(std::nullopt);
    if (g.cpu_names.empty()) g.cpu_names.push_back("");
    if (g.gpu_names.empty()) g.gpu_names.push_back("");
    return g;
}

config_grid load_grid_file(const std::string& path) {
    return load_grid(slurp(path));
}

} // namespace hpcproj
