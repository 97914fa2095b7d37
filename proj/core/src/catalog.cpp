#include "hpcproj/catalog.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hpcproj {

using nlohmann::json;

std::string freq_tag::str() const {
    if (turbo) return "turbo";
    std::ostringstream os;
    os << ghz;
    return os.str();
}

const cpu_state_values& cpu_spec::lookup(const cpu_state& s) const {
    auto it = states.find(s);
    if (it == states.end()) {
        throw missing_state_error("cpu '" + name + "': state (" + s.freq.str() +
                                  " GHz, " + std::to_string(s.cores) +
                                  " cores) is not tabulated");
    }
    return it->second;
}

std::vector<cpu_state> cpu_spec::state_list() const {
    std::vector<cpu_state> out;
    out.reserve(states.size());
    for (const auto& [s, _] : states) out.push_back(s);
    return out;
}

std::string to_string(gpu_arch a) {
    switch (a) {
        case gpu_arch::fermi: return "fermi";
        case gpu_arch::kepler: return "kepler";
        case gpu_arch::maxwell: return "maxwell";
        default: return "other";
    }
}

gpu_arch gpu_arch_from_string(const std::string& s) {
    if (s == "fermi" || s == "Fermi") return gpu_arch::fermi;
    if (s == "kepler" || s == "Kepler") return gpu_arch::kepler;
    if (s == "maxwell" || s == "Maxwell") return gpu_arch::maxwell;
    if (s == "other" || s == "Other") return gpu_arch::other;
    throw parse_error("unknown gpu microarchitecture '" + s + "'");
}

gpu_peak_set gpu_peaks(const gpu_spec& spec) {
    const double base = spec.gpu_clock_hz * spec.sm_count;
    gpu_peak_set p;
    p.fp64 = base * spec.ops_per_clock_fp64 * 2.0;
    p.fp32 = base * spec.ops_per_clock_fp32 * 2.0;
    p.integer = base * spec.ops_per_clock_int;  // no FMA doubling
    return p;
}

double cpu_peak_performance(double freq_ghz, int vector_width,
                            int vector_ops_per_clock, int cores) {
    return freq_ghz * vector_width * vector_ops_per_clock * cores;
}

namespace {

double map_at(const std::map<cpu_state, double>& m, const cpu_state& s,
              const std::string& what, const std::string& name) {
    auto it = m.find(s);
    if (it == m.end()) {
        throw missing_state_error("energy bench '" + name + "': no " + what +
                                  " entry for (" + s.freq.str() + ", " +
                                  std::to_string(s.cores) + ")");
    }
    return it->second;
}

double idle_at(const std::map<freq_tag, double>& m, const freq_tag& f,
               const std::string& what, const std::string& name) {
    auto it = m.find(f);
    if (it == m.end()) {
        throw missing_state_error("energy bench '" + name + "': no " + what +
                                  " idle entry for frequency " + f.str());
    }
    return it->second;
}

} // namespace

double energy_bench::pkg(const cpu_state& s) const {
    return map_at(pkg_power_w, s, "pkg", name);
}
double energy_bench::dram(const cpu_state& s) const {
    return map_at(dram_power_w, s, "dram", name);
}
double energy_bench::pkg_idle(const freq_tag& f) const {
    return idle_at(pkg_idle_w, f, "pkg", name);
}
double energy_bench::dram_idle(const freq_tag& f) const {
    return idle_at(dram_idle_w, f, "dram", name);
}

const cpu_spec& catalog::cpu(const std::string& n) const {
    auto it = cpus.find(n);
    if (it == cpus.end()) throw config_error("unknown cpu '" + n + "'");
    return it->second;
}
const gpu_spec& catalog::gpu(const std::string& n) const {
    auto it = gpus.find(n);
    if (it == gpus.end()) throw config_error("unknown gpu '" + n + "'");
    return it->second;
}
const energy_bench& catalog::bench(const std::string& n) const {
    auto it = energy_benches.find(n);
    if (it == energy_benches.end())
        throw config_error("unknown energy bench '" + n + "'");
    return it->second;
}
const gpu_power_spec& catalog::power(const std::string& n) const {
    auto it = gpu_power.find(n);
    if (it == gpu_power.end())
        throw config_error("unknown gpu power spec '" + n + "'");
    return it->second;
}

namespace {

freq_tag parse_freq(const json& j, const std::string& path) {
    if (j.is_string()) {
        if (j.get<std::string>() == "turbo") return freq_tag::turbo_state();
        throw parse_error(path + ": frequency must be a number or \"turbo\"");
    }
    if (!j.is_number()) {
        throw parse_error(path + ": frequency must be a number or \"turbo\"");
    }
    double f = j.get<double>();
    if (f <= 0) throw validation_error(path + ": frequency must be > 0");
    return freq_tag::of(f);
}

double require_num(const json& j, const char* key, const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_number()) {
        throw parse_error(path + "." + key + ": missing or non-numeric");
    }
    return j.at(key).get<double>();
}

double require_pos(const json& j, const char* key, const std::string& path) {
    double v = require_num(j, key, path);
    if (v <= 0) throw validation_error(path + "." + key + ": must be > 0");
    return v;
}

cpu_spec parse_cpu(const json& j, const std::string& path) {
    cpu_spec c;
    c.name = j.value("name", "");
    if (c.name.empty()) throw parse_error(path + ".name: missing");
    c.physical_cores = static_cast<int>(require_pos(j, "physical_cores", path));
    c.vector_width_doubles =
        static_cast<int>(j.value("vector_width_doubles", 0.0));
    c.fma_ops_per_cycle = static_cast<int>(j.value("fma_ops_per_cycle", 0.0));
    if (!j.contains("states") || !j.at("states").is_array()) {
        throw parse_error(path + ".states: missing array");
    }
    size_t i = 0;
    for (const auto& js : j.at("states")) {
        const std::string sp = path + ".states[" + std::to_string(i++) + "]";
        cpu_state s;
        if (!js.contains("freq")) throw parse_error(sp + ".freq: missing");
        s.freq = parse_freq(js.at("freq"), sp + ".freq");
        s.cores = static_cast<int>(require_pos(js, "cores", sp));
        if (s.cores > c.physical_cores) {
            throw validation_error(sp + ": cores " + std::to_string(s.cores) +
                                   " exceeds physical core count of '" +
                                   c.name + "'");
        }
        cpu_state_values v;
        v.perf_gflops = require_pos(js, "perf_gflops", sp);
        v.bw_l1 = require_pos(js, "l1_gbps", sp);
        v.bw_l2 = require_pos(js, "l2_gbps", sp);
        v.bw_l3 = require_pos(js, "l3_gbps", sp);
        v.bw_dram = require_pos(js, "dram_gbps", sp);
        if (!c.states.emplace(s, v).second) {
            throw validation_error(sp + ": duplicate state");
        }
    }
    // perf must be nondecreasing in cores at fixed frequency
    for (auto it = c.states.begin(); it != c.states.end(); ++it) {
        auto next = std::next(it);
        if (next != c.states.end() && next->first.freq == it->first.freq &&
            next->second.perf_gflops < it->second.perf_gflops) {
            throw validation_error(
                "cpu '" + c.name + "': perf decreases from " +
                std::to_string(it->first.cores) + " to " +
                std::to_string(next->first.cores) + " cores at frequency " +
                it->first.freq.str());
        }
    }
    return c;
}

gpu_spec parse_gpu(const json& j, const std::string& path) {
    gpu_spec g;
    g.name = j.value("name", "");
    if (g.name.empty()) throw parse_error(path + ".name: missing");
    g.arch = gpu_arch_from_string(j.value("arch", "other"));
    g.gpu_clock_hz = require_pos(j, "gpu_clock_hz", path);
    g.mem_clock_hz = j.value("mem_clock_hz", 0.0);
    g.mem_bus_bits = static_cast<int>(j.value("mem_bus_bits", 0.0));
    g.sm_count = static_cast<int>(require_pos(j, "sm_count", path));
    g.ops_per_clock_fp64 =
        static_cast<int>(require_pos(j, "ops_per_clock_fp64", path));
    g.ops_per_clock_fp32 =
        static_cast<int>(require_pos(j, "ops_per_clock_fp32", path));
    g.ops_per_clock_int =
        static_cast<int>(require_pos(j, "ops_per_clock_int", path));
    g.bandwidth_bps = require_pos(j, "bandwidth_bps", path);
    g.max_domain_points = j.value("max_domain_points", 0.0);

    const gpu_peak_set derived = gpu_peaks(g);
    auto pick = [&](const char* key, double d) {
        if (j.contains(key)) {
            double published = require_pos(j, key, path);
            // published peaks are rounded; they win, but must agree
            if (std::abs(published - d) / d > 0.01) {
                throw validation_error(path + "." + key +
                                       ": published peak differs from derived "
                                       "by more than 1%");
            }
            return published;
        }
        return d;
    };
    g.peak.fp64 = pick("peak_fp64", derived.fp64);
    g.peak.fp32 = pick("peak_fp32", derived.fp32);
    g.peak.integer = pick("peak_int", derived.integer);
    return g;
}

energy_bench parse_bench(const json& j, const std::string& path) {
    energy_bench b;
    b.name = j.value("name", "");
    if (b.name.empty()) throw parse_error(path + ".name: missing");
    size_t i = 0;
    for (const auto& js : j.value("states", json::array())) {
        const std::string sp = path + ".states[" + std::to_string(i++) + "]";
        cpu_state s;
        if (!js.contains("freq")) throw parse_error(sp + ".freq: missing");
        s.freq = parse_freq(js.at("freq"), sp + ".freq");
        s.cores = static_cast<int>(require_pos(js, "cores", sp));
        b.pkg_power_w[s] = require_pos(js, "pkg_w", sp);
        b.dram_power_w[s] = require_pos(js, "dram_w", sp);
    }
    i = 0;
    for (const auto& js : j.value("idle", json::array())) {
        const std::string sp = path + ".idle[" + std::to_string(i++) + "]";
        if (!js.contains("freq")) throw parse_error(sp + ".freq: missing");
        freq_tag f = parse_freq(js.at("freq"), sp + ".freq");
        b.pkg_idle_w[f] = require_pos(js, "pkg_idle_w", sp);
        b.dram_idle_w[f] = require_pos(js, "dram_idle_w", sp);
    }
    // loaded power >= idle, monotone nondecreasing in cores per frequency
    auto check = [&](const std::map<cpu_state, double>& m,
                     const std::map<freq_tag, double>& idle, const char* what) {
        const cpu_state* prev = nullptr;
        double prev_w = 0;
        for (const auto& [s, w] : m) {
            auto it = idle.find(s.freq);
            if (it != idle.end() && w < it->second) {
                throw validation_error("energy bench '" + b.name + "': " +
                                       what + " power at (" + s.freq.str() +
                                       ", " + std::to_string(s.cores) +
                                       ") is below idle");
            }
            if (prev && prev->freq == s.freq && w < prev_w) {
                throw validation_error("energy bench '" + b.name + "': " +
                                       what +
                                       " power decreases with cores at "
                                       "frequency " +
                                       s.freq.str());
            }
            prev = &s;
            prev_w = w;
        }
    };
    check(b.pkg_power_w, b.pkg_idle_w, "pkg");
    check(b.dram_power_w, b.dram_idle_w, "dram");
    return b;
}

gpu_power_spec parse_gpu_power(const json& j, const std::string& path) {
    gpu_power_spec p;
    p.name = j.value("name", "");
    if (p.name.empty()) throw parse_error(path + ".name: missing");
    p.power_limit_w = require_pos(j, "power_limit_w", path);
    if (j.contains("default_s_fraction")) {
        double s = require_num(j, "default_s_fraction", path);
        if (s < 0 || s > 1) {
            throw validation_error(path +
                                   ".default_s_fraction: must be in [0,1]");
        }
        p.default_s_fraction = s;
    }
    return p;
}

} // namespace

catalog load_catalog(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("catalog: ") + e.what());
    }
    catalog cat;
    try {
    size_t i = 0;
    for (const auto& j : doc.value("cpus", json::array())) {
        cpu_spec c = parse_cpu(j, "cpus[" + std::to_string(i++) + "]");
        cat.cpus[c.name] = std::move(c);
    }
    i = 0;
    for (const auto& j : doc.value("gpus", json::array())) {
        gpu_spec g = parse_gpu(j, "gpus[" + std::to_string(i++) + "]");
        cat.gpus[g.name] = std::move(g);
    }
    i = 0;
    for (const auto& j : doc.value("energy_benches", json::array())) {
        energy_bench b =
            parse_bench(j, "energy_benches[" + std::to_string(i++) + "]");
        cat.energy_benches[b.name] = std::move(b);
    }
    i = 0;
    for (const auto& j : doc.value("gpu_power", json::array())) {
        gpu_power_spec p =
            parse_gpu_power(j, "gpu_power[" + std::to_string(i++) + "]");
        cat.gpu_power[p.name] = std::move(p);
    }
    } catch (const json::exception& e) {
        throw parse_error(std::string("catalog: ") + e.what());
    }
    return cat;
}

catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open catalog file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_catalog(ss.str());
}

} // namespace hpcproj
