// Command-line front end: fits, predictions, rooflines, workflow
// projections and validation reports over a hardware catalog.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hpcproj/catalog.hpp"
#include "hpcproj/cpu_model.hpp"
#include "hpcproj/csv.hpp"
#include "hpcproj/energy.hpp"
#include "hpcproj/errors.hpp"
#include "hpcproj/gpu_model.hpp"
#include "hpcproj/model_io.hpp"
#include "hpcproj/multinode.hpp"
#include "hpcproj/projection.hpp"
#include "hpcproj/svg.hpp"

namespace fs = std::filesystem;
using namespace hpcproj;

namespace {

constexpr const char* kSaturationCaveat =
    "CAVEAT: scaling saturation is not modeled; projected time-to-solution "
    "improves monotonically with added nodes.";

freq_tag parse_freq_flag(const std::string& s) {
    if (s == "turbo") return freq_tag::turbo_state();
    try {
        size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return freq_tag::of(v);
    } catch (const std::exception&) {
        throw config_error("--freq must be a number or 'turbo', got '" + s +
                           "'");
    }
}

void ensure_out_dir(const std::string& out) {
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw config_error("cannot create output directory '" + out + "'");
}

struct format_flags {
    bool csv = true;
    bool svg = false;
};

format_flags parse_format(const std::string& s) {
    if (s == "csv") return {true, false};
    if (s == "svg") return {false, true};
    if (s == "both") return {true, true};
    throw config_error("--format must be csv, svg or both");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw config_error("cannot write '" + path + "'");
    out << text;
}

// ---------------------------------------------------------------- fits

int cmd_fit_memory(const std::string& catalog_path, const std::string& cpu,
                   const std::string& points_path, const std::string& out) {
    const catalog cat = load_catalog_file(catalog_path);
    const cpu_spec& spec = cat.cpu(cpu);
    const auto points = load_fit_points_file(points_path, "measured_gbps");
    if (points.empty()) {
        throw parse_error("fit input '" + points_path + "' has no data rows");
    }
    const memory_fit fit = fit_memory_coefficients(points, spec);
    ensure_out_dir(out);
    csv_writer w({"v", "x", "y", "z", "residual_norm", "states"});
    std::string states;
    for (const auto& [s, _] : points) {
        if (!states.empty()) states += ";";
        states += "(" + s.freq.str() + "," + std::to_string(s.cores) + ")";
    }
    w.add_row({csv_writer::num(fit.v), csv_writer::num(fit.x),
               csv_writer::num(fit.y), csv_writer::num(fit.z),
               csv_writer::num(fit.residual_norm), states});
    w.write_file(out + "/memory_fit.csv");
    std::cout << "memory fit: v=" << fit.v << " x=" << fit.x << " y=" << fit.y
              << " z=" << fit.z << " residual=" << fit.residual_norm << "\n";
    return 0;
}

int cmd_fit_compute(const std::string& catalog_path, const std::string& cpu,
                    const std::string& points_path, bool affine,
                    const std::string& out) {
    const catalog cat = load_catalog_file(catalog_path);
    const cpu_spec& spec = cat.cpu(cpu);
    const auto points = load_fit_points_file(points_path, "measured_gflops");
    if (points.empty()) {
        throw parse_error("fit input '" + points_path + "' has no data rows");
    }
    const compute_fit fit = fit_compute_coefficients(points, spec, affine);
    ensure_out_dir(out);
    csv_writer w({"u", "s", "residual_norm", "states"});
    std::string states;
    for (const auto& [s, _] : points) {
        if (!states.empty()) states += ";";
        states += "(" + s.freq.str() + "," + std::to_string(s.cores) + ")";
    }
    w.add_row({csv_writer::num(fit.u),
               fit.s ? csv_writer::num(*fit.s) : std::string(""),
               csv_writer::num(fit.residual_norm), states});
    w.write_file(out + "/compute_fit.csv");
    std::cout << "compute fit: u=" << fit.u;
    if (fit.s) std::cout << " s=" << *fit.s;
    std::cout << " residual=" << fit.residual_norm << "\n";
    return 0;
}

int cmd_fit_energy(const std::string& points_path, const std::string& out) {
    const energy_fit_input in = load_energy_fit_file(points_path);
    if (in.pkg_points.empty()) {
        throw parse_error("fit input '" + points_path + "' has no data rows");
    }
    const energy_fit pkg = fit_power_coefficients(in.pkg_points, in.pkg_idle_w);
    const energy_fit dram =
        fit_power_coefficients(in.dram_points, in.dram_idle_w);
    ensure_out_dir(out);
    csv_writer w({"domain", "load_coeff", "idle_coeff", "residual_norm"});
    w.add_row({"pkg", csv_writer::num(pkg.load_coeff),
               csv_writer::num(pkg.idle_coeff),
               csv_writer::num(pkg.residual_norm)});
    w.add_row({"dram", csv_writer::num(dram.load_coeff),
               csv_writer::num(dram.idle_coeff),
               csv_writer::num(dram.residual_norm)});
    w.write_file(out + "/energy_fit.csv");
    std::cout << "pkg fit: u=" << pkg.load_coeff << " s=" << pkg.idle_coeff
              << " residual=" << pkg.residual_norm << "\n"
              << "dram fit: x=" << dram.load_coeff << " y=" << dram.idle_coeff
              << " residual=" << dram.residual_norm << "\n";
    return 0;
}

// ---------------------------------------------------------- predictions

int cmd_predict_gpu(const std::string& catalog_path,
                    const std::string& model_path, const std::string& gpu_name,
                    double n, const std::string& out,
                    const format_flags& fmt) {
    const catalog cat = load_catalog_file(catalog_path);
    const gpu_spec& gpu = cat.gpu(gpu_name);
    const auto kernels = load_characteristics_file(model_path);
    const gpu_dwarf_prediction pred = predict_dwarf(kernels, gpu, n);

    ensure_out_dir(out);
    csv_writer w({"kernel", "inactive_s", "misc_s", "control_flow_s",
                  "fp32_s", "fp64_s", "int_s", "transfer_s", "sim_s"});
    gpu_time_breakdown sum;
    for (size_t i = 0; i < kernels.size(); ++i) {
        const auto& t = pred.kernels[i];
        w.add_row({kernels[i].name, csv_writer::num(t.inactive_s),
                   csv_writer::num(t.misc_s), csv_writer::num(t.control_flow_s),
                   csv_writer::num(t.fp32_s), csv_writer::num(t.fp64_s),
                   csv_writer::num(t.int_s), csv_writer::num(t.transfer_s),
                   csv_writer::num(t.sim_s)});
        sum.inactive_s += t.inactive_s;
        sum.misc_s += t.misc_s;
        sum.control_flow_s += t.control_flow_s;
        sum.fp32_s += t.fp32_s;
        sum.fp64_s += t.fp64_s;
        sum.int_s += t.int_s;
        sum.transfer_s += t.transfer_s;
    }
    w.add_row({"SUM", csv_writer::num(sum.inactive_s),
               csv_writer::num(sum.misc_s), csv_writer::num(sum.control_flow_s),
               csv_writer::num(sum.fp32_s), csv_writer::num(sum.fp64_s),
               csv_writer::num(sum.int_s), csv_writer::num(sum.transfer_s),
               csv_writer::num(pred.total_s)});
    if (fmt.csv) w.write_file(out + "/predict_gpu.csv");
    if (fmt.svg) {
        svg_series s;
        s.label = gpu_name + " t_sim";
        for (size_t i = 0; i < kernels.size(); ++i) {
            if (pred.kernels[i].sim_s > 0) {
                s.x.push_back(static_cast<double>(i + 1));
                s.y.push_back(pred.kernels[i].sim_s);
            }
        }
        write_svg_file(out + "/predict_gpu.svg",
                       render_loglog_svg("Predicted kernel times on " +
                                             gpu_name,
                                         "kernel index", "time [s]", {s}));
    }
    std::cout << "total simulated time: " << pred.total_s << " s\n";
    return 0;
}

int cmd_predict_cpu(const std::string& catalog_path,
                    const std::string& model_path, const std::string& cpu_name,
                    const std::string& freq_s, int cores,
                    const std::string& out) {
    const catalog cat = load_catalog_file(catalog_path);
    const cpu_spec& spec = cat.cpu(cpu_name);
    const dwarf_model model = load_dwarf_model_file(model_path);
    const cpu_state state{parse_freq_flag(freq_s), cores};
    const dwarf_time_result res = dwarf_time(model, state, spec);

    ensure_out_dir(out);
    csv_writer w({"loop", "bound", "compute_s", "memory_s", "time_s"});
    for (const auto& [name, lt] : res.per_loop) {
        w.add_row({name,
                   lt.bound == bound_side::compute   ? "compute"
                   : lt.bound == bound_side::memory ? "memory"
                                                    : "balanced",
                   csv_writer::num(lt.compute_s), csv_writer::num(lt.memory_s),
                   csv_writer::num(lt.seconds)});
    }
    w.add_row({"TOTAL", "", "", "", csv_writer::num(res.total_s)});
    w.write_file(out + "/predict_cpu.csv");
    std::cout << "total time: " << res.total_s << " s\n";
    return 0;
}

int cmd_predict_multinode(const std::string& catalog_path,
                          const std::string& model_path,
                          const std::string& scenario_path,
                          const std::string& out) {
    const catalog cat = load_catalog_file(catalog_path);
    const dwarf_model model = load_dwarf_model_file(model_path);
    const multinode_scenario sc = load_scenario_file(scenario_path);
    if (model.name != sc.dwarf) {
        throw config_error("scenario dwarf '" + sc.dwarf +
                           "' does not match model '" + model.name + "'");
    }
    const cpu_spec& spec = cat.cpu(sc.cpu);
    std::vector<double> per_node;
    per_node.reserve(sc.nodes);
    for (int i = 0; i < sc.nodes; ++i) {
        per_node.push_back(
            node_time(model, sc.state, spec, 1.0 / sc.nodes, sc.comm));
    }
    const double total = multinode_time(per_node);

    ensure_out_dir(out);
    csv_writer w({"node", "time_s"});
    for (int i = 0; i < sc.nodes; ++i) {
        w.add_row({std::to_string(i), csv_writer::num(per_node[i])});
    }
    w.add_row({"MAX", csv_writer::num(total)});
    w.write_file(out + "/predict_multinode.csv");
    std::cout << "communication mode: "
              << (sc.comm_additive ? "additive" : "overlap") << "\n"
              << "multinode time over " << sc.nodes << " nodes: " << total
              << " s\n";
    return 0;
}

// -------------------------------------------------------------- roofline

int cmd_roofline(const std::string& catalog_path, const std::string& cpu_name,
                 const std::string& freq_s, int cores,
                 const std::string& points_path, const std::string& out,
                 const format_flags& fmt) {
    const catalog cat = load_catalog_file(catalog_path);
    const cpu_spec& spec = cat.cpu(cpu_name);
    const cpu_state state{parse_freq_flag(freq_s), cores};

    std::vector<double> intensities;
    for (int i = 0; i <= 80; ++i) {
        intensities.push_back(std::pow(10.0, -2.0 + i * 0.05));  // 1e-2..1e2
    }
    const auto series = roofline_series(spec, state, intensities);

    ensure_out_dir(out);
    csv_writer w({"intensity", "ceiling_l1", "ceiling_l2", "ceiling_l3",
                  "ceiling_dram", "peak"});
    for (const auto& c : series) {
        w.add_row({csv_writer::num(c.intensity), csv_writer::num(c.l1),
                   csv_writer::num(c.l2), csv_writer::num(c.l3),
                   csv_writer::num(c.dram), csv_writer::num(c.peak)});
    }
    if (fmt.csv) w.write_file(out + "/roofline.csv");

    std::vector<std::pair<double, double>> app_points;
    if (!points_path.empty()) {
        const csv_table t = csv_table::parse_file(points_path);
        csv_writer pw({"intensity", "gflops"});
        for (size_t r = 0; r < t.rows(); ++r) {
            const double i = t.number(r, "intensity");
            const double g = t.number(r, "gflops");
            app_points.emplace_back(i, g);
            pw.add_row({csv_writer::num(i), csv_writer::num(g)});
        }
        if (fmt.csv) pw.write_file(out + "/roofline_points.csv");
    }

    if (fmt.svg) {
        std::vector<svg_series> plot;
        const char* names[] = {"L1", "L2", "L3", "DRAM"};
        for (int lvl = 0; lvl < 4; ++lvl) {
            svg_series s;
            s.label = names[lvl];
            for (const auto& c : series) {
                const double v = lvl == 0   ? c.l1
                                 : lvl == 1 ? c.l2
                                 : lvl == 2 ? c.l3
                                            : c.dram;
                s.x.push_back(c.intensity);
                s.y.push_back(v);
            }
            plot.push_back(std::move(s));
        }
        if (!app_points.empty()) {
            svg_series s;
            s.label = "application";
            for (const auto& [i, g] : app_points) {
                s.x.push_back(i);
                s.y.push_back(g);
            }
            plot.push_back(std::move(s));
        }
        write_svg_file(
            out + "/roofline.svg",
            render_loglog_svg("Cache-aware roofline: " + cpu_name + " (" +
                                  freq_s + " GHz, " + std::to_string(cores) +
                                  " cores)",
                              "arithmetic intensity [FLOP/B]",
                              "performance [GFLOP/s]", plot));
    }
    return 0;
}

// --------------------------------------------------------------- project

int cmd_project(const std::string& catalog_path,
                const std::string& workflow_path, const std::string& grid_path,
                const std::vector<std::string>& cpu_model_paths,
                const std::vector<std::string>& gpu_model_args,
                const std::string& policy_s, const std::string& energy_mode_s,
                const std::string& out) {
    const catalog cat = load_catalog_file(catalog_path);
    const workflow_spec wf = load_workflow_file(workflow_path);
    const config_grid grid =
        grid_path.empty() ? config_grid{} : load_grid_file(grid_path);
    const selection_policy policy = policy_from_string(policy_s);
    const energy_accounting energy_mode =
        energy_accounting_from_string(energy_mode_s);

    model_registry models;
    for (const auto& p : cpu_model_paths) {
        dwarf_model m = load_dwarf_model_file(p);
        models.cpu_dwarfs[m.name] = std::move(m);
    }
    for (const auto& arg : gpu_model_args) {
        const auto eq = arg.find('=');
        if (eq == std::string::npos) {
            throw config_error("--gpu-model expects NAME=FILE, got '" + arg +
                               "'");
        }
        models.gpu_dwarfs[arg.substr(0, eq)] =
            load_characteristics_file(arg.substr(eq + 1));
    }
    for (const auto& b : wf.bindings) {
        const bool is_cpu = std::holds_alternative<cpu_device_binding>(b.device);
        const bool found = is_cpu ? models.cpu_dwarfs.count(b.dwarf) > 0
                                  : models.gpu_dwarfs.count(b.dwarf) > 0;
        if (!found) {
            throw config_error("workflow binding '" + b.dwarf +
                               "' has no loaded model");
        }
    }

    const sweep_result res = sweep(wf, grid, cat, models, energy_mode);
    const auto front = pareto_front(res.results);

    ensure_out_dir(out);
    const std::vector<std::string> header = {
        "cpu", "gpu", "nodes", "cores", "freq", "tts_s", "ets_j", "bounds"};
    auto result_row = [](const projection_result& r) {
        std::string bounds;
        for (const auto& b : r.bindings) {
            if (!bounds.empty()) bounds += ";";
            bounds += b.dwarf + ":" + b.bound;
        }
        return std::vector<std::string>{
            r.config.cpu_name.empty() ? "-" : r.config.cpu_name,
            r.config.gpu_name.empty() ? "-" : r.config.gpu_name,
            std::to_string(r.config.nodes),
            std::to_string(r.config.cores),
            r.config.freq ? r.config.freq->str() : "-",
            csv_writer::num(r.tts_s),
            csv_writer::num(r.ets_j),
            bounds};
    };
    csv_writer sw(header);
    for (const auto& r : res.results) sw.add_row(result_row(r));
    sw.write_file(out + "/sweep.csv");
    csv_writer pw(header);
    for (const auto& r : front) pw.add_row(result_row(r));
    pw.write_file(out + "/pareto.csv");

    std::ostringstream summary;
    summary << kSaturationCaveat << "\n"
            << "energy accounting: " << energy_mode_s << "\n"
            << "policy: " << policy_s << "\n"
            << "configurations evaluated: " << res.results.size() << "\n"
            << "configurations invalid: " << res.invalid.size() << "\n";
    for (const auto& [cfg, why] : res.invalid) {
        summary << "  invalid " << cfg.label() << ": " << why << "\n";
    }
    if (!res.results.empty()) {
        const auto& best = best_by(res.results, policy);
        summary << "best: " << best.config.label() << " tts=" << best.tts_s
                << " s ets=" << best.ets_j << " J\n";
    }
    write_text(out + "/summary.txt", summary.str());
    std::cout << summary.str();
    if (res.results.empty()) {
        throw config_error("no valid configuration in the sweep");
    }
    return 0;
}

// -------------------------------------------------------------- validate

int cmd_validate(const std::string& pairs_path, double tolerance,
                 const std::string& out) {
    const csv_table t = csv_table::parse_file(pairs_path);
    if (t.rows() == 0) {
        throw parse_error("validation input '" + pairs_path +
                          "' has no data rows");
    }
    std::vector<double> diffs;
    csv_writer w({"row", "reference", "predicted", "difference"});
    for (size_t r = 0; r < t.rows(); ++r) {
        const double ref = t.number(r, "reference");
        const double pred = t.number(r, "predicted");
        const double d = relative_difference(pred, ref);
        diffs.push_back(d);
        w.add_row({t.has_column("name") ? t.at(r, "name")
                                        : std::to_string(r),
                   csv_writer::num(ref), csv_writer::num(pred),
                   csv_writer::num(d)});
    }
    const difference_stats stats = quality_metrics(diffs);
    const double rms = square_error(diffs);
    ensure_out_dir(out);
    w.write_file(out + "/validation.csv");
    std::cout << "square_error: " << rms * 100 << " %\n"
              << "max: " << stats.max * 100 << " %  min: " << stats.min * 100
              << " %  mean: " << stats.mean * 100
              << " %  stddev: " << stats.stddev * 100 << " %\n";
    if (tolerance > 0) {
        for (size_t i = 0; i < diffs.size(); ++i) {
            if (std::abs(diffs[i]) > tolerance) {
                std::cerr << "tolerance exceeded at row "
                          << (t.has_column("name") ? t.at(i, "name")
                                                   : std::to_string(i))
                          << ": |" << diffs[i] << "| > " << tolerance << "\n";
                return 1;
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Performance and energy projection toolkit"};
    app.require_subcommand(1);

    std::string catalog_path, model_path, out_dir = ".", format_s = "csv";
    std::string cpu_name, gpu_name, freq_s, points_path, scenario_path;
    std::string workflow_path, grid_path, policy_s, energy_mode_s, pairs_path;
    std::vector<std::string> cpu_models, gpu_models;
    int cores = 0;
    double n = 0.0, tolerance = 0.0;
    bool affine = false;

    auto add_common = [&](CLI::App* c, bool needs_catalog) {
        if (needs_catalog) {
            c->add_option("--catalog", catalog_path, "hardware catalog file")
                ->required();
        }
        c->add_option("--out", out_dir, "output directory");
        c->add_option("--format", format_s, "csv|svg|both");
    };

    auto* fit_mem = app.add_subcommand("fit-memory",
                                       "fit memory-path coefficients");
    add_common(fit_mem, true);
    fit_mem->add_option("--cpu", cpu_name)->required();
    fit_mem->add_option("--points", points_path,
                        "csv: freq,cores,measured_gbps")->required();

    auto* fit_comp = app.add_subcommand("fit-compute",
                                        "fit compute coefficients");
    add_common(fit_comp, true);
    fit_comp->add_option("--cpu", cpu_name)->required();
    fit_comp->add_option("--points", points_path,
                         "csv: freq,cores,measured_gflops")->required();
    fit_comp->add_flag("--affine", affine, "fit an intercept too");

    auto* fit_en = app.add_subcommand("fit-energy",
                                      "fit package/DRAM power coefficients");
    add_common(fit_en, false);
    fit_en->add_option("--points", points_path,
                       "csv: freq,cores,bench_pkg_w,measured_pkg_w,"
                       "bench_dram_w,measured_dram_w (+idle row cores=0)")
        ->required();

    auto* pgpu = app.add_subcommand("predict-gpu",
                                    "predict kernel times on a GPU");
    add_common(pgpu, true);
    pgpu->add_option("--model", model_path, "kernel characteristics file")
        ->required();
    pgpu->add_option("--gpu", gpu_name)->required();
    pgpu->add_option("--n", n, "domain size")->required();

    auto* pcpu = app.add_subcommand("predict-cpu",
                                    "predict dwarf time on a CPU state");
    add_common(pcpu, true);
    pcpu->add_option("--model", model_path, "dwarf model file")->required();
    pcpu->add_option("--cpu", cpu_name)->required();
    pcpu->add_option("--freq", freq_s, "GHz or 'turbo'")->required();
    pcpu->add_option("--cores", cores)->required();

    auto* pmulti = app.add_subcommand("predict-multinode",
                                      "predict multinode dwarf time");
    add_common(pmulti, true);
    pmulti->add_option("--model", model_path, "dwarf model file")->required();
    pmulti->add_option("--scenario", scenario_path)->required();

    auto* roof = app.add_subcommand("roofline",
                                    "emit cache-aware roofline series");
    add_common(roof, true);
    roof->add_option("--cpu", cpu_name)->required();
    roof->add_option("--freq", freq_s, "GHz or 'turbo'")->required();
    roof->add_option("--cores", cores)->required();
    roof->add_option("--points", points_path,
                     "csv of application points: intensity,gflops");

    auto* proj = app.add_subcommand("project",
                                    "sweep workflow configurations");
    add_common(proj, true);
    proj->add_option("--workflow", workflow_path)->required();
    proj->add_option("--grid", grid_path, "sweep grid file");
    proj->add_option("--cpu-model", cpu_models, "dwarf model file")
        ->take_all();
    proj->add_option("--gpu-model", gpu_models,
                     "NAME=characteristics-file")->take_all();
    proj->add_option("--policy", policy_s,
                     "min_tts|min_ets|lex_tts_ets|lex_ets_tts")->required();
    proj->add_option("--energy-mode", energy_mode_s,
                     "literal|full-duration")->required();

    auto* val = app.add_subcommand("validate",
                                   "compare predicted against reference");
    add_common(val, false);
    val->add_option("--pairs", pairs_path,
                    "csv with columns reference,predicted[,name]")->required();
    val->add_option("--tolerance", tolerance,
                    "relative tolerance; exceeding it exits 1");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        const format_flags fmt = parse_format(format_s);
        if (fit_mem->parsed())
            return cmd_fit_memory(catalog_path, cpu_name, points_path, out_dir);
        if (fit_comp->parsed())
            return cmd_fit_compute(catalog_path, cpu_name, points_path, affine,
                                   out_dir);
        if (fit_en->parsed()) return cmd_fit_energy(points_path, out_dir);
        if (pgpu->parsed())
            return cmd_predict_gpu(catalog_path, model_path, gpu_name, n,
                                   out_dir, fmt);
        if (pcpu->parsed())
            return cmd_predict_cpu(catalog_path, model_path, cpu_name, freq_s,
                                   cores, out_dir);
        if (pmulti->parsed())
            return cmd_predict_multinode(catalog_path, model_path,
                                         scenario_path, out_dir);
        if (roof->parsed())
            return cmd_roofline(catalog_path, cpu_name, freq_s, cores,
                                points_path, out_dir, fmt);
        if (proj->parsed())
            return cmd_project(catalog_path, workflow_path, grid_path,
                               cpu_models, gpu_models, policy_s, energy_mode_s,
                               out_dir);
        if (val->parsed()) return cmd_validate(pairs_path, tolerance, out_dir);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const fit_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const missing_state_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
