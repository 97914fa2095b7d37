#include "hpcproj/cpu_model.hpp"

#include <algorithm>
#include <cmath>

namespace hpcproj {

namespace {

double scale_factor(const loop_spec& loop, const problem_case& pc,
                    double spectral_factor) {
    switch (loop.scaling) {
        case scaling_rule::spectral:
            return static_cast<double>(pc.nsmax) * static_cast<double>(pc.nsmax) *
                   static_cast<double>(pc.gridn) * spectral_factor *
                   static_cast<double>(pc.iterations) *
                   static_cast<double>(pc.fields);
        case scaling_rule::gridpoint:
            return static_cast<double>(pc.pts) *
                   static_cast<double>(pc.iterations) *
                   static_cast<double>(pc.fields);
        case scaling_rule::explicit_value:
            return 1.0;
    }
    return 0.0;
}

} // namespace

double estimate_w(const loop_spec& loop, const problem_case& pc,
                  double spectral_factor) {
    if (loop.kind != loop_kind::compute_and_memory) {
        throw domain_error("estimate_w: loop '" + loop.name +
                           "' performs no work");
    }
    if (loop.scaling == scaling_rule::explicit_value) {
        if (!loop.explicit_w) {
            throw domain_error("estimate_w: loop '" + loop.name +
                               "' has explicit scaling but no stored W");
        }
        return *loop.explicit_w;
    }
    if (!loop.w_per_iteration) {
        throw domain_error("estimate_w: loop '" + loop.name +
                           "' has no FLOP-per-iteration value");
    }
    return scale_factor(loop, pc, spectral_factor) * *loop.w_per_iteration;
}

q_estimate estimate_q(const loop_spec& loop, const problem_case& pc, double w,
                      double spectral_factor) {
    if (loop.scaling == scaling_rule::explicit_value && loop.explicit_q) {
        return {*loop.explicit_q, q_source::explicit_value};
    }
    if (loop.intensity) {
        if (*loop.intensity <= 0) {
            throw domain_error("estimate_q: loop '" + loop.name +
                               "' has nonpositive intensity");
        }
        return {w / *loop.intensity, q_source::from_intensity};
    }
    if (loop.q_per_iteration) {
        return {scale_factor(loop, pc, spectral_factor) * *loop.q_per_iteration,
                q_source::from_bytes_per_iter};
    }
    throw domain_error("estimate_q: loop '" + loop.name +
                       "' has neither intensity nor bytes per iteration");
}

memory_fit fit_memory_coefficients(
    const std::vector<std::pair<cpu_state, double>>& measured_gbps,
    const cpu_spec& spec) {
    if (measured_gbps.empty()) {
        throw fit_error("fit_memory_coefficients: no measured states");
    }
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    rows.reserve(measured_gbps.size());
    for (const auto& [state, r] : measured_gbps) {
        const auto& v = spec.lookup(state);
        rows.push_back({v.bw_l1, v.bw_l2, v.bw_l3, v.bw_dram});
        rhs.push_back(r);
    }
    const nnls_result res = nnls(rows, rhs);
    return {res.coeffs[0], res.coeffs[1], res.coeffs[2], res.coeffs[3],
            res.residual_norm};
}

compute_fit fit_compute_coefficients(
    const std::vector<std::pair<cpu_state, double>>& measured_gflops,
    const cpu_spec& spec, bool affine) {
    if (measured_gflops.empty()) {
        throw fit_error("fit_compute_coefficients: no measured states");
    }
    if (affine && measured_gflops.size() < 2) {
        throw fit_error("fit_compute_coefficients: affine fit needs >= 2 "
                        "states");
    }
    std::vector<double> p, m;
    for (const auto& [state, measured] : measured_gflops) {
        p.push_back(spec.lookup(state).perf_gflops);
        m.push_back(measured);
    }
    const affine_fit f = fit_linear(p, m, affine);
    compute_fit out;
    out.u = f.slope;
    if (affine) out.s = f.intercept;
    out.residual_norm = f.residual_norm;
    return out;
}

double t_flop(const cpu_state_values& v, const loop_coefficients& c) {
    if (!c.u) throw domain_error("t_flop: loop has no compute coefficient");
    const double gflops = v.perf_gflops * *c.u + c.s.value_or(0.0);
    if (gflops <= 0) {
        throw domain_error("t_flop: effective performance <= 0");
    }
    return 1.0 / (gflops * 1e9);
}

double t_mop(const cpu_state_values& v, const loop_coefficients& c) {
    const double gbps =
        v.bw_l1 * c.v + v.bw_l2 * c.x + v.bw_l3 * c.y + v.bw_dram * c.z;
    if (gbps <= 0) throw domain_error("t_mop: effective bandwidth <= 0");
    return 1.0 / (gbps * 1e9);
}

loop_time_result loop_time(double w, double q, double tflop, double tmop) {
    loop_time_result r;
    r.compute_s = w * tflop;
    r.memory_s = q * tmop;
    if (r.compute_s > r.memory_s) {
        r.seconds = r.compute_s;
        r.bound = bound_side::compute;
    } else if (r.memory_s > r.compute_s) {
        r.seconds = r.memory_s;
        r.bound = bound_side::memory;
    } else {
        r.seconds = r.compute_s;
        r.bound = bound_side::balanced;
    }
    return r;
}

dwarf_time_result dwarf_time(const dwarf_model& model, const cpu_state& state,
                             const cpu_spec& spec) {
    return dwarf_time_scaled(model, state, spec, 1.0);
}

dwarf_time_result dwarf_time_scaled(const dwarf_model& model,
                                    const cpu_state& state,
                                    const cpu_spec& spec, double share) {
    const auto& values = spec.lookup(state);
    dwarf_time_result out;
    for (const auto& [loop, coeffs] : model.loops) {
        double w_full = 0.0;
        double tflop = 0.0;
        if (loop.kind == loop_kind::compute_and_memory) {
            w_full = estimate_w(loop, model.problem, model.spectral_factor);
            tflop = t_flop(values, coeffs);
        }
        const double q_full =
            estimate_q(loop, model.problem, w_full, model.spectral_factor)
                .bytes;
        const double tmop = t_mop(values, coeffs);
        out.per_loop.emplace_back(
            loop.name, loop_time(w_full * share, q_full * share, tflop, tmop));
        out.total_s += out.per_loop.back().second.seconds;
    }
    return out;
}

std::vector<roofline_ceilings> roofline_series(
    const cpu_spec& spec, const cpu_state& state,
    const std::vector<double>& intensities,
    std::optional<double> effective_peak) {
    const auto& v = spec.lookup(state);
    const double peak = effective_peak.value_or(v.perf_gflops);
    std::vector<roofline_ceilings> out;
    out.reserve(intensities.size());
    for (double i : intensities) {
        roofline_ceilings c;
        c.intensity = i;
        c.l1 = std::min(peak, v.bw_l1 * i);
        c.l2 = std::min(peak, v.bw_l2 * i);
        c.l3 = std::min(peak, v.bw_l3 * i);
        c.dram = std::min(peak, v.bw_dram * i);
        c.peak = peak;
        out.push_back(c);
    }
    return out;
}

} // namespace hpcproj
