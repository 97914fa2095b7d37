#include "hpcproj/energy.hpp"

namespace hpcproj {

energy_fit fit_power_coefficients(
    const std::vector<std::pair<double, double>>& points, double idle_w) {
    if (points.size() < 2) {
        throw fit_error("fit_power_coefficients: need >= 2 points");
    }
    std::vector<double> bench, measured;
    for (const auto& [b, m] : points) {
        bench.push_back(b);
        measured.push_back(m);
    }
    const affine_fit f = fit_scaled_intercept(bench, measured, idle_w);
    return {f.slope, f.intercept, f.residual_norm};
}

double modeled_power(double bench_w, double idle_w, double load_coeff,
                     double idle_coeff) {
    return bench_w * load_coeff + idle_w * idle_coeff;
}

energy_breakdown energy_single(double compute_time_s, double memory_time_s,
                               double pkg_power_w, double dram_power_w,
                               double pkg_idle_w, double dram_idle_w) {
    energy_breakdown e;
    e.pkg_j = pkg_power_w * compute_time_s;
    e.dram_j = dram_power_w * memory_time_s;
    if (compute_time_s > memory_time_s) {
        e.const_j = dram_idle_w * (compute_time_s - memory_time_s);
    } else if (memory_time_s > compute_time_s) {
        e.const_j = pkg_idle_w * (memory_time_s - compute_time_s);
    }
    e.total_j = e.pkg_j + e.dram_j + e.const_j;
    return e;
}

double energy_gpu(double time_s, double cpu_pkg_idle_w, double s_fraction,
                  double power_limit_w) {
    if (s_fraction < 0 || s_fraction > 1) {
        throw domain_error("energy_gpu: s_fraction must be in [0,1]");
    }
    if (time_s < 0) throw domain_error("energy_gpu: negative time");
    return time_s * (cpu_pkg_idle_w + s_fraction * power_limit_w);
}

double energy_multinode(const std::vector<energy_breakdown>& per_node) {
    if (per_node.empty()) throw domain_error("energy_multinode: empty list");
    double sum = 0;
    for (const auto& e : per_node) sum += e.total_j;
    return sum;
}

double workflow_energy_no_overlap(const workflow_energy_inputs& in) {
    return in.e1_j + in.e1_const_w * in.t2_s + in.e2_j +
           in.e2_const_w * in.t1_s;
}

double workflow_energy_overlap(const workflow_energy_inputs& in) {
    double e_const = 0.0;
    if (in.t1_s < in.t2_s) {
        e_const = (in.t2_s - in.t1_s) * in.e1_const_w;
    } else if (in.t1_s > in.t2_s) {
        e_const = (in.t1_s - in.t2_s) * in.e2_const_w;
    }
    return in.e1_j + in.e2_j + e_const;
}

} // namespace hpcproj
