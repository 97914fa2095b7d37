#include "hpcproj/multinode.hpp"

#include <algorithm>

namespace hpcproj {

std::vector<node_share> partition(double w, double q, int n) {
    if (n < 1) throw domain_error("partition: node count must be >= 1");
    std::vector<node_share> shares(static_cast<size_t>(n));
    const double wi = w / n;
    const double qi = q / n;
    double w_rest = w, q_rest = q;
    for (int i = 0; i < n - 1; ++i) {
        shares[static_cast<size_t>(i)] = {wi, qi};
        w_rest -= wi;
        q_rest -= qi;
    }
    shares.back() = {w_rest, q_rest};  // exact conservation
    return shares;
}

std::vector<long long> partition_integral(long long total, int n) {
    if (n < 1) throw domain_error("partition: node count must be >= 1");
    const long long base = total / n;
    const long long rem = total % n;
    std::vector<long long> shares(static_cast<size_t>(n), base);
    for (long long i = 0; i < rem; ++i) ++shares[static_cast<size_t>(i)];
    return shares;
}

comm_shape comm_shape_from_string(const std::string& s) {
    if (s == "all_to_all") return comm_shape::all_to_all;
    if (s == "one_to_all") return comm_shape::one_to_all;
    if (s == "all_to_one") return comm_shape::all_to_one;
    if (s == "halo") return comm_shape::halo;
    if (s == "none") return comm_shape::none;
    throw parse_error("unknown communication shape '" + s + "'");
}

std::string to_string(comm_shape s) {
    switch (s) {
        case comm_shape::all_to_all: return "all_to_all";
        case comm_shape::one_to_all: return "one_to_all";
        case comm_shape::all_to_one: return "all_to_one";
        case comm_shape::halo: return "halo";
        default: return "none";
    }
}

double comm_time(const comm_pattern& p) {
    if (p.shape == comm_shape::none) return 0.0;
    return p.t_single_s_per_byte * (p.q_in_bytes + p.q_out_bytes) *
           static_cast<double>(p.iterations);
}

double node_time(const dwarf_model& model, const cpu_state& state,
                 const cpu_spec& spec, double share,
                 const comm_pattern& comm) {
    return dwarf_time_scaled(model, state, spec, share).total_s +
           comm_time(comm);
}

double multinode_time(const std::vector<double>& per_node_times) {
    if (per_node_times.empty()) {
        throw domain_error("multinode_time: no node times");
    }
    return *std::max_element(per_node_times.begin(), per_node_times.end());
}

} // namespace hpcproj
