#pragma once

#include <vector>

#include "hpcproj/cpu_model.hpp"
#include "hpcproj/errors.hpp"

namespace hpcproj {

struct node_share {
    double w = 0.0;  // FLOP
    double q = 0.0;  // B
};

/// Equal split of W and Q over n nodes; shares sum exactly to the
/// inputs (the last share absorbs rounding).
std::vector<node_share> partition(double w, double q, int n);

/// Integral split: floor shares with the remainder given to the
/// lowest-indexed nodes.
std::vector<long long> partition_integral(long long total, int n);

enum class comm_shape { all_to_all, one_to_all, all_to_one, halo, none };

comm_shape comm_shape_from_string(const std::string& s);
std::string to_string(comm_shape s);

/// Cumulative per-byte communication cost description.
struct comm_pattern {
    double t_single_s_per_byte = 0.0;
    double q_in_bytes = 0.0;
    double q_out_bytes = 0.0;
    long long iterations = 0;
    comm_shape shape = comm_shape::none;
};

/// t_single * (q_in + q_out) * iterations; zero when shape = none.
double comm_time(const comm_pattern& pattern);

/// Per-node time: the node's share of every loop plus its
/// communication term.
double node_time(const dwarf_model& model, const cpu_state& state,
                 const cpu_spec& spec, double share,
                 const comm_pattern& comm);

/// Time of the slowest node.
double multinode_time(const std::vector<double>& per_node_times);

} // namespace hpcproj
