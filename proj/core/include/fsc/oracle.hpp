#pragma once

#include <cstdint>

#include "fsc/graph.hpp"
#include "fsc/scheduling.hpp"

namespace fsc {

/// Exact minima over all path covers of a graph, from exhaustive
/// enumeration. joint_min_zero is the smallest number of 0-paths among
/// covers that already achieve min_zero_one_paths.
struct CoverStats {
    int min_num_paths = 0;
    int min_zero_paths = 0;
    int min_zero_one_paths = 0;
    int joint_min_zero = 0;
};

/// Size of a maximum 2-matching by enumerating all edge subsets.
/// Guard: at most 25 edges; throws std::invalid_argument beyond that.
int brute_max_two_matching(const Graph& g);

/// Independent second reference for brute_max_two_matching: recursive
/// include/exclude with degree pruning. Same guard.
int brute_max_two_matching_bnb(const Graph& g);

/// Exact cover statistics via subset dynamic programming over vertex sets.
/// Guard: at most 10 vertices.
CoverStats brute_cover_stats(const Graph& g);

/// Exact optimum makespan of a unit instance:
/// n + (minimum path-cover size of the agreement graph). Guard: n <= 10.
std::int64_t brute_unit_optimum(const Instance& inst);

/// Best makespan over all permutation schedules (one job order shared by
/// both machines, earliest feasible starts). An upper bound on the true
/// optimum; two_clique_lower_bound provides the sound lower reference.
/// Guard: n <= 8.
std::int64_t brute_two_clique_bound(const Instance& inst, const CliquePartition& part);

}  // namespace fsc
