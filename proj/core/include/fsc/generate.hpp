#pragma once

#include <cstdint>
#include <string>

#include "fsc/scheduling.hpp"

namespace fsc {

/// Unit instance whose conflict graph draws every pair independently with
/// probability p. Reproducible for a fixed seed.
Instance gen_random_gnp(int n, double p, std::uint64_t seed);

/// Unit instance on 3k jobs whose agreement graph is k triangles chained by
/// one bridge edge between consecutive triangles (maximum degree 3). The
/// emitted conflict graph is the complement of that agreement graph.
Instance gen_chained_triangles(int k);

/// Conflict graph K_l plus K_(n-l) on disjoint job sets {0..l-1} and
/// {l..n-1}; processing times uniform in [1, p_max].
Instance gen_two_cliques(int l, int n, std::int64_t p_max, std::uint64_t seed);

/// Reinterprets an instance as unit jobs, keeping its conflict graph.
Instance gen_unit_from_graph(const Instance& inst);

/// Agreement graph of the chained-triangle family, exposed so tests can
/// verify the construction directly.
Graph chained_triangle_agreement(int k);

}  // namespace fsc
