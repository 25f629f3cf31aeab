#pragma once

#include <vector>

#include "fsc/graph.hpp"
#include "fsc/rng.hpp"

namespace fsc::test {

/// Labeled graph on n vertices from a bitmask over the n*(n-1)/2 vertex
/// pairs, enumerated (0,1), (0,2), ..., in row order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ULL << bit)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

/// Seeded G(n, p) sample with a cap on the edge count (rejection sampling),
/// so brute-force references stay inside their guards.
inline Graph random_graph(Rng& rng, int n, int max_edges) {
    while (true) {
        double p = rng.next_real();
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_real() < p) edges.emplace_back(u, v);
        if (static_cast<int>(edges.size()) <= max_edges) return Graph(n, std::move(edges));
    }
}

/// Reference maximum matching size by enumerating all edge subsets.
/// Kept independent of the production matcher on purpose.
inline int brute_max_matching(const Graph& g) {
    const int m = g.num_edges();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<bool> used(g.num_vertices(), false);
        int size = 0;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!(mask & (1ULL << e))) continue;
            const Edge& edge = g.edges()[e];
            if (used[edge.u] || used[edge.v]) ok = false;
            used[edge.u] = used[edge.v] = true;
            ++size;
        }
        if (ok && size > best) best = size;
    }
    return best;
}

}  // namespace fsc::test
