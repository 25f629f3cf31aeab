#pragma once

#include <vector>

#include "fsc/graph.hpp"

namespace fsc {

/// Maximum-cardinality matching on an arbitrary simple graph
/// (blossom-contraction augmenting search, non-bipartite safe).
/// Deterministic: roots and neighbours are scanned in ascending index order.
std::vector<Edge> maximum_matching(const Graph& g);

/// Spanning subgraph of `host` in which every vertex has degree at most 2.
/// Components are therefore simple paths (possibly single vertices) and
/// simple cycles.
struct TwoMatching {
    const Graph* host = nullptr;
    std::vector<Edge> edges;  // sorted

    bool contains(int u, int v) const;
    /// Per-vertex degree inside the subgraph.
    std::vector<int> degrees() const;
};

/// Maximum 2-matching of g, computed by reducing to maximum matching:
/// every vertex becomes two copies, every edge (u,v) becomes a small gadget
/// with two fresh vertices joined by an edge and wired to the copies of u
/// and v. Saturated gadgets project back to selected edges; a maximum
/// matching of the gadget graph with k edges projects to a maximum
/// 2-matching with k - m edges.
///
/// The raw result is canonicalized by merging disjoint cycles whenever a
/// crossing pair of host edges allows it, which never changes the edge
/// count or the path components but reduces the number of cycles.
TwoMatching maximum_two_matching(const Graph& g);

/// Component kind inside a 2-matching.
enum class ComponentKind { path, cycle };

struct MatchingComponent {
    ComponentKind kind = ComponentKind::path;
    /// Path: the vertex sequence with the smaller endpoint first.
    /// Cycle: rotated to start at the smallest vertex, oriented toward its
    /// smaller neighbour; vertices.front() is not repeated at the back.
    std::vector<int> vertices;

    int length() const {
        return kind == ComponentKind::path ? static_cast<int>(vertices.size()) - 1
                                           : static_cast<int>(vertices.size());
    }
};

/// Components of a 2-matching bucketed by shape. Paths of length k land in
/// p0/p1/p2/p3/p4/p_ge5; cycles (length >= 3) in `cycles`. Every host
/// vertex appears in exactly one component.
struct MatchingDecomposition {
    std::vector<int> p0;                        // singleton vertices
    std::vector<Edge> p1;                       // single-edge paths
    std::vector<std::vector<int>> p2, p3, p4;   // short paths as sequences
    std::vector<std::vector<int>> p_ge5;        // paths of length >= 5
    std::vector<std::vector<int>> cycles;

    // Flat component table plus a vertex -> (component, offset) index,
    // used by the alternating-path searches.
    std::vector<MatchingComponent> components;
    std::vector<int> comp_of;
    std::vector<int> offset_of;

    int num_zero_paths() const { return static_cast<int>(p0.size()); }
    int num_one_paths() const { return static_cast<int>(p1.size()); }

    int path_length_at(int v) const {
        const auto& c = components[comp_of[v]];
        return c.kind == ComponentKind::path ? c.length() : -1;
    }
    bool on_cycle(int v) const {
        return components[comp_of[v]].kind == ComponentKind::cycle;
    }
};

MatchingDecomposition decompose(const TwoMatching& m);

/// Singletons and path endpoints of a maximum 2-matching are pairwise
/// non-adjacent in the host graph; exposed for tests and internal checks.
bool deficient_vertices_independent(const Graph& host, const MatchingDecomposition& dec);

}  // namespace fsc
