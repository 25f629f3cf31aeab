#pragma once

#include <optional>
#include <vector>

#include "fsc/graph.hpp"
#include "fsc/matching.hpp"

namespace fsc {

/// What an augmentation step is allowed to eliminate.
///   zero_paths:     eliminate a singleton; the swap may leave a new 1-path.
///   zero_one_paths: eliminate a singleton or a 1-path; the swap must leave
///                   neither a new singleton nor a new 1-path.
enum class SaveTarget { zero_paths, zero_one_paths };

/// One cardinality-preserving edge swap along an alternating walk.
/// `add_edges` are host edges outside the matching, `remove_edges` are
/// matching edges; the two sets have equal size. Interior vertices are
/// pairwise distinct; the final removal may land back on a component the
/// walk entered (deleting a second edge of it), so the last vertex can
/// repeat an earlier one. Applying the swap reduces the targeted
/// deficiency count by exactly one.
struct AlternatingPath {
    std::vector<int> vertices;      // root object vertex first, removal end last
    std::vector<Edge> add_edges;
    std::vector<Edge> remove_edges;
};

/// Vertex-disjoint paths covering every vertex of the host graph; a single
/// vertex counts as a 0-path.
struct PathCover {
    int n = 0;
    std::vector<std::vector<int>> paths;

    int num_paths() const { return static_cast<int>(paths.size()); }
    int num_zero_paths() const;
    int num_one_paths() const;
};

/// True iff the paths partition 0..n-1 and consecutive vertices are host edges.
bool is_valid_path_cover(const Graph& host, const PathCover& cover);

/// The deficient object a saving path starts from.
struct SaveObject {
    enum class Kind { singleton, one_path };
    Kind kind = Kind::singleton;
    std::vector<int> vertices;
};

/// Object saved by `ap` (looked up from the root vertex of the walk).
SaveObject saved_object(const MatchingDecomposition& dec, const AlternatingPath& ap);

/// Searches for a simple alternating walk that saves one deficient object
/// of the maximum 2-matching `m`, by a multi-source BFS rooted at all
/// objects at once. Returns absent iff no object can be saved.
///
/// The walk starts at an object vertex, enters interior paths (2-paths for
/// zero_paths; 2-, 3- and middle-entered 4-paths for zero_one_paths) at a
/// vertex separating their end objects, continues from the detached end
/// object, and finally removes one edge of a long path or cycle chosen so
/// that no forbidden short component is left behind.
std::optional<AlternatingPath> find_saving_path(const Graph& host, const TwoMatching& m,
                                                SaveTarget target);

/// m - remove_edges + add_edges. Throws std::logic_error when `ap` is
/// inconsistent with `m` (edge membership or the degree cap would break).
TwoMatching apply_swap(const TwoMatching& m, const AlternatingPath& ap);

/// Removes one edge per cycle (between the cycle's smallest vertex and its
/// smaller neighbour) and emits all components as a path cover.
PathCover break_cycles(const TwoMatching& m);

/// Repeats find_saving_path/apply_swap until no further save exists.
TwoMatching augment_to_fixpoint(const Graph& host, TwoMatching m, SaveTarget target);

/// Path cover with the minimum possible number of 0-paths.
PathCover min_zero_path_cover(const Graph& host);

/// Path cover with the minimum possible total number of 0- and 1-paths.
PathCover min_zero_one_path_cover(const Graph& host);

/// The matching fixed point behind min_zero_one_path_cover, before cycles
/// are broken; input to refine_to_min_singletons.
TwoMatching min_zero_one_fixpoint(const Graph& host);

/// Further augments a zero-one fixed point with zero_paths-style swaps,
/// trading singletons for 1-paths. The result keeps the minimum total
/// number of 0- and 1-paths and additionally has the minimum number of
/// 0-paths among such covers.
PathCover refine_to_min_singletons(const Graph& host, TwoMatching zero_one_fixpoint);

enum class CoverObjective { zero_paths, zero_one_paths, zero_one_then_zero };

PathCover compute_path_cover(const Graph& host, CoverObjective objective);

}  // namespace fsc
