#include "fsc/path_cover.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace fsc {

namespace {

// Removal neighbours for a walk ending at y, in ascending order; empty when
// y cannot be a terminal. The removed edge must leave at least `min_far`
// edges beyond it: one when a fresh 1-path is acceptable, two when it is
// not. Candidates are judged against the component's original shape; the
// semantic validation below settles walks that reenter a component.
std::vector<int> terminal_removals(const MatchingDecomposition& dec, int y, SaveTarget target) {
    const MatchingComponent& comp = dec.components[dec.comp_of[y]];
    const auto& seq = comp.vertices;
    if (comp.kind == ComponentKind::cycle) {
        const int k = static_cast<int>(seq.size());
        const int o = dec.offset_of[y];
        int a = seq[(o + 1) % k], b = seq[(o + k - 1) % k];
        return {std::min(a, b), std::max(a, b)};
    }
    const int k = comp.length();
    const int o = dec.offset_of[y];
    if (k < 1 || o == 0 || o == k) return {};  // singletons and endpoints
    const int min_far = target == SaveTarget::zero_paths ? 1 : 2;
    std::vector<int> picks;
    if (o - 1 >= min_far) picks.push_back(seq[o - 1]);
    if (k - o - 1 >= min_far) picks.push_back(seq[o + 1]);
    std::sort(picks.begin(), picks.end());
    return picks;
}

// Interior components a walk may pass through, entered at a vertex that
// separates the two end objects.
bool entry_eligible(const MatchingDecomposition& dec, int y, SaveTarget target) {
    const MatchingComponent& comp = dec.components[dec.comp_of[y]];
    if (comp.kind != ComponentKind::path) return false;
    const int k = comp.length();
    const int o = dec.offset_of[y];
    if (target == SaveTarget::zero_paths) return k == 2 && o == 1;
    return (k == 2 && o == 1) || (k == 3 && (o == 1 || o == 2)) || (k == 4 && o == 2);
}

struct EntrySide {
    int removed;  // neighbour of the entry whose matching edge is dropped
    int far;      // far endpoint of the detached fragment (== removed if 1 vertex)
};

std::vector<EntrySide> entry_sides(const MatchingDecomposition& dec, int y) {
    const MatchingComponent& comp = dec.components[dec.comp_of[y]];
    const auto& seq = comp.vertices;
    const int k = comp.length();
    const int o = dec.offset_of[y];
    std::vector<EntrySide> sides{{seq[o - 1], seq[0]}, {seq[o + 1], seq[k]}};
    if (sides[1].removed < sides[0].removed) std::swap(sides[0], sides[1]);
    return sides;
}

std::vector<int> root_vertices(const MatchingDecomposition& dec, SaveTarget target) {
    std::vector<int> roots = dec.p0;
    if (target == SaveTarget::zero_one_paths) {
        for (const Edge& e : dec.p1) {
            roots.push_back(e.u);
            roots.push_back(e.v);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct WalkStep {
    int from_even;  // even vertex that discovered the entry
    int entry;
    int removed;    // neighbour of entry whose edge is dropped
    int continued;  // fragment endpoint the walk continues from
};

AlternatingPath assemble(int root, const std::vector<WalkStep>& steps, int last_even,
                         int terminal, int removal) {
    AlternatingPath ap;
    ap.vertices.push_back(root);
    for (const WalkStep& st : steps) {
        ap.add_edges.emplace_back(st.from_even, st.entry);
        ap.remove_edges.emplace_back(st.entry, st.removed);
        ap.vertices.push_back(st.entry);
        ap.vertices.push_back(st.removed);
        if (st.continued != st.removed) ap.vertices.push_back(st.continued);
    }
    ap.add_edges.emplace_back(last_even, terminal);
    ap.remove_edges.emplace_back(terminal, removal);
    ap.vertices.push_back(terminal);
    ap.vertices.push_back(removal);
    return ap;
}

int deficiency(const MatchingDecomposition& dec, SaveTarget target) {
    return target == SaveTarget::zero_paths
               ? dec.num_zero_paths()
               : dec.num_zero_paths() + dec.num_one_paths();
}

// Full semantic check of an assembled candidate: edge sets well formed, the
// swapped subgraph respects the degree cap, and the targeted deficiency
// count drops by exactly one. Walks may legally revisit a vertex (a
// terminal can delete a second edge of the component the walk entered), so
// membership checks alone would be too weak and vertex-disjointness too
// strong; applying the swap on a scratch copy decides exactly.
bool candidate_valid(const Graph& host, const TwoMatching& m, const AlternatingPath& ap,
                     SaveTarget target, int deficiency_before) {
    std::vector<Edge> adds = ap.add_edges, rems = ap.remove_edges;
    std::sort(adds.begin(), adds.end());
    std::sort(rems.begin(), rems.end());
    if (std::adjacent_find(adds.begin(), adds.end()) != adds.end()) return false;
    if (std::adjacent_find(rems.begin(), rems.end()) != rems.end()) return false;
    for (const Edge& e : adds)
        if (!host.has_edge(e.u, e.v) || m.contains(e.u, e.v)) return false;
    for (const Edge& e : rems)
        if (!m.contains(e.u, e.v)) return false;

    std::vector<Edge> scratch;
    scratch.reserve(m.edges.size());
    std::set_difference(m.edges.begin(), m.edges.end(), rems.begin(), rems.end(),
                        std::back_inserter(scratch));
    scratch.insert(scratch.end(), adds.begin(), adds.end());
    std::sort(scratch.begin(), scratch.end());

    TwoMatching swapped{m.host, std::move(scratch)};
    for (int d : swapped.degrees())
        if (d > 2) return false;
    return deficiency(decompose(swapped), target) == deficiency_before - 1;
}

struct BfsOutcome {
    std::optional<AlternatingPath> path;
    bool rejected_candidate = false;
};

// Multi-source BFS over (vertex, role) states. Roles keep entries and
// continuation vertices apart so that a vertex blocked in one role stays
// reachable in the other. A found walk is re-validated before use; chains
// assembled across branches can in rare geometries revisit a vertex, in
// which case the caller falls back to the exhaustive search below.
BfsOutcome bfs_search(const Graph& host, const TwoMatching& m,
                      const MatchingDecomposition& dec, SaveTarget target) {
    const int n = host.num_vertices();
    const int before = deficiency(dec, target);
    std::vector<bool> visited_even(n, false), visited_entry(n, false);
    std::vector<int> via_entry(n, -1), via_removed(n, -1), entry_from(n, -1);
    std::deque<int> queue;

    for (int r : root_vertices(dec, target)) {
        visited_even[r] = true;
        queue.push_back(r);
    }

    BfsOutcome out;
    auto reconstruct = [&](int last_even, int terminal, int removal) {
        std::vector<WalkStep> steps;
        int x = last_even;
        while (via_entry[x] != -1) {
            int y = via_entry[x];
            steps.push_back({entry_from[y], y, via_removed[x], x});
            x = entry_from[y];
        }
        std::reverse(steps.begin(), steps.end());
        return assemble(x, steps, last_even, terminal, removal);
    };

    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : host.neighbors(x)) {
            if (m.contains(x, y)) continue;
            const std::vector<int> removals = terminal_removals(dec, y, target);
            if (!removals.empty()) {
                for (int z : removals) {
                    AlternatingPath ap = reconstruct(x, y, z);
                    if (candidate_valid(host, m, ap, target, before)) {
                        out.path = std::move(ap);
                        return out;
                    }
                    out.rejected_candidate = true;
                }
                continue;
            }
            if (entry_eligible(dec, y, target) && !visited_entry[y]) {
                visited_entry[y] = true;
                entry_from[y] = x;
                for (const EntrySide& side : entry_sides(dec, y)) {
                    for (int f : {side.removed, side.far}) {
                        if (visited_even[f]) continue;
                        visited_even[f] = true;
                        via_entry[f] = y;
                        via_removed[f] = side.removed;
                        queue.push_back(f);
                    }
                }
            }
        }
    }
    return out;
}

// Exhaustive backtracking search over walks whose interior components are
// pairwise distinct; the terminal may reenter a component the walk passed
// through, so every assembled candidate goes through the semantic check.
// Complete for the walk family above; only used when the BFS had to reject
// an assembled candidate.
class ExhaustiveSearch {
public:
    ExhaustiveSearch(const Graph& host, const TwoMatching& m,
                     const MatchingDecomposition& dec, SaveTarget target)
        : host_(host), m_(m), dec_(dec), target_(target),
          before_(deficiency(dec, target)), used_comp_(dec.components.size(), false) {}

    std::optional<AlternatingPath> run() {
        for (int r : root_vertices(dec_, target_)) {
            root_ = r;
            const int rc = dec_.comp_of[r];
            used_comp_[rc] = true;
            bool found = expand(r);
            used_comp_[rc] = false;
            if (found) return result_;
        }
        return std::nullopt;
    }

private:
    bool expand(int x) {
        for (int y : host_.neighbors(x)) {
            if (m_.contains(x, y)) continue;
            for (int z : terminal_removals(dec_, y, target_)) {
                AlternatingPath ap = assemble(root_, steps_, x, y, z);
                if (candidate_valid(host_, m_, ap, target_, before_)) {
                    result_ = std::move(ap);
                    return true;
                }
            }
            const int cy = dec_.comp_of[y];
            if (used_comp_[cy] || !entry_eligible(dec_, y, target_)) continue;
            used_comp_[cy] = true;
            for (const EntrySide& side : entry_sides(dec_, y)) {
                int prev = -1;
                for (int f : {side.removed, side.far}) {
                    if (f == prev) continue;
                    prev = f;
                    steps_.push_back({x, y, side.removed, f});
                    if (expand(f)) return true;
                    steps_.pop_back();
                }
            }
            used_comp_[cy] = false;
        }
        return false;
    }

    const Graph& host_;
    const TwoMatching& m_;
    const MatchingDecomposition& dec_;
    SaveTarget target_;
    int before_;
    std::vector<bool> used_comp_;
    std::vector<WalkStep> steps_;
    int root_ = -1;
    std::optional<AlternatingPath> result_;
};

}  // namespace

int PathCover::num_zero_paths() const {
    int c = 0;
    for (const auto& p : paths) c += p.size() == 1;
    return c;
}

int PathCover::num_one_paths() const {
    int c = 0;
    for (const auto& p : paths) c += p.size() == 2;
    return c;
}

bool is_valid_path_cover(const Graph& host, const PathCover& cover) {
    if (cover.n != host.num_vertices()) return false;
    std::vector<bool> seen(cover.n, false);
    int covered = 0;
    for (const auto& p : cover.paths) {
        if (p.empty()) return false;
        for (int v : p) {
            if (v < 0 || v >= cover.n || seen[v]) return false;
            seen[v] = true;
            ++covered;
        }
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (!host.has_edge(p[i], p[i + 1])) return false;
    }
    return covered == cover.n;
}

SaveObject saved_object(const MatchingDecomposition& dec, const AlternatingPath& ap) {
    const int root = ap.vertices.front();
    const MatchingComponent& comp = dec.components[dec.comp_of[root]];
    SaveObject obj;
    obj.vertices = comp.vertices;
    obj.kind = comp.vertices.size() == 1 ? SaveObject::Kind::singleton : SaveObject::Kind::one_path;
    return obj;
}

std::optional<AlternatingPath> find_saving_path(const Graph& host, const TwoMatching& m,
                                                SaveTarget target) {
    MatchingDecomposition dec = decompose(m);
    if (root_vertices(dec, target).empty()) return std::nullopt;
    BfsOutcome out = bfs_search(host, m, dec, target);
    if (out.path) return out.path;
    if (out.rejected_candidate) return ExhaustiveSearch(host, m, dec, target).run();
    return std::nullopt;
}

TwoMatching apply_swap(const TwoMatching& m, const AlternatingPath& ap) {
    if (ap.add_edges.size() != ap.remove_edges.size())
        throw std::logic_error("alternating path must add and remove equally many edges");
    std::vector<Edge> edges = m.edges;
    for (const Edge& e : ap.remove_edges) {
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it == edges.end() || *it != e)
            throw std::logic_error("alternating path removes an edge not in the matching");
        edges.erase(it);
    }
    for (const Edge& e : ap.add_edges) {
        if (!m.host->has_edge(e.u, e.v))
            throw std::logic_error("alternating path adds a non-host edge");
        auto it = std::lower_bound(edges.begin(), edges.end(), e);
        if (it != edges.end() && *it == e)
            throw std::logic_error("alternating path adds an edge already in the matching");
        edges.insert(it, e);
    }
    TwoMatching result{m.host, std::move(edges)};
    for (int d : result.degrees())
        if (d > 2) throw std::logic_error("swap violates the degree cap");
    return result;
}

PathCover break_cycles(const TwoMatching& m) {
    MatchingDecomposition dec = decompose(m);
    PathCover cover;
    cover.n = m.host->num_vertices();
    for (const MatchingComponent& comp : dec.components) {
        if (comp.kind == ComponentKind::path) {
            cover.paths.push_back(comp.vertices);
            continue;
        }
        // Drop the edge between the smallest cycle vertex and its smaller
        // neighbour, then list the remaining path from its smaller end.
        std::vector<int> path(comp.vertices.begin() + 1, comp.vertices.end());
        path.push_back(comp.vertices.front());
        std::reverse(path.begin(), path.end());
        cover.paths.push_back(std::move(path));
    }
    return cover;
}

TwoMatching augment_to_fixpoint(const Graph& host, TwoMatching m, SaveTarget target) {
    int before = deficiency(decompose(m), target);
    while (before > 0) {
        std::optional<AlternatingPath> ap = find_saving_path(host, m, target);
        if (!ap) break;
        m = apply_swap(m, *ap);
        int after = deficiency(decompose(m), target);
        if (after != before - 1)
            throw std::logic_error("saving swap did not reduce the deficiency by one");
        before = after;
    }
    return m;
}

PathCover min_zero_path_cover(const Graph& host) {
    return break_cycles(augment_to_fixpoint(host, maximum_two_matching(host), SaveTarget::zero_paths));
}

TwoMatching min_zero_one_fixpoint(const Graph& host) {
    return augment_to_fixpoint(host, maximum_two_matching(host), SaveTarget::zero_one_paths);
}

PathCover min_zero_one_path_cover(const Graph& host) {
    return break_cycles(min_zero_one_fixpoint(host));
}

PathCover refine_to_min_singletons(const Graph& host, TwoMatching zero_one_fixpoint) {
    return break_cycles(
        augment_to_fixpoint(host, std::move(zero_one_fixpoint), SaveTarget::zero_paths));
}

PathCover compute_path_cover(const Graph& host, CoverObjective objective) {
    switch (objective) {
        case CoverObjective::zero_paths: return min_zero_path_cover(host);
        case CoverObjective::zero_one_paths: return min_zero_one_path_cover(host);
        case CoverObjective::zero_one_then_zero:
            return refine_to_min_singletons(host, min_zero_one_fixpoint(host));
    }
    throw std::invalid_argument("unknown cover objective");
}

}  // namespace fsc
