#include "fsc/matching.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>

namespace fsc {

namespace {

// Blossom-contraction maximum matching over an adjacency list.
// Classic O(V * E * alpha) augmenting scheme: one augmentation attempt per
// free vertex, in ascending order, after a greedy warm start.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const std::vector<std::vector<int>>& adj)
        : n_(static_cast<int>(adj.size())),
          adj_(adj),
          match_(n_, -1),
          parent_(n_),
          base_(n_),
          used_(n_),
          in_blossom_(n_) {}

    std::vector<int> solve() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (int u : adj_[v]) {
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) find_augmenting_path(v);
        return match_;
    }

private:
    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_blossom_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = true;
            in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void contract(int v, int u, std::queue<int>& q) {
        int b = lowest_common_base(v, u);
        std::fill(in_blossom_.begin(), in_blossom_.end(), false);
        mark_blossom_path(v, b, u);
        mark_blossom_path(u, b, v);
        for (int i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
                used_[i] = true;
                q.push(i);
            }
        }
    }

    bool find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;

        std::queue<int> q;
        used_[root] = true;
        q.push(root);

        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[v]) {
                if (base_[v] == base_[u] || match_[v] == u) continue;
                if (u == root || (match_[u] != -1 && parent_[match_[u]] != -1)) {
                    contract(v, u, q);
                } else if (parent_[u] == -1) {
                    parent_[u] = v;
                    if (match_[u] == -1) {
                        augment_along(u);
                        return true;
                    }
                    used_[match_[u]] = true;
                    q.push(match_[u]);
                }
            }
        }
        return false;
    }

    void augment_along(int u) {
        while (u != -1) {
            int pv = parent_[u];
            int next = match_[pv];
            match_[u] = pv;
            match_[pv] = u;
            u = next;
        }
    }

    int n_;
    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

std::vector<int> matching_adjacency_count(const std::vector<Edge>& edges, int n) {
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

// 2-opt join of two disjoint cycles: drop one edge from each and reconnect
// crosswise. Requires both crossing edges to exist in the host.
bool try_merge_cycles(const Graph& host, std::vector<Edge>& edges,
                      const std::vector<int>& ca, const std::vector<int>& cb) {
    const std::size_t ka = ca.size(), kb = cb.size();
    for (std::size_t i = 0; i < ka; ++i) {
        int x = ca[i], xs = ca[(i + 1) % ka];
        for (std::size_t j = 0; j < kb; ++j) {
            int y = cb[j], ys = cb[(j + 1) % kb];
            if (!host.has_edge(x, y) || !host.has_edge(xs, ys)) continue;
            std::vector<Edge> next;
            next.reserve(edges.size());
            Edge drop1(x, xs), drop2(y, ys);
            for (const Edge& e : edges)
                if (e != drop1 && e != drop2) next.push_back(e);
            next.emplace_back(x, y);
            next.emplace_back(xs, ys);
            std::sort(next.begin(), next.end());
            edges = std::move(next);
            return true;
        }
    }
    return false;
}

void merge_cycles(const Graph& host, std::vector<Edge>& edges) {
    bool merged = true;
    while (merged) {
        merged = false;
        TwoMatching m{&host, edges};
        MatchingDecomposition dec = decompose(m);
        const auto& cycles = dec.cycles;
        for (std::size_t a = 0; a < cycles.size() && !merged; ++a)
            for (std::size_t b = a + 1; b < cycles.size() && !merged; ++b)
                merged = try_merge_cycles(host, edges, cycles[a], cycles[b]);
    }
}

}  // namespace

std::vector<Edge> maximum_matching(const Graph& g) {
    std::vector<std::vector<int>> adj(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) adj[v] = g.neighbors(v);
    std::vector<int> match = BlossomMatcher(adj).solve();
    std::vector<Edge> result;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (match[v] > v) result.emplace_back(v, match[v]);
    return result;
}

bool TwoMatching::contains(int u, int v) const {
    return std::binary_search(edges.begin(), edges.end(), Edge(u, v));
}

std::vector<int> TwoMatching::degrees() const {
    return matching_adjacency_count(edges, host->num_vertices());
}

TwoMatching maximum_two_matching(const Graph& g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    // Gadget layout: copies of v at 2v and 2v+1; per-edge vertices at
    // 2n + 2e and 2n + 2e + 1.
    const int gn = 2 * n + 2 * m;
    std::vector<std::vector<int>> adj(gn);
    for (int e = 0; e < m; ++e) {
        const Edge& edge = g.edges()[static_cast<std::size_t>(e)];
        int eu = 2 * n + 2 * e;
        int ev = eu + 1;
        adj[eu] = {2 * edge.u, 2 * edge.u + 1, ev};
        adj[ev] = {2 * edge.v, 2 * edge.v + 1, eu};
        adj[2 * edge.u].push_back(eu);
        adj[2 * edge.u + 1].push_back(eu);
        adj[2 * edge.v].push_back(ev);
        adj[2 * edge.v + 1].push_back(ev);
    }

    std::vector<int> match = BlossomMatcher(adj).solve();

    int matched = 0;
    for (int v = 0; v < gn; ++v)
        if (match[v] != -1) ++matched;
    matched /= 2;

    std::vector<Edge> selected;
    for (int e = 0; e < m; ++e) {
        int eu = 2 * n + 2 * e;
        int ev = eu + 1;
        bool u_side = match[eu] != -1 && match[eu] < 2 * n;
        bool v_side = match[ev] != -1 && match[ev] < 2 * n;
        if (u_side && v_side) selected.push_back(g.edges()[static_cast<std::size_t>(e)]);
    }
    assert(static_cast<int>(selected.size()) == matched - m);

    std::sort(selected.begin(), selected.end());
    merge_cycles(g, selected);

    TwoMatching result{&g, std::move(selected)};
    for (int d : result.degrees())
        if (d > 2) throw std::logic_error("projected 2-matching violates the degree cap");
    return result;
}

MatchingDecomposition decompose(const TwoMatching& m) {
    const Graph& host = *m.host;
    const int n = host.num_vertices();

    std::vector<std::vector<int>> madj(n);
    for (const Edge& e : m.edges) {
        madj[e.u].push_back(e.v);
        madj[e.v].push_back(e.u);
    }
    for (auto& a : madj) std::sort(a.begin(), a.end());

    MatchingDecomposition dec;
    dec.comp_of.assign(n, -1);
    dec.offset_of.assign(n, -1);

    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        // Gather the component of s.
        std::vector<int> comp_vertices;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp_vertices.push_back(v);
            for (int w : madj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }

        int cedges = 0;
        for (int v : comp_vertices) cedges += static_cast<int>(madj[v].size());
        cedges /= 2;
        const bool is_cycle = cedges == static_cast<int>(comp_vertices.size());

        MatchingComponent comp;
        if (is_cycle) {
            comp.kind = ComponentKind::cycle;
            int start = *std::min_element(comp_vertices.begin(), comp_vertices.end());
            int prev = start;
            int cur = std::min(madj[start][0], madj[start][1]);
            comp.vertices.push_back(start);
            while (cur != start) {
                comp.vertices.push_back(cur);
                int next = madj[cur][0] == prev ? madj[cur][1] : madj[cur][0];
                prev = cur;
                cur = next;
            }
        } else {
            comp.kind = ComponentKind::path;
            if (comp_vertices.size() == 1) {
                comp.vertices = comp_vertices;
            } else {
                std::vector<int> ends;
                for (int v : comp_vertices)
                    if (madj[v].size() == 1) ends.push_back(v);
                int start = *std::min_element(ends.begin(), ends.end());
                int prev = -1, cur = start;
                while (cur != -1) {
                    comp.vertices.push_back(cur);
                    int next = -1;
                    for (int w : madj[cur])
                        if (w != prev) next = w;
                    prev = cur;
                    cur = next;
                }
            }
        }

        int comp_id = static_cast<int>(dec.components.size());
        for (std::size_t i = 0; i < comp.vertices.size(); ++i) {
            dec.comp_of[comp.vertices[i]] = comp_id;
            dec.offset_of[comp.vertices[i]] = static_cast<int>(i);
        }

        if (comp.kind == ComponentKind::cycle) {
            dec.cycles.push_back(comp.vertices);
        } else {
            switch (comp.length()) {
                case 0: dec.p0.push_back(comp.vertices[0]); break;
                case 1: dec.p1.emplace_back(comp.vertices[0], comp.vertices[1]); break;
                case 2: dec.p2.push_back(comp.vertices); break;
                case 3: dec.p3.push_back(comp.vertices); break;
                case 4: dec.p4.push_back(comp.vertices); break;
                default: dec.p_ge5.push_back(comp.vertices); break;
            }
        }
        dec.components.push_back(std::move(comp));
    }
    return dec;
}

bool deficient_vertices_independent(const Graph& host, const MatchingDecomposition& dec) {
    std::vector<int> deficient;
    for (const auto& comp : dec.components) {
        if (comp.kind == ComponentKind::cycle) continue;
        if (comp.vertices.size() == 1) {
            deficient.push_back(comp.vertices.front());
        } else {
            deficient.push_back(comp.vertices.front());
            deficient.push_back(comp.vertices.back());
        }
    }
    for (std::size_t i = 0; i < deficient.size(); ++i) {
        for (std::size_t j = i + 1; j < deficient.size(); ++j) {
            const int u = deficient[i], v = deficient[j];
            // The endpoints of a 1-path are joined by their own matching
            // edge; only adjacency outside the matching breaks maximality.
            if (dec.comp_of[u] == dec.comp_of[v] &&
                dec.components[dec.comp_of[u]].length() == 1)
                continue;
            if (host.has_edge(u, v)) return false;
        }
    }
    return true;
}

}  // namespace fsc
