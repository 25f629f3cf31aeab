#include "fsc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

namespace fsc {

namespace {

constexpr int kMaxBruteEdges = 25;
constexpr int kMaxBruteVertices = 10;
constexpr int kMaxBruteJobs = 8;

void check_edge_guard(const Graph& g) {
    if (g.num_edges() > kMaxBruteEdges)
        throw std::invalid_argument("instance too large for brute-force enumeration (> " +
                                    std::to_string(kMaxBruteEdges) + " edges)");
}

}  // namespace

int brute_max_two_matching(const Graph& g) {
    check_edge_guard(g);
    const int m = g.num_edges();
    const int n = g.num_vertices();
    // Gray-code walk over all edge subsets with O(1) feasibility updates.
    std::vector<int> deg(n, 0);
    std::vector<bool> in(m, false);
    int size = 0, violations = 0, best = 0;
    const std::uint64_t total = 1ULL << m;
    for (std::uint64_t step = 1; step < total; ++step) {
        int bit = std::countr_zero(step);
        const Edge& e = g.edges()[static_cast<std::size_t>(bit)];
        if (in[bit]) {
            in[bit] = false;
            --size;
            if (deg[e.u]-- > 2) --violations;
            if (deg[e.v]-- > 2) --violations;
        } else {
            in[bit] = true;
            ++size;
            if (++deg[e.u] > 2) ++violations;
            if (++deg[e.v] > 2) ++violations;
        }
        if (violations == 0) best = std::max(best, size);
    }
    return best;
}

namespace {

void bnb_extend(const Graph& g, std::size_t idx, std::vector<int>& deg, int size, int& best) {
    const int remaining = g.num_edges() - static_cast<int>(idx);
    if (size + remaining <= best) return;
    if (idx == g.edges().size()) {
        best = std::max(best, size);
        return;
    }
    const Edge& e = g.edges()[idx];
    if (deg[e.u] < 2 && deg[e.v] < 2) {
        ++deg[e.u];
        ++deg[e.v];
        bnb_extend(g, idx + 1, deg, size + 1, best);
        --deg[e.u];
        --deg[e.v];
    }
    bnb_extend(g, idx + 1, deg, size, best);
}

}  // namespace

int brute_max_two_matching_bnb(const Graph& g) {
    check_edge_guard(g);
    std::vector<int> deg(g.num_vertices(), 0);
    int best = 0;
    bnb_extend(g, 0, deg, 0, best);
    return best;
}

namespace {

// pathable[mask] == true iff some simple path of g visits exactly `mask`.
std::vector<bool> spanning_path_masks(const Graph& g) {
    const int n = g.num_vertices();
    const std::uint32_t total = 1u << n;
    // reach[mask] = bitset of possible endpoints of a path spanning mask.
    std::vector<std::uint32_t> reach(total, 0);
    for (int v = 0; v < n; ++v) reach[1u << v] = 1u << v;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        for (int v = 0; v < n; ++v) {
            if (!(ends & (1u << v))) continue;
            for (int w : g.neighbors(v)) {
                if (mask & (1u << w)) continue;
                reach[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    std::vector<bool> pathable(total, false);
    for (std::uint32_t mask = 1; mask < total; ++mask) pathable[mask] = reach[mask] != 0;
    return pathable;
}

// Minimum total cost of partitioning all vertices into spanning paths,
// where each path piece with vertex set T costs cost(|T|).
template <typename CostFn>
long long min_partition_cost(int n, const std::vector<bool>& pathable, CostFn cost) {
    const std::uint32_t total = 1u << n;
    constexpr long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> dp(total, inf);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const std::uint32_t low = mask & (~mask + 1);
        for (std::uint32_t sub = mask; sub; sub = (sub - 1) & mask) {
            if (!(sub & low) || !pathable[sub]) continue;
            long long prev = dp[mask ^ sub];
            if (prev == inf) continue;
            dp[mask] = std::min(dp[mask], prev + cost(std::popcount(sub)));
        }
    }
    return dp[total - 1];
}

}  // namespace

CoverStats brute_cover_stats(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxBruteVertices)
        throw std::invalid_argument("instance too large for brute-force cover enumeration (> " +
                                    std::to_string(kMaxBruteVertices) + " vertices)");
    CoverStats stats;
    if (n == 0) return stats;
    std::vector<bool> pathable = spanning_path_masks(g);
    stats.min_num_paths =
        static_cast<int>(min_partition_cost(n, pathable, [](int) { return 1LL; }));
    stats.min_zero_paths = static_cast<int>(
        min_partition_cost(n, pathable, [](int sz) { return sz == 1 ? 1LL : 0LL; }));
    stats.min_zero_one_paths = static_cast<int>(
        min_partition_cost(n, pathable, [](int sz) { return sz <= 2 ? 1LL : 0LL; }));
    // Lexicographic bundle: first the 0/1-path count, then 0-paths alone.
    const long long weight = n + 1;
    long long joint = min_partition_cost(n, pathable, [weight](int sz) {
        return (sz <= 2 ? weight : 0LL) + (sz == 1 ? 1LL : 0LL);
    });
    stats.joint_min_zero = static_cast<int>(joint % weight);
    return stats;
}

std::int64_t brute_unit_optimum(const Instance& inst) {
    if (!inst.is_unit()) throw std::invalid_argument("brute_unit_optimum requires a unit instance");
    CoverStats stats = brute_cover_stats(complement(inst.conflicts));
    return inst.num_jobs() + stats.min_num_paths;
}

std::int64_t brute_two_clique_bound(const Instance& inst, const CliquePartition& part) {
    const int n = inst.num_jobs();
    if (n > kMaxBruteJobs)
        throw std::invalid_argument("instance too large for permutation enumeration (> " +
                                    std::to_string(kMaxBruteJobs) + " jobs)");
    (void)two_clique_lower_bound(inst, part);  // validates the partition

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    if (n == 0) return 0;

    std::vector<std::int64_t> s1(n), e1(n), s2(n), e2(n);
    do {
        std::int64_t m1_free = 0, m2_free = 0, makespan = 0;
        for (int pos = 0; pos < n; ++pos) {
            const int j = order[pos];
            const std::int64_t p1 = inst.times[j].first, p2 = inst.times[j].second;
            // Earliest M1 start avoiding conflicting M2 intervals of
            // already placed jobs, then earliest M2 start likewise.
            std::int64_t t = m1_free;
            bool moved = true;
            while (moved && p1 > 0) {
                moved = false;
                for (int q = 0; q < pos; ++q) {
                    const int i = order[q];
                    if (!inst.conflicts.has_edge(i, j)) continue;
                    if (t < e2[i] && s2[i] < t + p1) {
                        t = e2[i];
                        moved = true;
                    }
                }
            }
            s1[j] = t;
            e1[j] = t + p1;
            m1_free = e1[j];

            std::int64_t u = std::max(m2_free, e1[j]);
            moved = true;
            while (moved && p2 > 0) {
                moved = false;
                for (int q = 0; q < pos; ++q) {
                    const int i = order[q];
                    if (!inst.conflicts.has_edge(i, j)) continue;
                    if (u < e1[i] && s1[i] < u + p2) {
                        u = e1[i];
                        moved = true;
                    }
                }
            }
            s2[j] = u;
            e2[j] = u + p2;
            m2_free = e2[j];
            makespan = std::max(makespan, e2[j]);
        }
        best = std::min(best, makespan);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace fsc
