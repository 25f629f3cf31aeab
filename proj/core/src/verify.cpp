#include "fsc/verify.hpp"

#include <algorithm>

#include "fsc/generate.hpp"
#include "fsc/matching.hpp"
#include "fsc/oracle.hpp"
#include "fsc/path_cover.hpp"
#include "fsc/rng.hpp"
#include "fsc/scheduling.hpp"

namespace fsc {

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask & (1ULL << bit)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_graph(Rng& rng, int n, int max_edges) {
    while (true) {
        double p = rng.next_real();
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_real() < p) edges.emplace_back(u, v);
        if (static_cast<int>(edges.size()) <= max_edges) return Graph(n, std::move(edges));
    }
}

template <typename Fn>
VerifyCheck run_check(const std::string& name, Fn fn) {
    VerifyCheck check;
    check.name = name;
    check.detail = fn();
    check.passed = check.detail.empty();
    return check;
}

std::string sweep_all_graphs(int max_n, const std::function<std::string(const Graph&)>& fn) {
    for (int n = 0; n <= max_n; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            std::string err = fn(g);
            if (!err.empty())
                return "n=" + std::to_string(n) + " mask=" + std::to_string(mask) + ": " + err;
        }
    }
    return {};
}

std::string check_matching_optimal(const Graph& g) {
    TwoMatching m = maximum_two_matching(g);
    int expect = brute_max_two_matching(g);
    if (static_cast<int>(m.edges.size()) != expect)
        return "2-matching has " + std::to_string(m.edges.size()) + " edges, brute force says " +
               std::to_string(expect);
    if (!deficient_vertices_independent(g, decompose(m)))
        return "deficient vertices are adjacent in a maximum 2-matching";
    return {};
}

std::string check_cover_minima(const Graph& g) {
    CoverStats stats = brute_cover_stats(g);
    PathCover a = min_zero_path_cover(g);
    if (!is_valid_path_cover(g, a)) return "zero-path cover invalid";
    if (a.num_zero_paths() != stats.min_zero_paths)
        return "zero-path cover has " + std::to_string(a.num_zero_paths()) +
               " singletons, brute force says " + std::to_string(stats.min_zero_paths);
    TwoMatching fp = min_zero_one_fixpoint(g);
    PathCover b = break_cycles(fp);
    if (!is_valid_path_cover(g, b)) return "zero-one cover invalid";
    if (b.num_zero_paths() + b.num_one_paths() != stats.min_zero_one_paths)
        return "zero-one cover has " + std::to_string(b.num_zero_paths() + b.num_one_paths()) +
               " short paths, brute force says " + std::to_string(stats.min_zero_one_paths);
    PathCover r = refine_to_min_singletons(g, std::move(fp));
    if (!is_valid_path_cover(g, r)) return "refined cover invalid";
    if (r.num_zero_paths() + r.num_one_paths() != stats.min_zero_one_paths ||
        r.num_zero_paths() != stats.joint_min_zero)
        return "refined cover (" + std::to_string(r.num_zero_paths()) + ", " +
               std::to_string(r.num_one_paths()) + ") misses joint minimum (" +
               std::to_string(stats.joint_min_zero) + " of " +
               std::to_string(stats.min_zero_one_paths) + ")";
    return {};
}

}  // namespace

VerifyReport verify_small_exhaustive(int max_n) {
    max_n = std::min(max_n, 6);
    VerifyReport report;
    report.checks.push_back(run_check("two-matching maximality, all graphs n<=" +
                                          std::to_string(max_n),
                                      [&] { return sweep_all_graphs(max_n, check_matching_optimal); }));
    report.checks.push_back(run_check("cover minima and joint refinement, all graphs n<=" +
                                          std::to_string(max_n),
                                      [&] { return sweep_all_graphs(max_n, check_cover_minima); }));
    report.checks.push_back(run_check("oracle cross-validation, all graphs n<=4", [&] {
        return sweep_all_graphs(std::min(max_n, 4), [](const Graph& g) -> std::string {
            if (brute_max_two_matching(g) != brute_max_two_matching_bnb(g))
                return "subset enumeration and branch-and-bound disagree";
            return {};
        });
    }));
    return report;
}

VerifyReport verify_random(std::uint64_t seed, int rounds) {
    VerifyReport report;
    report.checks.push_back(run_check("two-matching maximality, random graphs n<=10", [&] {
        Rng rng(seed);
        for (int i = 0; i < rounds; ++i) {
            Graph g = random_graph(rng, 1 + static_cast<int>(rng.next_below(10)), 25);
            std::string err = check_matching_optimal(g);
            if (!err.empty()) return "round " + std::to_string(i) + ": " + err;
        }
        return std::string{};
    }));
    report.checks.push_back(run_check("cover minima, random graphs n<=8", [&] {
        Rng rng(seed + 1);
        for (int i = 0; i < rounds; ++i) {
            Graph g = random_graph(rng, 1 + static_cast<int>(rng.next_below(8)), 28);
            std::string err = check_cover_minima(g);
            if (!err.empty()) return "round " + std::to_string(i) + ": " + err;
        }
        return std::string{};
    }));
    report.checks.push_back(run_check("schedule feasibility and makespan identity", [&] {
        Rng rng(seed + 2);
        for (int i = 0; i < rounds; ++i) {
            int n = 1 + static_cast<int>(rng.next_below(30));
            Instance inst = gen_random_gnp(n, rng.next_real(), rng.next_u64());
            for (CoverObjective obj : {CoverObjective::zero_paths, CoverObjective::zero_one_paths,
                                       CoverObjective::zero_one_then_zero}) {
                PathCover cover = compute_path_cover(complement(inst.conflicts), obj);
                Schedule s = schedule_from_cover(cover, n);
                ValidationResult val = validate_schedule(inst, s);
                if (!val.ok) return "round " + std::to_string(i) + ": " + val.message;
                if (!makespan_identity_check(cover, s))
                    return "round " + std::to_string(i) + ": makespan identity broken";
            }
        }
        return std::string{};
    }));
    return report;
}

VerifyReport verify_ratios(std::uint64_t seed, int rounds) {
    VerifyReport report;
    report.checks.push_back(run_check("unit solver ratio bounds vs brute optimum, n<=8", [&] {
        Rng rng(seed);
        for (int i = 0; i < rounds; ++i) {
            int n = 1 + static_cast<int>(rng.next_below(8));
            Instance inst = gen_random_gnp(n, rng.next_real(), rng.next_u64());
            std::int64_t opt = brute_unit_optimum(inst);
            std::int64_t mk_b = solve_unit(inst, CoverObjective::zero_one_paths).makespan;
            std::int64_t mk_a = solve_unit(inst, CoverObjective::zero_paths).makespan;
            if (3 * mk_b > 4 * opt)
                return "round " + std::to_string(i) + ": zero-one solver exceeded 4/3 bound (" +
                       std::to_string(mk_b) + " vs optimum " + std::to_string(opt) + ")";
            if (2 * mk_a > 3 * opt)
                return "round " + std::to_string(i) + ": zero-path solver exceeded 3/2 bound (" +
                       std::to_string(mk_a) + " vs optimum " + std::to_string(opt) + ")";
        }
        return std::string{};
    }));
    report.checks.push_back(run_check("two-clique solver vs lower bound", [&] {
        Rng rng(seed + 1);
        for (int i = 0; i < rounds; ++i) {
            int n = 2 + static_cast<int>(rng.next_below(39));
            int l = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
            Instance inst = gen_two_cliques(l, n, 100, rng.next_u64());
            auto part = recognize_two_cliques(inst.conflicts);
            if (!part) return "round " + std::to_string(i) + ": two-clique recognition failed";
            Schedule s = two_clique_schedule(inst, *part);
            ValidationResult val = validate_schedule(inst, s);
            if (!val.ok) return "round " + std::to_string(i) + ": " + val.message;
            std::int64_t bound = two_clique_lower_bound(inst, *part);
            if (2 * s.makespan > 3 * bound)
                return "round " + std::to_string(i) + ": exceeded 3/2 of the lower bound";
        }
        return std::string{};
    }));
    return report;
}

}  // namespace fsc
