#include <doctest.h>

#include <algorithm>

#include "fsc/oracle.hpp"
#include "fsc/path_cover.hpp"
#include "helpers.hpp"

using namespace fsc;
using test::graph_from_mask;
using test::random_graph;

namespace {

Graph graph_of(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

}  // namespace

TEST_CASE("saving search, singleton next to a triangle") {
    // Singleton 0 adjacent to vertex 1 of the matched triangle {1,2,3}.
    Graph host = graph_of(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    TwoMatching m{&host, {Edge(1, 2), Edge(1, 3), Edge(2, 3)}};

    auto ap = find_saving_path(host, m, SaveTarget::zero_paths);
    REQUIRE(ap.has_value());
    CHECK(ap->vertices == std::vector<int>{0, 1, 2});
    CHECK(ap->add_edges == std::vector<Edge>{Edge(0, 1)});
    CHECK(ap->remove_edges == std::vector<Edge>{Edge(1, 2)});

    TwoMatching swapped = apply_swap(m, *ap);
    CHECK(swapped.edges == std::vector<Edge>{Edge(0, 1), Edge(1, 3), Edge(2, 3)});
    CHECK(decompose(swapped).num_zero_paths() == 0);
}

TEST_CASE("saving search, star with a stranded leaf has no escape") {
    Graph host = graph_of(4, {{0, 1}, {0, 2}, {0, 3}});
    TwoMatching m{&host, {Edge(0, 1), Edge(0, 2)}};
    CHECK(brute_cover_stats(host).min_zero_paths == 1);
    CHECK_FALSE(find_saving_path(host, m, SaveTarget::zero_paths).has_value());
}

TEST_CASE("saving search walks a chain of 2-paths into a cycle") {
    // Singleton 0; 2-paths 1-2-3 and 4-5-6 entered at their middles;
    // triangle 7-8-9 supplies the removable edge.
    Graph host = graph_of(10, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9}, {7, 9},
                               {0, 2}, {3, 5}, {6, 7}});
    TwoMatching m{&host,
                  {Edge(1, 2), Edge(2, 3), Edge(4, 5), Edge(5, 6), Edge(7, 8), Edge(7, 9),
                   Edge(8, 9)}};

    auto ap = find_saving_path(host, m, SaveTarget::zero_paths);
    REQUIRE(ap.has_value());
    CHECK(ap->vertices == std::vector<int>{0, 2, 3, 5, 6, 7, 8});
    CHECK(ap->add_edges == std::vector<Edge>{Edge(0, 2), Edge(3, 5), Edge(6, 7)});
    CHECK(ap->remove_edges == std::vector<Edge>{Edge(2, 3), Edge(5, 6), Edge(7, 8)});

    MatchingDecomposition after = decompose(apply_swap(m, *ap));
    CHECK(after.num_zero_paths() == 0);
}

TEST_CASE("zero-one search, 1-path saved into a 5-cycle") {
    Graph host = graph_of(7, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 6}, {0, 2}});
    TwoMatching m{&host, {Edge(0, 1), Edge(2, 3), Edge(2, 6), Edge(3, 4), Edge(4, 5), Edge(5, 6)}};

    auto ap = find_saving_path(host, m, SaveTarget::zero_one_paths);
    REQUIRE(ap.has_value());
    CHECK(ap->vertices == std::vector<int>{0, 2, 3});
    CHECK(ap->add_edges == std::vector<Edge>{Edge(0, 2)});
    CHECK(ap->remove_edges == std::vector<Edge>{Edge(2, 3)});

    MatchingDecomposition after = decompose(apply_swap(m, *ap));
    CHECK(after.num_zero_paths() + after.num_one_paths() == 0);
}

TEST_CASE("zero-one search refuses the middle of a terminal 4-path") {
    // Singleton 0 sees only the middle of the 4-path 1-2-3-4-5.
    Graph host = graph_of(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 3}});
    TwoMatching m{&host, {Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5)}};
    CHECK(brute_cover_stats(host).min_zero_one_paths == 1);
    CHECK_FALSE(find_saving_path(host, m, SaveTarget::zero_one_paths).has_value());
}

TEST_CASE("zero-one search chains an end edge into a long path") {
    // 1-path (0,1); interior 3-path 2-3-4-5 entered at 3; terminal 5-path
    // 6..11 entered at 8, dropping toward the far end.
    Graph host = graph_of(12, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {8, 9}, {9, 10},
                               {10, 11}, {1, 3}, {5, 8}});
    TwoMatching m{&host,
                  {Edge(0, 1), Edge(2, 3), Edge(3, 4), Edge(4, 5), Edge(6, 7), Edge(7, 8),
                   Edge(8, 9), Edge(9, 10), Edge(10, 11)}};

    auto ap = find_saving_path(host, m, SaveTarget::zero_one_paths);
    REQUIRE(ap.has_value());
    CHECK(ap->vertices == std::vector<int>{1, 3, 4, 5, 8, 9});
    CHECK(ap->add_edges == std::vector<Edge>{Edge(1, 3), Edge(5, 8)});
    CHECK(ap->remove_edges == std::vector<Edge>{Edge(3, 4), Edge(8, 9)});

    MatchingDecomposition after = decompose(apply_swap(m, *ap));
    CHECK(after.num_zero_paths() + after.num_one_paths() == 0);
    SaveObject obj = saved_object(decompose(m), *ap);
    CHECK(obj.kind == SaveObject::Kind::one_path);
    CHECK(obj.vertices == std::vector<int>{0, 1});
}

TEST_CASE("apply_swap validates its input") {
    Graph host = graph_of(4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}});
    TwoMatching m{&host, {Edge(1, 2), Edge(1, 3), Edge(2, 3)}};

    AlternatingPath bogus;
    bogus.vertices = {0, 1, 2};
    bogus.add_edges = {Edge(0, 1)};
    bogus.remove_edges = {Edge(0, 3)};  // not in the matching
    CHECK_THROWS_AS(apply_swap(m, bogus), std::logic_error);

    bogus.remove_edges = {Edge(1, 2)};
    bogus.add_edges = {Edge(2, 3)};  // already matched
    CHECK_THROWS_AS(apply_swap(m, bogus), std::logic_error);
}

TEST_CASE("swaps preserve cardinality and the degree cap across random runs") {
    Rng rng(2001);
    int swaps_seen = 0;
    for (int round = 0; round < 4000 && swaps_seen < 200; ++round) {
        Graph g = random_graph(rng, 3 + static_cast<int>(rng.next_below(8)), 30);
        SaveTarget target =
            rng.next_below(2) == 0 ? SaveTarget::zero_paths : SaveTarget::zero_one_paths;
        TwoMatching m = maximum_two_matching(g);
        while (auto ap = find_saving_path(g, m, target)) {
            MatchingDecomposition before = decompose(m);
            TwoMatching next = apply_swap(m, *ap);
            CHECK(next.edges.size() == m.edges.size());
            for (int d : next.degrees()) CHECK(d <= 2);
            // Each swap saves exactly one object of the targeted kind.
            MatchingDecomposition after = decompose(next);
            int delta = target == SaveTarget::zero_paths
                            ? before.num_zero_paths() - after.num_zero_paths()
                            : before.num_zero_paths() + before.num_one_paths() -
                                  after.num_zero_paths() - after.num_one_paths();
            CHECK(delta == 1);
            m = std::move(next);
            ++swaps_seen;
        }
    }
    CHECK(swaps_seen >= 200);
}

TEST_CASE("min_zero_path_cover on the named shapes") {
    PathCover lone = min_zero_path_cover(graph_of(1, {}));
    CHECK(lone.num_paths() == 1);
    CHECK(lone.num_zero_paths() == 1);

    PathCover p3 = min_zero_path_cover(graph_of(3, {{0, 1}, {1, 2}}));
    REQUIRE(p3.num_paths() == 1);
    CHECK(p3.paths[0] == std::vector<int>{0, 1, 2});
    CHECK(p3.num_zero_paths() == 0);

    PathCover star = min_zero_path_cover(graph_of(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.num_zero_paths() == 1);
    CHECK(brute_cover_stats(graph_of(4, {{0, 1}, {0, 2}, {0, 3}})).min_zero_paths == 1);
}

TEST_CASE("min_zero_one_path_cover on the named shapes") {
    PathCover triangle = min_zero_one_path_cover(graph_from_mask(3, 0b111));
    REQUIRE(triangle.num_paths() == 1);
    CHECK(triangle.paths[0] == std::vector<int>{0, 2, 1});
    CHECK(triangle.num_zero_paths() + triangle.num_one_paths() == 0);

    PathCover edge = min_zero_one_path_cover(graph_of(2, {{0, 1}}));
    CHECK(edge.num_one_paths() == 1);

    // Two triangles joined by a bridge cover without short paths.
    Graph chained = graph_of(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    PathCover cover = min_zero_one_path_cover(chained);
    CHECK(cover.num_zero_paths() + cover.num_one_paths() == 0);
    CHECK(brute_cover_stats(chained).min_zero_one_paths == 0);
}

TEST_CASE("refinement trades a singleton for a 1-path") {
    // Found by sweeping all hosts with n <= 7: the zero-one fixed point
    // keeps one singleton, and the follow-up augmentation trades it.
    Graph host = graph_of(5, {{0, 1}, {0, 3}, {0, 4}, {1, 2}});
    CoverStats stats = brute_cover_stats(host);
    CHECK(stats.min_zero_one_paths == 1);
    CHECK(stats.joint_min_zero == 0);

    TwoMatching fp = min_zero_one_fixpoint(host);
    PathCover before = break_cycles(fp);
    CHECK(before.num_zero_paths() == 1);
    CHECK(before.num_one_paths() == 0);

    PathCover refined = refine_to_min_singletons(host, std::move(fp));
    CHECK(refined.num_zero_paths() == 0);
    CHECK(refined.num_one_paths() == 1);
}

TEST_CASE("refinement is the identity on singleton-free fixed points") {
    Graph host = graph_from_mask(3, 0b111);
    TwoMatching fp = min_zero_one_fixpoint(host);
    PathCover before = break_cycles(fp);
    PathCover after = refine_to_min_singletons(host, std::move(fp));
    CHECK(before.num_zero_paths() == after.num_zero_paths());
    CHECK(before.num_one_paths() == after.num_one_paths());
    CHECK(before.paths == after.paths);
}

TEST_CASE("refinement never increases the short-path total") {
    Rng rng(2002);
    for (int round = 0; round < 500; ++round) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng.next_below(9)), 30);
        TwoMatching fp = min_zero_one_fixpoint(g);
        PathCover plain = break_cycles(fp);
        PathCover refined = refine_to_min_singletons(g, std::move(fp));
        int plain_short = plain.num_zero_paths() + plain.num_one_paths();
        int refined_short = refined.num_zero_paths() + refined.num_one_paths();
        CHECK(refined_short <= plain_short);
        CHECK(refined.num_zero_paths() <= plain.num_zero_paths());
    }
}

TEST_CASE("break_cycles removes one edge per cycle deterministically") {
    Graph host = graph_from_mask(3, 0b111);
    TwoMatching triangle{&host, {Edge(0, 1), Edge(0, 2), Edge(1, 2)}};
    PathCover cover = break_cycles(triangle);
    REQUIRE(cover.num_paths() == 1);
    CHECK(cover.paths[0] == std::vector<int>{0, 2, 1});

    TwoMatching no_cycles{&host, {Edge(0, 1)}};
    PathCover same = break_cycles(no_cycles);
    REQUIRE(same.num_paths() == 2);
    CHECK(same.paths[0] == std::vector<int>{0, 1});
    CHECK(same.paths[1] == std::vector<int>{2});

    Graph two_sq = graph_of(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
    TwoMatching cycles{&two_sq, two_sq.edges()};
    PathCover squares = break_cycles(cycles);
    REQUIRE(squares.num_paths() == 2);
    CHECK(squares.paths[0].size() == 4);
    CHECK(squares.paths[1].size() == 4);
}

TEST_CASE("cover optimality versus the oracle, exhaustive n<=5 plus randoms") {
    auto certify = [](const Graph& g) {
        CoverStats stats = brute_cover_stats(g);
        TwoMatching a_fp =
            augment_to_fixpoint(g, maximum_two_matching(g), SaveTarget::zero_paths);
        CHECK(deficient_vertices_independent(g, decompose(a_fp)));
        PathCover a = break_cycles(a_fp);
        REQUIRE(is_valid_path_cover(g, a));
        CHECK(a.num_zero_paths() == stats.min_zero_paths);

        TwoMatching fp = min_zero_one_fixpoint(g);
        CHECK(deficient_vertices_independent(g, decompose(fp)));
        PathCover b = break_cycles(fp);
        REQUIRE(is_valid_path_cover(g, b));
        CHECK(b.num_zero_paths() + b.num_one_paths() == stats.min_zero_one_paths);

        PathCover r = refine_to_min_singletons(g, std::move(fp));
        REQUIRE(is_valid_path_cover(g, r));
        CHECK(r.num_zero_paths() + r.num_one_paths() == stats.min_zero_one_paths);
        CHECK(r.num_zero_paths() == stats.joint_min_zero);
    };

    for (int n = 0; n <= 5; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask)
            certify(graph_from_mask(n, mask));
    }
    Rng rng(2003);
    for (int round = 0; round < 200; ++round)
        certify(random_graph(rng, 1 + static_cast<int>(rng.next_below(8)), 28));
}

TEST_CASE("a terminal may delete a second edge of the entered component") {
    // Regression case found by random sweeping: the only zero-one save
    // enters the 4-path 1-2-5-6-8 at its middle and terminates on the same
    // component, so the walk's last vertex repeats the entry.
    Graph host = graph_of(9, {{1, 2}, {2, 5}, {2, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 8}});
    TwoMatching m{&host, {Edge(1, 2), Edge(2, 5), Edge(4, 7), Edge(5, 6), Edge(6, 8)}};

    auto ap = find_saving_path(host, m, SaveTarget::zero_one_paths);
    REQUIRE(ap.has_value());
    MatchingDecomposition after = decompose(apply_swap(m, *ap));
    CHECK(after.num_zero_paths() + after.num_one_paths() == 2);  // the two isolated vertices

    PathCover cover = min_zero_one_path_cover(host);
    CHECK(cover.num_zero_paths() + cover.num_one_paths() ==
          brute_cover_stats(host).min_zero_one_paths);
}

TEST_CASE("randomized certification against the oracle up to n = 10") {
    Rng rng(2004);
    for (int round = 0; round < 2000; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(10));
        double p = rng.next_real();
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_real() < p) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));

        CoverStats stats = brute_cover_stats(g);
        CHECK(min_zero_path_cover(g).num_zero_paths() == stats.min_zero_paths);
        TwoMatching fp = min_zero_one_fixpoint(g);
        PathCover b = break_cycles(fp);
        CHECK(b.num_zero_paths() + b.num_one_paths() == stats.min_zero_one_paths);
        PathCover r = refine_to_min_singletons(g, std::move(fp));
        CHECK(r.num_zero_paths() == stats.joint_min_zero);
        CHECK(r.num_zero_paths() + r.num_one_paths() == stats.min_zero_one_paths);
    }
}

TEST_CASE("compute_path_cover dispatches on the objective") {
    Graph g = graph_of(5, {{1, 2}, {2, 3}, {3, 4}, {0, 2}});
    PathCover a = compute_path_cover(g, CoverObjective::zero_paths);
    PathCover b = compute_path_cover(g, CoverObjective::zero_one_paths);
    PathCover r = compute_path_cover(g, CoverObjective::zero_one_then_zero);
    CHECK(a.num_zero_paths() == 0);
    CHECK(b.num_zero_paths() + b.num_one_paths() == 1);
    CHECK(r.num_zero_paths() == 0);
    CHECK(r.num_one_paths() == 1);
}
