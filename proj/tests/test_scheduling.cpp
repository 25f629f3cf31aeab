#include <doctest.h>

#include "fsc/generate.hpp"
#include "fsc/oracle.hpp"
#include "fsc/scheduling.hpp"
#include "helpers.hpp"

using namespace fsc;
using test::graph_from_mask;

namespace {

Instance unit_instance(Graph conflicts) {
    Instance inst;
    inst.times.assign(static_cast<std::size_t>(conflicts.num_vertices()), {1, 1});
    inst.conflicts = std::move(conflicts);
    return inst;
}

Instance two_job_instance(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
    Instance inst;
    inst.times = {{a1, a2}, {b1, b2}};
    inst.conflicts = Graph(2, {});
    return inst;
}

}  // namespace

TEST_CASE("schedule_from_cover spans n plus the number of paths") {
    PathCover ham{5, {{0, 1, 2, 3, 4}}};
    Schedule s = schedule_from_cover(ham, 5);
    CHECK(s.makespan == 6);
    CHECK(makespan_identity_check(ham, s));

    PathCover singles{4, {{0}, {1}, {2}, {3}}};
    Schedule s2 = schedule_from_cover(singles, 4);
    CHECK(s2.makespan == 8);

    PathCover mixed{5, {{0, 1, 2}, {3, 4}}};
    Schedule s3 = schedule_from_cover(mixed, 5);
    CHECK(s3.makespan == 7);

    PathCover bad{5, {{0, 1}, {3, 4}}};
    CHECK_THROWS_AS(schedule_from_cover(bad, 5), std::invalid_argument);
}

TEST_CASE("schedule_from_cover schedules are feasible for the matching instance") {
    // Conflicts = complement of the single cover path.
    Graph agreement(5, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4)});
    Instance inst = unit_instance(complement(agreement));
    PathCover ham{5, {{0, 1, 2, 3, 4}}};
    Schedule s = schedule_from_cover(ham, 5);
    ValidationResult val = validate_schedule(inst, s);
    CHECK(val.ok);
    CHECK(val.warnings.empty());
}

TEST_CASE("solve_unit on the named conflict graphs") {
    Schedule all_agree = solve_unit(unit_instance(graph_from_mask(6, 0)),
                                    CoverObjective::zero_one_paths);
    CHECK(all_agree.makespan == 7);

    Schedule all_conflict = solve_unit(unit_instance(graph_from_mask(4, 0b111111)),
                                       CoverObjective::zero_one_paths);
    CHECK(all_conflict.makespan == 8);

    Instance chained = gen_chained_triangles(3);
    CHECK(brute_unit_optimum(chained) == 10);
    Schedule s = solve_unit(chained, CoverObjective::zero_one_paths);
    CHECK(s.makespan <= 13);
    CHECK(validate_schedule(chained, s).ok);
}

TEST_CASE("solve_unit rejects non-unit instances") {
    Instance inst = two_job_instance(2, 3, 4, 5);
    CHECK_THROWS_AS(solve_unit(inst, CoverObjective::zero_one_paths), std::invalid_argument);
}

TEST_CASE("two-clique schedule reproduces the aggregated two-job value") {
    Instance inst = two_job_instance(2, 3, 4, 5);
    auto part = recognize_two_cliques(inst.conflicts);
    REQUIRE(part.has_value());

    AggregatedPair agg = aggregate_two_cliques(inst, *part);
    CHECK(agg.pa1 == 2);
    CHECK(agg.pa2 == 3);
    CHECK(agg.pb1 == 4);
    CHECK(agg.pb2 == 5);

    Schedule s = two_clique_schedule(inst, *part);
    CHECK(s.makespan == 11);  // 2 + max(3, 4) + 5
    CHECK(validate_schedule(inst, s).ok);
    CHECK(two_clique_lower_bound(inst, *part) == 9);  // max{5, 6, 9, 8}
}

TEST_CASE("two-clique schedule on balanced unit cliques") {
    Instance inst = gen_two_cliques(2, 4, 1, 1);
    auto part = recognize_two_cliques(inst.conflicts);
    REQUIRE(part.has_value());
    Schedule s = two_clique_schedule(inst, *part);
    CHECK(s.makespan == 6);  // (3/2) * n
    CHECK(two_clique_lower_bound(inst, *part) == 4);
    CHECK(validate_schedule(inst, s).ok);
}

TEST_CASE("two-clique schedule with an empty side serializes one clique") {
    Instance inst;
    inst.times = {{2, 3}, {1, 4}, {5, 1}};
    inst.conflicts = Graph(3, {Edge(0, 1), Edge(0, 2), Edge(1, 2)});
    auto part = recognize_two_cliques(inst.conflicts);
    REQUIRE(part.has_value());
    CHECK(part->side_b.empty());
    Schedule s = two_clique_schedule(inst, *part);
    CHECK(s.makespan == 16);  // pa1 + pa2, no overlap inside a clique
    CHECK(two_clique_lower_bound(inst, *part) == 16);
    CHECK(validate_schedule(inst, s).ok);
}

TEST_CASE("two-clique schedule rejects partitions that do not match") {
    Instance inst = two_job_instance(1, 1, 1, 1);
    CliquePartition wrong{{0, 1}, {}};  // claims one clique, but no conflict edge
    CHECK_THROWS_AS(two_clique_schedule(inst, wrong), std::invalid_argument);
    CHECK_THROWS_AS(two_clique_lower_bound(inst, wrong), std::invalid_argument);
    CliquePartition not_partition{{0}, {}};
    CHECK_THROWS_AS(two_clique_schedule(inst, not_partition), std::invalid_argument);
}

TEST_CASE("zero processing times collapse to empty intervals") {
    Instance inst;
    inst.times = {{0, 0}, {3, 2}};
    inst.conflicts = Graph(2, {});
    auto part = recognize_two_cliques(inst.conflicts);
    REQUIRE(part.has_value());
    Schedule s = two_clique_schedule(inst, *part);
    CHECK(validate_schedule(inst, s).ok);
    CHECK(s.makespan == 5);
}

TEST_CASE("validate_schedule pinpoints violations") {
    Instance inst = unit_instance(Graph(2, {Edge(0, 1)}));

    Schedule flow;
    flow.start1 = {0, 2};
    flow.start2 = {0, 3};  // job 0 on M2 before it leaves M1
    flow.makespan = 4;
    ValidationResult val = validate_schedule(inst, flow);
    CHECK_FALSE(val.ok);
    CHECK(val.message.find("flow-order") != std::string::npos);
    CHECK(val.message.find('0') != std::string::npos);

    Schedule clash;
    clash.start1 = {0, 0};  // same M1 slot
    clash.start2 = {1, 1};
    clash.makespan = 2;
    ValidationResult val2 = validate_schedule(inst, clash);
    CHECK_FALSE(val2.ok);
    CHECK(val2.message.find("M1") != std::string::npos);

    Schedule conflict;
    conflict.start1 = {0, 1};
    conflict.start2 = {1, 2};  // job 0 on M2 at t=1 while job 1 runs on M1
    conflict.makespan = 3;
    ValidationResult val3 = validate_schedule(inst, conflict);
    CHECK_FALSE(val3.ok);
    CHECK(val3.message.find("conflict") != std::string::npos);

    Schedule ok;
    ok.start1 = {0, 2};
    ok.start2 = {1, 3};
    ok.makespan = 4;
    CHECK(validate_schedule(inst, ok).ok);

    Schedule gap = ok;
    gap.start1 = {0, 5};
    gap.start2 = {1, 8};
    gap.makespan = 9;
    ValidationResult val4 = validate_schedule(inst, gap);
    CHECK(val4.ok);
    CHECK_FALSE(val4.warnings.empty());  // both machines idle mid-schedule
}

TEST_CASE("makespan identity across cover shapes") {
    PathCover two_paths{7, {{0, 1, 2, 3}, {4, 5, 6}}};
    Schedule s = schedule_from_cover(two_paths, 7);
    CHECK(s.makespan == 9);
    CHECK(makespan_identity_check(two_paths, s));

    s.makespan = 10;
    CHECK_FALSE(makespan_identity_check(two_paths, s));
}

TEST_CASE("produced schedules validate across random instances and modes") {
    Rng rng(3001);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(rng.next_below(30));
        Instance inst = gen_random_gnp(n, rng.next_real(), rng.next_u64());
        CoverObjective obj = static_cast<CoverObjective>(rng.next_below(3));
        PathCover cover = compute_path_cover(complement(inst.conflicts), obj);
        REQUIRE(is_valid_path_cover(complement(inst.conflicts), cover));
        Schedule s = schedule_from_cover(cover, n);
        ValidationResult val = validate_schedule(inst, s);
        CHECK(val.ok);
        CHECK(makespan_identity_check(cover, s));
    }
}

TEST_CASE("two-clique makespan equals the better aggregate order") {
    Rng rng(3002);
    for (int round = 0; round < 300; ++round) {
        int n = 2 + static_cast<int>(rng.next_below(20));
        int l = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
        Instance inst = gen_two_cliques(l, n, 50, rng.next_u64());
        auto part = recognize_two_cliques(inst.conflicts);
        REQUIRE(part.has_value());
        AggregatedPair agg = aggregate_two_cliques(inst, *part);
        Schedule s = two_clique_schedule(inst, *part);
        std::int64_t a_first = agg.pa1 + std::max(agg.pa2, agg.pb1) + agg.pb2;
        std::int64_t b_first = agg.pb1 + std::max(agg.pb2, agg.pa1) + agg.pa2;
        bool pick_a = std::min(agg.pa1, agg.pb2) <= std::min(agg.pb1, agg.pa2);
        CHECK(s.makespan == (pick_a ? a_first : b_first));
        CHECK(s.makespan == std::min(a_first, b_first));
        CHECK(validate_schedule(inst, s).ok);
    }
}

TEST_CASE("instance round trip through the text format") {
    Instance inst = gen_two_cliques(2, 5, 9, 77);
    std::string text = format_instance(inst);
    Instance back = parse_instance(text);
    CHECK(back.times == inst.times);
    CHECK(back.conflicts.edges() == inst.conflicts.edges());
    CHECK(format_instance(back) == text);

    Instance unit = gen_random_gnp(6, 0.4, 5);
    Instance unit_back = parse_instance(format_instance(unit));
    CHECK(unit_back.is_unit());
    CHECK(unit_back.conflicts.edges() == unit.conflicts.edges());
}

TEST_CASE("schedule text format") {
    PathCover cover{3, {{0, 1, 2}}};
    Schedule s = schedule_from_cover(cover, 3);
    CHECK(format_schedule(s) == "0 0 1\n1 1 2\n2 2 3\nmakespan 4\n");
}
