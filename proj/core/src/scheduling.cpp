#include "fsc/scheduling.hpp"

#include <algorithm>
#include <sstream>

namespace fsc {

bool Instance::is_unit() const {
    return std::all_of(times.begin(), times.end(),
                       [](const auto& t) { return t.first == 1 && t.second == 1; });
}

Instance parse_instance(const std::string& text) {
    InstanceText t = parse_instance_text(text);
    Instance inst;
    inst.times = t.times ? std::move(*t.times)
                         : std::vector<std::pair<std::int64_t, std::int64_t>>(
                               static_cast<std::size_t>(t.n), {1, 1});
    inst.conflicts = Graph(t.n, std::move(t.edges));
    return inst;
}

std::string format_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p fsc " << inst.num_jobs() << ' ' << inst.conflicts.num_edges() << '\n';
    if (!inst.is_unit())
        for (int j = 0; j < inst.num_jobs(); ++j)
            out << "j " << j << ' ' << inst.times[j].first << ' ' << inst.times[j].second << '\n';
    for (const Edge& e : inst.conflicts.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    return out.str();
}

std::string format_schedule(const Schedule& s) {
    std::ostringstream out;
    for (std::size_t j = 0; j < s.start1.size(); ++j)
        out << j << ' ' << s.start1[j] << ' ' << s.start2[j] << '\n';
    out << "makespan " << s.makespan << '\n';
    return out.str();
}

AggregatedPair aggregate_two_cliques(const Instance& inst, const CliquePartition& part) {
    AggregatedPair agg;
    for (int j : part.side_a) {
        agg.pa1 += inst.times[j].first;
        agg.pa2 += inst.times[j].second;
    }
    for (int j : part.side_b) {
        agg.pb1 += inst.times[j].first;
        agg.pb2 += inst.times[j].second;
    }
    return agg;
}

Schedule schedule_from_cover(const PathCover& cover, int n) {
    std::vector<bool> seen(n, false);
    int covered = 0;
    for (const auto& path : cover.paths)
        for (int v : path) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("cover does not partition the job set");
            seen[v] = true;
            ++covered;
        }
    if (covered != n) throw std::invalid_argument("cover does not partition the job set");

    Schedule s;
    s.start1.assign(n, 0);
    s.start2.assign(n, 0);
    std::int64_t cursor = 0;
    for (const auto& path : cover.paths) {
        for (std::size_t i = 0; i < path.size(); ++i) {
            s.start1[path[i]] = cursor + static_cast<std::int64_t>(i);
            s.start2[path[i]] = cursor + static_cast<std::int64_t>(i) + 1;
        }
        cursor += static_cast<std::int64_t>(path.size()) + 1;
    }
    s.makespan = cursor;
    return s;
}

Schedule solve_unit(const Instance& inst, CoverObjective objective) {
    if (!inst.is_unit())
        throw std::invalid_argument(
            "instance has non-unit processing times; use the two-clique solver or reject");
    Graph agreement = complement(inst.conflicts);
    PathCover cover = compute_path_cover(agreement, objective);
    return schedule_from_cover(cover, inst.num_jobs());
}

namespace {

void verify_partition(const Instance& inst, const CliquePartition& part) {
    const int n = inst.num_jobs();
    std::vector<int> side(n, -1);
    for (int v : part.side_a) {
        if (v < 0 || v >= n || side[v] != -1)
            throw std::invalid_argument("clique partition is not a partition of the jobs");
        side[v] = 0;
    }
    for (int v : part.side_b) {
        if (v < 0 || v >= n || side[v] != -1)
            throw std::invalid_argument("clique partition is not a partition of the jobs");
        side[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (side[v] == -1)
            throw std::invalid_argument("clique partition is not a partition of the jobs");
    // Conflicts must be exactly the two cliques.
    std::int64_t na = static_cast<std::int64_t>(part.side_a.size());
    std::int64_t nb = static_cast<std::int64_t>(part.side_b.size());
    if (inst.conflicts.num_edges() != na * (na - 1) / 2 + nb * (nb - 1) / 2)
        throw std::invalid_argument("conflict graph is not the union of the two cliques");
    for (const Edge& e : inst.conflicts.edges())
        if (side[e.u] != side[e.v])
            throw std::invalid_argument("conflict graph is not the union of the two cliques");
}

}  // namespace

Schedule two_clique_schedule(const Instance& inst, const CliquePartition& part) {
    verify_partition(inst, part);
    AggregatedPair agg = aggregate_two_cliques(inst, part);

    // Two-job flow-shop order: first the aggregate whose M1 time or the
    // other's M2 time is smallest; A wins ties.
    const bool a_first = std::min(agg.pa1, agg.pb2) <= std::min(agg.pb1, agg.pa2);
    const std::vector<int>& first = a_first ? part.side_a : part.side_b;
    const std::vector<int>& second = a_first ? part.side_b : part.side_a;

    Schedule s;
    const int n = inst.num_jobs();
    s.start1.assign(n, 0);
    s.start2.assign(n, 0);

    auto lay_out = [&inst, &s](const std::vector<int>& jobs, std::int64_t m1_from,
                               std::int64_t m2_from) {
        std::int64_t t1 = m1_from;
        for (int j : jobs) {
            s.start1[j] = t1;
            t1 += inst.times[j].first;
        }
        std::int64_t t2 = std::max(m2_from, t1);
        for (int j : jobs) {
            s.start2[j] = t2;
            t2 += inst.times[j].second;
        }
        return std::pair<std::int64_t, std::int64_t>{t1, t2};
    };

    auto [m1_end, m2_end] = lay_out(first, 0, 0);
    lay_out(second, m1_end, m2_end);
    s.makespan = 0;
    for (int j = 0; j < n; ++j)
        s.makespan = std::max(s.makespan, s.start2[j] + inst.times[j].second);
    return s;
}

std::int64_t two_clique_lower_bound(const Instance& inst, const CliquePartition& part) {
    verify_partition(inst, part);
    AggregatedPair agg = aggregate_two_cliques(inst, part);
    return std::max({agg.pa1 + agg.pa2, agg.pa1 + agg.pb1, agg.pb1 + agg.pb2, agg.pa2 + agg.pb2});
}

namespace {

struct Interval {
    std::int64_t from, to;
    int job;
};

}  // namespace

ValidationResult validate_schedule(const Instance& inst, const Schedule& s) {
    ValidationResult res;
    const int n = inst.num_jobs();
    auto fail = [&res](std::string msg) {
        res.ok = false;
        res.message = std::move(msg);
        return res;
    };
    if (static_cast<int>(s.start1.size()) != n || static_cast<int>(s.start2.size()) != n)
        return fail("schedule does not cover all jobs");

    for (int j = 0; j < n; ++j) {
        if (s.start1[j] < 0 || s.start2[j] < 0)
            return fail("job " + std::to_string(j) + " starts before time 0");
        if (s.start2[j] < s.start1[j] + inst.times[j].first)
            return fail("flow-order violation: job " + std::to_string(j) +
                        " starts on M2 before finishing on M1");
    }

    // Machine exclusivity; zero-length operations occupy no interval.
    for (int machine = 0; machine < 2; ++machine) {
        std::vector<Interval> ivs;
        for (int j = 0; j < n; ++j) {
            std::int64_t p = machine == 0 ? inst.times[j].first : inst.times[j].second;
            std::int64_t b = machine == 0 ? s.start1[j] : s.start2[j];
            if (p > 0) ivs.push_back({b, b + p, j});
        }
        std::sort(ivs.begin(), ivs.end(),
                  [](const Interval& a, const Interval& b) { return a.from < b.from; });
        for (std::size_t i = 0; i + 1 < ivs.size(); ++i)
            if (ivs[i].to > ivs[i + 1].from)
                return fail("machine M" + std::to_string(machine + 1) + " runs jobs " +
                            std::to_string(ivs[i].job) + " and " + std::to_string(ivs[i + 1].job) +
                            " concurrently");
    }

    // Conflicting jobs must not run concurrently on different machines.
    auto overlaps = [](std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2) {
        return a1 < b2 && b1 < a2 && a1 < a2 && b1 < b2;
    };
    for (const Edge& e : inst.conflicts.edges()) {
        for (auto [i, j] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            if (overlaps(s.start1[i], s.start1[i] + inst.times[i].first, s.start2[j],
                         s.start2[j] + inst.times[j].second))
                return fail("conflict violation: jobs " + std::to_string(i) + " (M1) and " +
                            std::to_string(j) + " (M2) overlap");
        }
    }

    std::int64_t max_completion = 0;
    for (int j = 0; j < n; ++j)
        max_completion = std::max(max_completion, s.start2[j] + inst.times[j].second);
    if (s.makespan != max_completion)
        return fail("makespan field " + std::to_string(s.makespan) +
                    " does not match the last completion " + std::to_string(max_completion));

    // Normalization: both machines idle before the end is legal but wasteful.
    if (n > 0) {
        std::vector<std::pair<std::int64_t, std::int64_t>> busy;
        for (int j = 0; j < n; ++j) {
            if (inst.times[j].first > 0)
                busy.emplace_back(s.start1[j], s.start1[j] + inst.times[j].first);
            if (inst.times[j].second > 0)
                busy.emplace_back(s.start2[j], s.start2[j] + inst.times[j].second);
        }
        std::sort(busy.begin(), busy.end());
        std::int64_t reach = 0;
        for (auto [b, e] : busy) {
            if (b > reach) {
                res.warnings.push_back("both machines idle in [" + std::to_string(reach) + ", " +
                                       std::to_string(b) + ")");
                break;
            }
            reach = std::max(reach, e);
        }
    }
    return res;
}

bool makespan_identity_check(const PathCover& cover, const Schedule& s) {
    return s.makespan == static_cast<std::int64_t>(cover.n) + cover.num_paths();
}

}  // namespace fsc
