#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsc/graph.hpp"
#include "fsc/path_cover.hpp"

namespace fsc {

/// Two-machine flow-shop instance: per-job processing times on M1 and M2
/// plus a conflict graph over the job indices. Conflicting jobs may never
/// be processed concurrently on different machines.
struct Instance {
    std::vector<std::pair<std::int64_t, std::int64_t>> times;
    Graph conflicts;

    int num_jobs() const { return static_cast<int>(times.size()); }
    bool is_unit() const;
};

Instance parse_instance(const std::string& text);
std::string format_instance(const Instance& inst);

/// Start times per job on both machines. All times are integral; a job
/// with zero processing time on a machine occupies no interval there.
struct Schedule {
    std::vector<std::int64_t> start1;
    std::vector<std::int64_t> start2;
    std::int64_t makespan = 0;
};

/// "<job> <start1> <start2>" per line followed by "makespan <value>".
std::string format_schedule(const Schedule& s);

/// Per-machine processing-time sums of the two cliques of a partitioned
/// conflict graph.
struct AggregatedPair {
    std::int64_t pa1 = 0, pa2 = 0, pb1 = 0, pb2 = 0;
};

AggregatedPair aggregate_two_cliques(const Instance& inst, const CliquePartition& part);

/// Expands a path cover of the agreement graph of a unit instance into a
/// schedule: per path, M1 runs the jobs back to back and M2 follows one
/// time unit behind; sub-schedules are concatenated in cover order.
/// Makespan is exactly n + (number of cover paths).
Schedule schedule_from_cover(const PathCover& cover, int n);

/// Unit-job solver: computes a path cover of the agreement graph with the
/// chosen objective and expands it. zero_one_paths and zero_one_then_zero
/// guarantee makespan <= 4/3 of the optimum, zero_paths guarantees 3/2.
/// Throws std::invalid_argument for non-unit instances.
Schedule solve_unit(const Instance& inst, CoverObjective objective);

/// Two-clique solver for arbitrary processing times: merges each clique
/// into one aggregated job (jobs in index order), orders the two aggregates
/// by the two-job flow-shop rule (ties resolved in favour of side A) and
/// expands the aggregate schedule. Guarantees makespan <= 3/2 of the
/// optimum. Throws std::invalid_argument if the partition does not match
/// the conflicts.
Schedule two_clique_schedule(const Instance& inst, const CliquePartition& part);

/// max { pa1+pa2, pa1+pb1, pb1+pb2, pa2+pb2 }; a lower bound on any
/// feasible makespan of a two-clique instance.
std::int64_t two_clique_lower_bound(const Instance& inst, const CliquePartition& part);

struct ValidationResult {
    bool ok = true;
    std::string message;                 // first violated constraint
    std::vector<std::string> warnings;   // non-fatal normalization findings
};

/// Checks flow order, per-machine exclusivity, conflict feasibility and the
/// makespan field. Simultaneous idleness of both machines before the end of
/// the schedule is reported as a warning only.
ValidationResult validate_schedule(const Instance& inst, const Schedule& s);

/// Asserts makespan == n + number of cover paths for a schedule expanded
/// from `cover`.
bool makespan_identity_check(const PathCover& cover, const Schedule& s);

}  // namespace fsc
