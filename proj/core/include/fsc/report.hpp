#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace fsc {

/// One solver run for the CLI and the bench harness. `ratio` is
/// makespan / lower_bound and only present when a certified lower bound is.
struct RunReport {
    std::string instance_id;
    std::string algorithm;
    std::int64_t makespan = 0;
    std::optional<std::int64_t> lower_bound;
    std::optional<double> ratio;
    double wall_ms = 0.0;
    std::optional<int> num_paths;
    std::optional<int> num_zero_paths;
    std::optional<int> num_one_paths;

    void set_bound(std::int64_t bound);
    /// Single-line rendering; timing is excluded when include_time is false
    /// so reports stay byte-identical across runs.
    std::string render(bool include_time = true) const;
};

}  // namespace fsc
