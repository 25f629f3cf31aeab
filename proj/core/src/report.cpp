#include "fsc/report.hpp"

#include <cstdio>

namespace fsc {

void RunReport::set_bound(std::int64_t bound) {
    lower_bound = bound;
    if (bound > 0) ratio = static_cast<double>(makespan) / static_cast<double>(bound);
}

std::string RunReport::render(bool include_time) const {
    std::string out = "instance " + instance_id + " algorithm " + algorithm + " makespan " +
                      std::to_string(makespan);
    if (lower_bound) out += " lower-bound " + std::to_string(*lower_bound);
    if (ratio) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4f", *ratio);
        out += " ratio ";
        out += buf;
    }
    if (num_paths) {
        out += " paths " + std::to_string(*num_paths) + " zero-paths " +
               std::to_string(*num_zero_paths) + " one-paths " + std::to_string(*num_one_paths);
    }
    if (include_time) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", wall_ms);
        out += " wall-ms ";
        out += buf;
    }
    return out;
}

}  // namespace fsc
