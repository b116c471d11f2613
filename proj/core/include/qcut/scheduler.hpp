#pragma once

#include "qcut/backend.hpp"
#include "qcut/cutting.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qcut {

enum class SchedulePolicy {
    LargestFirst,  // widest pending job to the next idle slot that fits it
    Fifo,
};

struct BackendStats {
    std::string id;
    int jobs = 0;
    std::int64_t busy_ms = 0;
};

struct ExecutionReport {
    std::map<std::string, VariantResult> results;
    std::vector<BackendStats> backend_stats;
    std::int64_t makespan_ms = 0;
    int job_count = 0;
};

/// Runs every job exactly once across all backend slots (work-stealing pull
/// model: idle slots take the best pending job they can execute). Jobs that
/// fit no backend are reported before anything executes. Remote failures are
/// retried twice, then the whole submission fails fast with the job id.
/// Values depend only on job seeds, never on scheduling order.
ExecutionReport submit(const std::vector<VariantJob>& jobs,
                       const std::vector<BackendDescriptor>& backends,
                       SchedulePolicy policy = SchedulePolicy::LargestFirst);

} // namespace qcut
