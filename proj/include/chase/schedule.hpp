// schedule.hpp - task matrix -> timeline
#pragma once

#include <vector>

#include "chase/config.hpp"
#include "chase/resolve.hpp"
#include "chase/timeline.hpp"

namespace chase {

struct ScheduleResult {
    Timeline timeline;
    std::vector<Diagnostic> warnings;
};

/// Compiles the matrix row by row under barrier semantics: row r starts when
/// every event of row r-1 has ended. Character positions persist across rows;
/// interactions walk an automatic approach when not adjacent to the target;
/// overlays land on limb channels clipped to the base interval.
/// Throws CompileError (UNREACHABLE, NO-APPROACH, OVERLAY-CHANNEL-CONFLICT)
/// with the row index in the message.
ScheduleResult schedule(const TaskMatrix& matrix, const Scene& scene, const EngineConfig& config);

}  // namespace chase
