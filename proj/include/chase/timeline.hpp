// timeline.hpp - the compiled, timestamped animation timeline
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chase/channel.hpp"
#include "chase/scene.hpp"

namespace chase {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Timed waypoint of a locomotion track; coordinates are cell-center meters.
struct TrackPoint {
    double t_s = 0.0;
    double x_m = 0.0;
    double y_m = 0.0;
};

/// Resolved parameter record attached to every event. Only meaningful
/// fields are serialized.
struct EventParams {
    int row = 1;
    bool overlay = false;
    bool approach = false;  // auto-inserted walk before an interaction
    std::optional<Channel> part;
    std::optional<std::string> target;
    std::optional<std::string> style;
    std::optional<int> repetitions;
    std::optional<Vec2> facing;  // frozen unit heading at event start
};

struct TimelineEvent {
    std::string character;
    Channel channel = Channel::Body;
    std::string action;
    double start_s = 0.0;
    double end_s = 0.0;
    EventParams params;
    std::vector<TrackPoint> track;  // locomotion only; spans [start_s, end_s]
};

/// Events sorted by (start_s, character, channel); per (character, channel)
/// the open intervals never overlap.
struct Timeline {
    std::vector<TimelineEvent> events;
    double total_s = 0.0;
};

}  // namespace chase
