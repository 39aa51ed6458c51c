// motion.hpp - sampled motion frames from a timeline
#pragma once

#include <map>
#include <string>
#include <vector>

#include "chase/config.hpp"
#include "chase/timeline.hpp"

namespace chase {

struct CharacterState {
    Vec2 pos_m;
    Vec2 facing{1.0, 0.0};  // unit heading
    std::map<Channel, std::string> active;
};

struct Frame {
    double t_s = 0.0;
    std::map<std::string, CharacterState> characters;
};

/// State of every scene character at time t: piecewise-linear position along
/// locomotion tracks, last position held otherwise, and the actions whose
/// [start, end) interval contains t. Throws std::out_of_range outside
/// [0, total_s].
Frame sample(const Timeline& timeline, const Scene& scene, const EngineConfig& config, double t_s);

/// Frames at t = 0, 1/fps, 2/fps, ...; the final frame at total_s is always
/// included.
std::vector<Frame> render_frames(const Timeline& timeline, const Scene& scene,
                                 const EngineConfig& config);

}  // namespace chase
