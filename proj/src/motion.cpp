// motion.cpp - pure time sampling of a compiled timeline
#include "chase/motion.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chase {

namespace {

Vec2 track_position(const std::vector<TrackPoint>& track, double t_s) {
    if (t_s <= track.front().t_s) return {track.front().x_m, track.front().y_m};
    if (t_s >= track.back().t_s) return {track.back().x_m, track.back().y_m};
    const auto after = std::upper_bound(track.begin(), track.end(), t_s,
                                        [](double t, const TrackPoint& p) { return t < p.t_s; });
    const TrackPoint& b = *after;
    const TrackPoint& a = *(after - 1);
    const double u = (t_s - a.t_s) / (b.t_s - a.t_s);
    return {a.x_m + u * (b.x_m - a.x_m), a.y_m + u * (b.y_m - a.y_m)};
}

// Direction of the track segment active at t (the last segment once the walk
// is over). Track points are cell centers, so segments are never degenerate.
Vec2 track_heading(const std::vector<TrackPoint>& track, double t_s) {
    auto after = std::upper_bound(track.begin(), track.end(), t_s,
                                  [](double t, const TrackPoint& p) { return t < p.t_s; });
    if (after == track.begin()) ++after;
    if (after == track.end()) --after;
    const TrackPoint& b = *after;
    const TrackPoint& a = *(after - 1);
    const double dx = b.x_m - a.x_m;
    const double dy = b.y_m - a.y_m;
    const double len = std::hypot(dx, dy);
    return {dx / len, dy / len};
}

}  // namespace

Frame sample(const Timeline& timeline, const Scene& scene, const EngineConfig&, double t_s) {
    if (t_s < 0.0 || t_s > timeline.total_s)
        throw std::out_of_range(
            fmt::format("sample time {} outside [0, {}]", t_s, timeline.total_s));

    Frame frame;
    frame.t_s = t_s;
    for (const auto& [name, cell] : scene.characters)
        frame.characters.emplace(
            name, CharacterState{{scene.grid.center_x_m(cell), scene.grid.center_y_m(cell)},
                                 {1.0, 0.0},
                                 {}});

    // Events are sorted by start time, so walking them in order applies
    // position and facing keyframes chronologically; later starts win.
    for (const TimelineEvent& ev : timeline.events) {
        if (ev.start_s > t_s) break;
        CharacterState& cs = frame.characters.at(ev.character);
        if (!ev.track.empty() && t_s >= ev.end_s) {
            cs.pos_m = {ev.track.back().x_m, ev.track.back().y_m};
            cs.facing = track_heading(ev.track, t_s);
        } else if (ev.track.empty() && ev.params.facing) {
            cs.facing = *ev.params.facing;
        }
    }

    // Active events: half-open [start, end). A live walk overrides any frozen
    // facing; its heading follows the current track segment.
    for (const TimelineEvent& ev : timeline.events) {
        if (ev.start_s > t_s) break;
        if (t_s >= ev.end_s) continue;
        CharacterState& cs = frame.characters.at(ev.character);
        cs.active[ev.channel] = ev.action;
        if (!ev.track.empty()) {
            cs.pos_m = track_position(ev.track, t_s);
            cs.facing = track_heading(ev.track, t_s);
        }
    }
    return frame;
}

std::vector<Frame> render_frames(const Timeline& timeline, const Scene& scene,
                                 const EngineConfig& config) {
    const double fps = config.fps;
    const auto n = static_cast<long long>(std::floor(timeline.total_s * fps));
    std::vector<Frame> frames;
    frames.reserve(static_cast<std::size_t>(n) + 2);
    for (long long k = 0; k <= n; ++k)
        frames.push_back(sample(timeline, scene, config, std::min(k / fps, timeline.total_s)));
    if (static_cast<double>(n) / fps < timeline.total_s)
        frames.push_back(sample(timeline, scene, config, timeline.total_s));
    return frames;
}

}  // namespace chase
