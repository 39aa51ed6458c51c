// schedule.cpp - barrier rows, locomotion tracks, auto-approach, overlays
#include "chase/schedule.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

#include "chase/pathfind.hpp"

namespace chase {

namespace {

int chebyshev(GridPos a, GridPos b) {
    return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

class Scheduler {
public:
    Scheduler(const Scene& scene, const EngineConfig& config)
        : scene_(scene), config_(config), pos_(scene.characters) {}

    ScheduleResult run(const TaskMatrix& matrix) {
        double row_start = 0.0;
        for (std::size_t r = 0; r < matrix.rows.size(); ++r)
            row_start = schedule_row(matrix.rows[r], static_cast<int>(r) + 1, row_start);

        ScheduleResult result;
        result.timeline.events = std::move(events_);
        std::sort(result.timeline.events.begin(), result.timeline.events.end(),
                  [](const TimelineEvent& a, const TimelineEvent& b) {
                      if (a.start_s != b.start_s) return a.start_s < b.start_s;
                      if (a.character != b.character) return a.character < b.character;
                      return static_cast<int>(a.channel) < static_cast<int>(b.channel);
                  });
        for (const TimelineEvent& ev : result.timeline.events)
            result.timeline.total_s = std::max(result.timeline.total_s, ev.end_s);
        result.warnings = std::move(warnings_);
        return result;
    }

private:
    // -- helpers -------------------------------------------------------------

    GridPos entity_cell(const std::string& name) const {
        // Characters live at their simulated position; objects never move.
        if (const auto it = pos_snapshot_.find(name); it != pos_snapshot_.end()) return it->second;
        return scene_.objects.at(name);
    }

    std::optional<Vec2> heading_to(GridPos from, GridPos to) const {
        const double dx = scene_.grid.center_x_m(to) - scene_.grid.center_x_m(from);
        const double dy = scene_.grid.center_y_m(to) - scene_.grid.center_y_m(from);
        const double len = std::hypot(dx, dy);
        if (len == 0.0) return std::nullopt;
        return Vec2{dx / len, dy / len};
    }

    GridPos approach(const std::string& target, GridPos target_cell, GridPos from,
                     const ResolvedCommand& cmd, int row) const {
        try {
            return approach_cell(scene_.grid, target_cell, from);
        } catch (const CompileError& err) {
            const Diagnostic& inner = err.first();
            throw CompileError(make_error(
                inner.code,
                fmt::format("cannot approach '{}' in row {}: {}", target, row, inner.message),
                cmd.span));
        }
    }

    Path path_to(GridPos from, GridPos dest, const ResolvedCommand& cmd, int row) const {
        try {
            return find_path(scene_.grid, from, dest);
        } catch (const CompileError& err) {
            const Diagnostic& inner = err.first();
            throw CompileError(make_error(inner.code,
                                          fmt::format("in row {}: {}", row, inner.message),
                                          cmd.span));
        }
    }

    // Track times come from the same integer-count arithmetic as path costs,
    // so the event end equals start + length/speed bit for bit.
    TimelineEvent make_locomotion(const std::string& character, MotionStyle style, int row,
                                  double t0, const Path& path, const std::string& target,
                                  bool is_approach) const {
        const Grid& grid = scene_.grid;
        const double speed = config_.style_speed(style);

        TimelineEvent ev;
        ev.character = character;
        ev.channel = Channel::Body;
        ev.action = motion_style_name(style);
        ev.start_s = t0;
        ev.params.row = row;
        ev.params.approach = is_approach;
        ev.params.target = target;
        ev.params.style = motion_style_name(style);

        ev.track.reserve(path.waypoints.size());
        ev.track.push_back({t0, grid.center_x_m(path.waypoints.front()),
                            grid.center_y_m(path.waypoints.front())});
        int straights = 0;
        int diagonals = 0;
        for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
            const GridPos prev = path.waypoints[i - 1];
            const GridPos here = path.waypoints[i];
            const bool diagonal = prev.x != here.x && prev.y != here.y;
            (diagonal ? diagonals : straights) += 1;
            const double cum_m = octile_length_m(straights, diagonals, grid.cell_size_m());
            ev.track.push_back({t0 + cum_m / speed, grid.center_x_m(here), grid.center_y_m(here)});
        }
        ev.end_s = ev.track.back().t_s;
        return ev;
    }

    // -- per-command scheduling ----------------------------------------------

    double schedule_row(const std::vector<ResolvedCommand>& row, int row_index, double t0) {
        // Every command in the row reads positions as they were at the
        // barrier, so simultaneous commands cannot see each other's motion.
        pos_snapshot_ = pos_;
        double row_end = t0;
        for (const ResolvedCommand& cmd : row)
            row_end = std::max(row_end, schedule_command(cmd, row_index, t0));
        return row_end;
    }

    double schedule_command(const ResolvedCommand& cmd, int row, double t0) {
        double base_end = t0;
        std::optional<Channel> base_limb;

        if (const auto* solo = std::get_if<SoloCmd>(&cmd.op)) {
            base_end = schedule_solo(cmd, *solo, row, t0);
            base_limb = solo->part;
        } else if (const auto* loco = std::get_if<LocomotionCmd>(&cmd.op)) {
            base_end = schedule_goto(cmd, *loco, row, t0);
        } else {
            const auto& inter = std::get<InteractionCmd>(cmd.op);
            base_end = schedule_interaction(cmd, inter, row, t0);
            base_limb = inter.part;
        }

        schedule_overlay(cmd, row, t0, base_end, base_limb);
        return base_end;
    }

    double schedule_solo(const ResolvedCommand& cmd, const SoloCmd& solo, int row, double t0) {
        TimelineEvent ev;
        ev.character = cmd.character;
        ev.channel = solo.part;
        ev.action = solo.action.keyword;
        ev.start_s = t0;
        ev.end_s = t0 + solo.duration_s;
        ev.params.row = row;
        ev.params.part = solo.part;
        ev.params.repetitions = solo.repetitions;
        if (solo.facing_target)
            ev.params.facing =
                heading_to(pos_snapshot_.at(cmd.character), entity_cell(*solo.facing_target));
        const double end = ev.end_s;
        events_.push_back(std::move(ev));
        return end;
    }

    double schedule_goto(const ResolvedCommand& cmd, const LocomotionCmd& loco, int row,
                         double t0) {
        const GridPos from = pos_snapshot_.at(cmd.character);
        const GridPos target_cell = entity_cell(loco.target);
        const GridPos dest = approach(loco.target, target_cell, from, cmd, row);
        if (dest == from) return t0;  // already there: no event, no time spent

        const Path path = path_to(from, dest, cmd, row);
        TimelineEvent ev = make_locomotion(cmd.character, loco.style, row, t0, path, loco.target,
                                           /*is_approach=*/false);
        const double end = ev.end_s;
        events_.push_back(std::move(ev));
        pos_[cmd.character] = dest;
        return end;
    }

    double schedule_interaction(const ResolvedCommand& cmd, const InteractionCmd& inter, int row,
                                double t0) {
        const GridPos from = pos_snapshot_.at(cmd.character);
        const GridPos target_cell = entity_cell(inter.target);

        double module_start = t0;
        GridPos stand = from;
        if (chebyshev(from, target_cell) > 1) {
            const GridPos dest = approach(inter.target, target_cell, from, cmd, row);
            const Path path = path_to(from, dest, cmd, row);
            TimelineEvent walk = make_locomotion(cmd.character, MotionStyle::Walk, row, t0, path,
                                                 inter.target, /*is_approach=*/true);
            module_start = walk.end_s;
            events_.push_back(std::move(walk));
            pos_[cmd.character] = dest;
            stand = dest;
        }

        TimelineEvent ev;
        ev.character = cmd.character;
        ev.channel = inter.part;
        ev.action = inter.module.keyword;
        ev.start_s = module_start;
        ev.end_s = module_start + inter.duration_s;
        ev.params.row = row;
        ev.params.part = inter.part;
        ev.params.target = inter.target;
        ev.params.repetitions = inter.repetitions;
        ev.params.facing = heading_to(stand, target_cell);
        const double end = ev.end_s;
        events_.push_back(std::move(ev));
        return end;
    }

    void schedule_overlay(const ResolvedCommand& cmd, int row, double t0, double base_end,
                          std::optional<Channel> base_limb) {
        if (!cmd.overlay) return;
        const OverlaySpec& overlay = *cmd.overlay;

        if (overlay.part == Channel::Body)
            throw CompileError(make_error(
                codes::OverlayChannelConflict,
                fmt::format("whole-body action '{}' cannot run as an overlay; the body channel "
                            "belongs to the base command",
                            overlay.action.keyword),
                overlay.span));
        if (base_limb && overlay.part == *base_limb)
            throw CompileError(make_error(
                codes::OverlayChannelConflict,
                fmt::format("overlay '{}' and its base command both use {} in row {}",
                            overlay.action.keyword, channel_name(overlay.part), row),
                overlay.span));

        const double base_len = base_end - t0;
        if (!(base_len > 0.0)) return;  // zero-length base: nothing to overlay onto

        double end;
        if (overlay.duration_s) {
            if (*overlay.duration_s > base_len) {
                warnings_.push_back(make_warning(
                    codes::OverlayClipped,
                    fmt::format("overlay '{}' wants {:.6f} s but its base ends after {:.6f} s; "
                                "clipping",
                                overlay.action.keyword, *overlay.duration_s, base_len),
                    overlay.span));
                end = base_end;
            } else {
                end = std::min(t0 + *overlay.duration_s, base_end);
            }
        } else if (overlay.action.repeat_policy == RepeatPolicy::LoopUntilDuration) {
            end = base_end;  // loop to fill the whole base interval
        } else if (overlay.action.default_duration_s >= base_len) {
            end = base_end;
        } else {
            end = std::min(t0 + overlay.action.default_duration_s, base_end);
        }

        TimelineEvent ev;
        ev.character = cmd.character;
        ev.channel = overlay.part;
        ev.action = overlay.action.keyword;
        ev.start_s = t0;
        ev.end_s = end;
        ev.params.row = row;
        ev.params.overlay = true;
        ev.params.part = overlay.part;
        ev.params.repetitions = repetitions_for(overlay.action, end - t0);
        if (overlay.facing_target)
            ev.params.facing =
                heading_to(pos_snapshot_.at(cmd.character), entity_cell(*overlay.facing_target));
        events_.push_back(std::move(ev));
    }

    const Scene& scene_;
    const EngineConfig& config_;
    std::map<std::string, GridPos> pos_;           // live, persists across rows
    std::map<std::string, GridPos> pos_snapshot_;  // frozen at the row barrier
    std::vector<TimelineEvent> events_;
    std::vector<Diagnostic> warnings_;
};

}  // namespace

ScheduleResult schedule(const TaskMatrix& matrix, const Scene& scene, const EngineConfig& config) {
    return Scheduler(scene, config).run(matrix);
}

}  // namespace chase
