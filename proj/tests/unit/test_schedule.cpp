// test_schedule.cpp
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "chase/pathfind.hpp"
#include "chase/schedule.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "testutil.hpp"

using namespace chase;
using testsupport::compile_script;
using testsupport::expect_error;
using testsupport::scene_from;

namespace {

const char* kSoloJson = R"({
    "grid": {"width": 8, "height": 8},
    "characters": [{"name": "hero", "pos": [1, 1]}],
    "objects": [{"name": "ball", "pos": [5, 3]}, {"name": "gem", "pos": [2, 2]}]
})";

const char* kFarJson = R"({
    "grid": {"width": 8, "height": 8},
    "characters": [{"name": "hero", "pos": [0, 0]}],
    "objects": [{"name": "ball", "pos": [7, 7]}]
})";

const char* kDuoJson = R"({
    "grid": {"width": 8, "height": 8},
    "characters": [{"name": "ann", "pos": [1, 1]}, {"name": "bob", "pos": [6, 1]}],
    "objects": [{"name": "crate", "pos": [6, 6]}]
})";

// expected travel time across `s` straight and `d` diagonal steps
double travel_s(int s, int d, double speed) { return octile_length_m(s, d, 0.5) / speed; }

}  // namespace

TEST_CASE("scheduling: rows run one after the other") {
    const auto result =
        compile_script("task[1] = do(jump)\ntask[2] = do(wave hand, 3)", scene_from(kSoloJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 2);
    CHECK(tl.events[0].action == "jump");
    CHECK(tl.events[0].channel == Channel::Body);
    CHECK(tl.events[0].start_s == 0.0);
    CHECK(tl.events[0].end_s == 1.0);
    CHECK(tl.events[0].params.row == 1);
    CHECK(tl.events[1].action == "wave hand");
    CHECK(tl.events[1].channel == Channel::HandR);
    CHECK(tl.events[1].start_s == 1.0);
    CHECK(tl.events[1].end_s == 4.0);
    CHECK(tl.events[1].params.row == 2);
    CHECK(tl.events[1].params.repetitions == 2);
    CHECK(tl.total_s == 4.0);
    CHECK(result.warnings.empty());
}

TEST_CASE("scheduling: a row waits for the slowest command of the previous row") {
    const auto result = compile_script(
        "tasks[1][1] = do(wave hand, 3).characterName(ann)\n"
        "tasks[1][2] = do(jump).characterName(bob)\n"
        "tasks[2][1] = do(jump).characterName(ann)",
        scene_from(kDuoJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 3);
    // both row-1 commands start at the barrier
    CHECK(tl.events[0].start_s == 0.0);
    CHECK(tl.events[1].start_s == 0.0);
    CHECK(tl.events[0].character == "ann");
    CHECK(tl.events[1].character == "bob");
    // row 2 starts when the slower command (3 s) is done, not after 1 s
    CHECK(tl.events[2].start_s == 3.0);
    CHECK(tl.events[2].character == "ann");
    CHECK(tl.total_s == 4.0);
}

TEST_CASE("scheduling: locomotion tracks and positions that persist") {
    const char* scene_json = R"({
        "grid": {"width": 8, "height": 8},
        "characters": [{"name": "hero", "pos": [1, 1]}],
        "objects": [{"name": "ball", "pos": [5, 5]}, {"name": "crate", "pos": [1, 5]}]
    })";
    const auto result = compile_script("goTo(ball, walk)\ngoTo(crate, walk)",
                                       scene_from(scene_json));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 2);

    // leg 1: (1,1) -> (4,4), three diagonal steps
    const TimelineEvent& first = tl.events[0];
    CHECK(first.action == "walk");
    CHECK(first.params.style == "walk");
    CHECK(first.params.target == "ball");
    CHECK(!first.params.approach);
    CHECK(first.start_s == 0.0);
    CHECK(first.end_s == travel_s(0, 3, 1.4));
    REQUIRE(first.track.size() == 4);
    CHECK(first.track.front().x_m == 0.75);
    CHECK(first.track.front().y_m == 0.75);
    CHECK(first.track.back().x_m == 2.25);
    CHECK(first.track.back().y_m == 2.25);
    CHECK(first.track.back().t_s == first.end_s);

    // leg 2 starts where leg 1 ended, two straight steps to (2,4)
    const TimelineEvent& second = tl.events[1];
    CHECK(second.start_s == first.end_s);
    CHECK(second.end_s == first.end_s + travel_s(2, 0, 1.4));
    CHECK(second.track.front().x_m == first.track.back().x_m);
    CHECK(second.track.front().y_m == first.track.back().y_m);
    CHECK(second.track.back().x_m == 1.25);
    CHECK(tl.total_s == second.end_s);
}

TEST_CASE("scheduling: run style uses the run speed") {
    const auto result = compile_script("goTo(ball, run)", scene_from(kFarJson));
    const TimelineEvent& ev = result.timeline.events.at(0);
    CHECK(ev.action == "run");
    CHECK(ev.params.style == "run");
    CHECK(ev.end_s == travel_s(0, 6, 3.0));
}

TEST_CASE("scheduling: interactions walk an approach when not adjacent") {
    const auto result = compile_script("interactWith(ball, punch)", scene_from(kSoloJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 2);

    const TimelineEvent& walk = tl.events[0];
    CHECK(walk.action == "walk");
    CHECK(walk.channel == Channel::Body);
    CHECK(walk.params.approach);
    CHECK(walk.params.target == "ball");
    // cheapest free neighbor of the ball seen from (1,1) is (4,2)
    CHECK(walk.end_s == travel_s(2, 1, 1.4));
    CHECK(walk.track.back().x_m == 2.25);
    CHECK(walk.track.back().y_m == 1.25);

    const TimelineEvent& punch = tl.events[1];
    CHECK(punch.action == "punch");
    CHECK(punch.channel == Channel::HandR);
    CHECK(punch.start_s == walk.end_s);
    CHECK(punch.end_s == walk.end_s + 1.0);
    CHECK(punch.params.target == "ball");
    CHECK(punch.params.repetitions == 1);
    // facing points from the stand cell (4,2) to the ball cell (5,3)
    REQUIRE(punch.params.facing.has_value());
    const double unit = 0.5 / std::hypot(0.5, 0.5);
    CHECK(punch.params.facing->x == unit);
    CHECK(punch.params.facing->y == unit);
}

TEST_CASE("scheduling: adjacent interactions skip the approach") {
    const auto result = compile_script("interactWith(gem, kick, footL, 2)", scene_from(kSoloJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 1);
    CHECK(tl.events[0].action == "kick");
    CHECK(tl.events[0].channel == Channel::FootL);
    CHECK(tl.events[0].start_s == 0.0);
    CHECK(tl.events[0].end_s == 2.0);
    CHECK(tl.total_s == 2.0);
}

TEST_CASE("scheduling: simultaneous commands read positions frozen at the barrier") {
    const auto result = compile_script(
        "tasks[1][1] = interactWith(bob, punch).characterName(ann)\n"
        "tasks[1][2] = goTo(crate, run).characterName(bob)\n"
        "tasks[2][1] = interactWith(bob, punch).characterName(ann)",
        scene_from(kDuoJson));
    const Timeline& tl = result.timeline;
    // ann: approach walk + punch per row; bob: one run
    REQUIRE(tl.events.size() == 5);

    // row 1: ann walks toward where bob stood at t=0 ((6,1), neighbor (5,1)),
    // not toward where bob is heading
    const TimelineEvent& walk1 = tl.events[0];
    CHECK(walk1.character == "ann");
    CHECK(walk1.params.approach);
    CHECK(walk1.track.back().x_m == 2.75);
    CHECK(walk1.track.back().y_m == 0.75);
    CHECK(walk1.end_s == travel_s(4, 0, 1.4));

    const TimelineEvent& run = tl.events[1];
    CHECK(run.character == "bob");
    CHECK(run.action == "run");
    CHECK(run.end_s == travel_s(4, 0, 3.0));

    const TimelineEvent& punch1 = tl.events[2];
    CHECK(punch1.character == "ann");
    CHECK(punch1.start_s == walk1.end_s);

    // row 2 starts at the latest end of row 1 (ann's punch)
    const double row2 = punch1.end_s;
    const TimelineEvent& walk2 = tl.events[3];
    CHECK(walk2.character == "ann");
    CHECK(walk2.start_s == row2);
    // bob has moved to (6,5); ann approaches from (5,1) to (5,4)
    CHECK(walk2.track.back().x_m == 2.75);
    CHECK(walk2.track.back().y_m == 2.25);
    CHECK(walk2.end_s == row2 + travel_s(3, 0, 1.4));
    CHECK(tl.events[4].start_s == walk2.end_s);
}

TEST_CASE("scheduling: overlays loop to fill their base interval") {
    const auto result = compile_script("goTo(ball, walk).do(wave hand)", scene_from(kFarJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 2);
    const TimelineEvent& walk = tl.events[0];
    const TimelineEvent& wave = tl.events[1];
    CHECK(walk.channel == Channel::Body);
    CHECK(wave.channel == Channel::HandR);
    CHECK(wave.params.overlay);
    CHECK(wave.start_s == walk.start_s);
    CHECK(wave.end_s == walk.end_s);
    // six diagonal steps at walk speed take just over three seconds: two cycles
    CHECK(wave.params.repetitions == 2);
    CHECK(result.warnings.empty());
}

TEST_CASE("scheduling: explicit overlay durations, clipping and warnings") {
    // shorter than the base: kept as requested
    const auto shorter =
        compile_script("goTo(ball, walk).do(wave hand, 1)", scene_from(kFarJson));
    CHECK(shorter.timeline.events.at(1).end_s == 1.0);
    CHECK(shorter.timeline.events.at(1).params.repetitions == 1);
    CHECK(shorter.warnings.empty());

    // longer than the base: clipped with a warning
    const auto longer =
        compile_script("goTo(ball, walk).do(wave hand, handL, 9)", scene_from(kFarJson));
    const TimelineEvent& walk = longer.timeline.events.at(0);
    const TimelineEvent& wave = longer.timeline.events.at(1);
    CHECK(wave.channel == Channel::HandL);
    CHECK(wave.end_s == walk.end_s);
    REQUIRE(longer.warnings.size() == 1);
    CHECK(longer.warnings[0].code == codes::OverlayClipped);
    CHECK(longer.warnings[0].severity == Severity::Warning);
    // the warning points at the chained do
    CHECK(longer.warnings[0].span.line == 1);
    CHECK(longer.warnings[0].span.column == 18);

    // a once action without a duration plays one cycle, clamped to the base
    const auto once = compile_script("goTo(ball, walk).do(punch)", scene_from(kFarJson));
    CHECK(once.timeline.events.at(1).end_s == 1.0);
    CHECK(once.timeline.events.at(1).params.repetitions == 1);
}

TEST_CASE("scheduling: overlays cover approach plus interaction") {
    const auto result =
        compile_script("interactWith(ball, punch).do(wave hand, handL)", scene_from(kSoloJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 3);
    const TimelineEvent& wave = tl.events[1];  // same start as the walk, handL after body
    CHECK(wave.params.overlay);
    CHECK(wave.start_s == 0.0);
    CHECK(wave.end_s == tl.events[2].end_s);  // runs until the punch ends
    CHECK(tl.events[2].action == "punch");
}

TEST_CASE("scheduling: overlay channel conflicts") {
    const Diagnostic limb = expect_error([] {
        compile_script("interactWith(ball, punch, handR).do(wave hand, handR)",
                       scene_from(kSoloJson));
    });
    CHECK(limb.code == codes::OverlayChannelConflict);
    CHECK(limb.message.find("handR") != std::string::npos);
    CHECK(limb.message.find("row 1") != std::string::npos);
    CHECK(limb.span.column == 34);

    // the default parts collide here too (both punch and wave hand pick handR)
    CHECK(expect_error([] {
              compile_script("interactWith(ball, punch).do(wave hand)", scene_from(kSoloJson));
          }).code == codes::OverlayChannelConflict);

    const Diagnostic body = expect_error(
        [] { compile_script("goTo(ball).do(jump)", scene_from(kSoloJson)); });
    CHECK(body.code == codes::OverlayChannelConflict);
    CHECK(body.message.find("body") != std::string::npos);
}

TEST_CASE("scheduling: a goTo to an adjacent target takes no time") {
    const auto result = compile_script("goTo(gem)\ndo(jump)", scene_from(kSoloJson));
    const Timeline& tl = result.timeline;
    REQUIRE(tl.events.size() == 1);
    CHECK(tl.events[0].action == "jump");
    CHECK(tl.events[0].start_s == 0.0);
    CHECK(tl.total_s == 1.0);

    // an overlay on a zero-length base is dropped with the base
    const auto overlaid = compile_script("goTo(gem).do(wave hand)", scene_from(kSoloJson));
    CHECK(overlaid.timeline.events.empty());
    CHECK(overlaid.timeline.total_s == 0.0);
}

TEST_CASE("scheduling: pathfinding failures carry the statement location") {
    const Scene unreachable =
        scene_from(testsupport::slurp_fixture("unreachable_scene.json"));
    const Diagnostic diag =
        expect_error([&] { compile_script("goTo(ball, walk)", unreachable); });
    CHECK(diag.code == codes::Unreachable);
    CHECK(diag.span.line == 1);
    CHECK(diag.span.column == 1);
    CHECK(diag.message.find("row 1") != std::string::npos);

    const char* fenced_json = R"({
        "grid": {"width": 8, "height": 8,
                 "obstacles": [[4, 4], [5, 4], [6, 4], [4, 5], [6, 5], [4, 6], [5, 6], [6, 6]]},
        "characters": [{"name": "hero", "pos": [1, 1]}],
        "objects": [{"name": "ball", "pos": [5, 5]}]
    })";
    const Diagnostic fenced = expect_error(
        [&] { compile_script("interactWith(ball, punch)", scene_from(fenced_json)); });
    CHECK(fenced.code == codes::NoApproach);
    CHECK(fenced.message.find("cannot approach 'ball' in row 1") != std::string::npos);
}

TEST_CASE("scheduling: facing a target from a solo action") {
    const auto result = compile_script("goTo(ball, walk)\ndo(wave hand, ball)",
                                       scene_from(kSoloJson));
    const TimelineEvent& wave = result.timeline.events.at(1);
    REQUIRE(wave.params.facing.has_value());
    // standing at (4,2) after the walk, the ball at (5,3) is up-right
    const double unit = 0.5 / std::hypot(0.5, 0.5);
    CHECK(wave.params.facing->x == unit);
    CHECK(wave.params.facing->y == unit);

    // facing yourself means no facing at all
    const auto self = compile_script("do(wave hand, hero)", scene_from(kSoloJson));
    CHECK(!self.timeline.events.at(0).params.facing.has_value());
}

TEST_CASE("scheduling: fuzzed scripts keep every timeline invariant") {
    const Scene scene = scene_from(testsupport::slurp_fixture("fuzz_scene.json"));
    std::mt19937 rng(31337);
    for (int i = 0; i < 150; ++i) {
        const std::string text = testsupport::random_valid_script(rng, scene);
        CAPTURE(text);
        ScheduleResult result;
        REQUIRE_NOTHROW(result = compile_script(text, scene));
        const Timeline& tl = result.timeline;

        double max_end = 0.0;
        for (std::size_t e = 0; e < tl.events.size(); ++e) {
            const TimelineEvent& ev = tl.events[e];
            REQUIRE(ev.start_s >= 0.0);
            REQUIRE(ev.end_s > ev.start_s);
            max_end = std::max(max_end, ev.end_s);

            // global sort order
            if (e > 0) {
                const TimelineEvent& prev = tl.events[e - 1];
                const bool ordered =
                    prev.start_s < ev.start_s ||
                    (prev.start_s == ev.start_s &&
                     (prev.character < ev.character ||
                      (prev.character == ev.character &&
                       static_cast<int>(prev.channel) < static_cast<int>(ev.channel))));
                REQUIRE(ordered);
            }

            // tracks are continuous in time and space
            if (!ev.track.empty()) {
                REQUIRE(ev.track.front().t_s == ev.start_s);
                REQUIRE(ev.track.back().t_s == ev.end_s);
                for (std::size_t k = 1; k < ev.track.size(); ++k) {
                    REQUIRE(ev.track[k].t_s > ev.track[k - 1].t_s);
                    const double dx = std::abs(ev.track[k].x_m - ev.track[k - 1].x_m);
                    const double dy = std::abs(ev.track[k].y_m - ev.track[k - 1].y_m);
                    REQUIRE(std::max(dx, dy) == 0.5);
                }
            }
            if (ev.params.facing) {
                const double norm = std::hypot(ev.params.facing->x, ev.params.facing->y);
                REQUIRE(std::abs(norm - 1.0) < 1e-12);
            }
        }
        REQUIRE(tl.total_s == max_end);

        // channel exclusivity: no overlapping intervals per character lane
        std::map<std::pair<std::string, Channel>, double> lane_end;
        for (const TimelineEvent& ev : tl.events) {
            auto& end = lane_end[{ev.character, ev.channel}];
            REQUIRE(ev.start_s >= end);
            end = ev.end_s;
        }

        // overlay containment within the character's row interval
        for (const TimelineEvent& ev : tl.events) {
            if (!ev.params.overlay) continue;
            double row_start = tl.total_s;
            double row_end = 0.0;
            for (const TimelineEvent& other : tl.events) {
                if (other.character != ev.character || other.params.row != ev.params.row ||
                    other.params.overlay)
                    continue;
                row_start = std::min(row_start, other.start_s);
                row_end = std::max(row_end, other.end_s);
            }
            REQUIRE(ev.start_s >= row_start);
            REQUIRE(ev.end_s <= row_end);
        }

        // characters only move along tracks: consecutive tracks join up
        std::map<std::string, std::pair<double, double>> last_pos;
        for (const TimelineEvent& ev : tl.events) {
            if (ev.track.empty()) continue;
            const auto it = last_pos.find(ev.character);
            if (it != last_pos.end()) {
                REQUIRE(ev.track.front().x_m == it->second.first);
                REQUIRE(ev.track.front().y_m == it->second.second);
            }
            last_pos[ev.character] = {ev.track.back().x_m, ev.track.back().y_m};
        }
    }
}
