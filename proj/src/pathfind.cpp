// pathfind.cpp - A* on the obstacle grid with octile costs
#include "chase/pathfind.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace chase {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

// Neighbor offsets in (lower y, then lower x) order; this order is the
// deterministic tie-break for equal-cost paths.
struct Step {
    int dx;
    int dy;
    bool diagonal;
};
constexpr Step kSteps[8] = {
    {-1, -1, true}, {0, -1, false}, {1, -1, true},
    {-1, 0, false},                 {1, 0, false},
    {-1, 1, true},  {0, 1, false},  {1, 1, true},
};

// A diagonal move may not slip between two touching obstacle corners.
bool step_allowed(const Grid& grid, GridPos from, const Step& s) {
    const GridPos to{from.x + s.dx, from.y + s.dy};
    if (!grid.walkable(to)) return false;
    if (s.diagonal) {
        if (!grid.walkable({from.x + s.dx, from.y})) return false;
        if (!grid.walkable({from.x, from.y + s.dy})) return false;
    }
    return true;
}

double octile_heuristic(GridPos a, GridPos b) {
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    return (dx + dy) + (kSqrt2 - 2.0) * std::min(dx, dy);
}

struct OpenEntry {
    double f;
    GridPos pos;
};
struct OpenOrder {
    bool operator()(const OpenEntry& a, const OpenEntry& b) const {
        if (a.f != b.f) return a.f > b.f;
        if (a.pos.y != b.pos.y) return a.pos.y > b.pos.y;
        return a.pos.x > b.pos.x;
    }
};

Path path_from_waypoints(const Grid& grid, std::vector<GridPos> waypoints) {
    Path path;
    path.waypoints = std::move(waypoints);
    for (std::size_t i = 1; i < path.waypoints.size(); ++i) {
        const GridPos a = path.waypoints[i - 1];
        const GridPos b = path.waypoints[i];
        if (a.x != b.x && a.y != b.y)
            ++path.diagonal_steps;
        else
            ++path.straight_steps;
    }
    path.length_m =
        octile_length_m(path.straight_steps, path.diagonal_steps, grid.cell_size_m());
    return path;
}

// Core search; returns an empty optional when the goal cannot be reached.
std::optional<Path> try_find_path(const Grid& grid, GridPos start, GridPos goal) {
    if (start == goal) return path_from_waypoints(grid, {start});

    const std::size_t cells = static_cast<std::size_t>(grid.width()) * grid.height();
    const auto index = [&](GridPos p) {
        return static_cast<std::size_t>(p.y) * grid.width() + p.x;
    };
    std::vector<double> g(cells, std::numeric_limits<double>::infinity());
    std::vector<int> parent(cells, -1);
    std::vector<std::uint8_t> closed(cells, 0);

    std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open;
    g[index(start)] = 0.0;
    open.push({octile_heuristic(start, goal), start});

    while (!open.empty()) {
        const OpenEntry top = open.top();
        open.pop();
        const std::size_t ci = index(top.pos);
        if (closed[ci]) continue;
        closed[ci] = 1;
        if (top.pos == goal) break;

        for (const Step& s : kSteps) {
            if (!step_allowed(grid, top.pos, s)) continue;
            const GridPos nb{top.pos.x + s.dx, top.pos.y + s.dy};
            const std::size_t ni = index(nb);
            if (closed[ni]) continue;
            const double cost = g[ci] + (s.diagonal ? kSqrt2 : 1.0);
            if (cost < g[ni]) {
                g[ni] = cost;
                parent[ni] = static_cast<int>(ci);
                open.push({cost + octile_heuristic(nb, goal), nb});
            }
        }
    }

    if (!closed[index(goal)]) return std::nullopt;

    std::vector<GridPos> waypoints;
    for (int i = static_cast<int>(index(goal)); i != -1; i = parent[i])
        waypoints.push_back({i % grid.width(), i / grid.width()});
    std::reverse(waypoints.begin(), waypoints.end());
    return path_from_waypoints(grid, std::move(waypoints));
}

}  // namespace

Path find_path(const Grid& grid, GridPos start, GridPos goal) {
    if (!grid.walkable(start) || !grid.walkable(goal))
        throw CompileError(make_error(
            codes::Unreachable,
            fmt::format("path endpoint ({}, {}) is not a free cell",
                        grid.walkable(start) ? goal.x : start.x,
                        grid.walkable(start) ? goal.y : start.y),
            {}));
    if (auto path = try_find_path(grid, start, goal)) return std::move(*path);
    throw CompileError(make_error(
        codes::Unreachable,
        fmt::format("no path from ({}, {}) to ({}, {})", start.x, start.y, goal.x, goal.y), {}));
}

GridPos approach_cell(const Grid& grid, GridPos entity_cell, GridPos from) {
    bool any_free = false;
    std::optional<GridPos> best;
    double best_cost = std::numeric_limits<double>::infinity();
    for (const Step& s : kSteps) {  // (lower y, lower x) order resolves cost ties
        const GridPos nb{entity_cell.x + s.dx, entity_cell.y + s.dy};
        if (!grid.walkable(nb)) continue;
        any_free = true;
        const auto path = try_find_path(grid, from, nb);
        if (!path) continue;
        const double cost = path->length_m;
        if (cost < best_cost) {
            best_cost = cost;
            best = nb;
        }
    }
    if (best) return *best;
    if (!any_free)
        throw CompileError(make_error(
            codes::NoApproach,
            fmt::format("entity cell ({}, {}) has no free neighbor to stand on", entity_cell.x,
                        entity_cell.y),
            {}));
    throw CompileError(make_error(
        codes::Unreachable,
        fmt::format("no route from ({}, {}) to any free cell beside ({}, {})", from.x, from.y,
                    entity_cell.x, entity_cell.y),
        {}));
}

GridPos approach_cell(const Scene& scene, std::string_view entity, GridPos from) {
    const auto pos = scene.entity_pos(entity);
    if (!pos)
        throw CompileError(make_error(codes::UnknownEntity,
                                      fmt::format("unknown entity '{}'", entity), {}));
    return approach_cell(scene.grid, *pos, from);
}

}  // namespace chase
