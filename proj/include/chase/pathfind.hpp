// pathfind.hpp - 8-connected grid shortest paths
#pragma once

#include <string_view>
#include <vector>

#include "chase/scene.hpp"

namespace chase {

/// Shortest path under octile costs: straight steps cost 1, diagonals
/// sqrt(2), scaled by cell size. Waypoints include both endpoints.
struct Path {
    std::vector<GridPos> waypoints;
    int straight_steps = 0;
    int diagonal_steps = 0;
    double length_m = 0.0;
};

/// Arc length of a step-count prefix. Lengths are always recomputed from
/// integer counts through this one expression so that equal-cost paths (and
/// track end times derived from them) compare bit for bit equal.
inline double octile_length_m(int straight_steps, int diagonal_steps, double cell_size_m) {
    return (straight_steps + diagonal_steps * 1.4142135623730951) * cell_size_m;
}

/// A* with the octile heuristic. Diagonal moves may not cut corners: a
/// diagonal step is legal only if both orthogonally adjacent cells are free.
/// Cost ties are broken by expanding neighbors in (lower y, then lower x)
/// order. Throws CompileError UNREACHABLE when no path exists.
Path find_path(const Grid& grid, GridPos start, GridPos goal);

/// The free cell among the 8 neighbors of `entity_cell` that minimizes path
/// cost from `from`; ties go to lower y then lower x. NO-APPROACH when the
/// entity has no free neighbor at all, UNREACHABLE when free neighbors exist
/// but none can be reached from `from`.
GridPos approach_cell(const Grid& grid, GridPos entity_cell, GridPos from);

/// Convenience over a static scene: looks up the entity by name.
GridPos approach_cell(const Scene& scene, std::string_view entity, GridPos from);

}  // namespace chase
