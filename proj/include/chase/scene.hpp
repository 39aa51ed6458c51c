// scene.hpp - named entities on an obstacle grid
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chase/diagnostics.hpp"

namespace chase {

struct GridPos {
    int x = 0;
    int y = 0;

    friend bool operator==(const GridPos&, const GridPos&) = default;
    friend auto operator<=>(const GridPos&, const GridPos&) = default;
};

/// Rectangular cell grid with a static obstacle bitmap.
class Grid {
public:
    Grid() = default;
    Grid(int width, int height, double cell_size_m);

    int width() const { return width_; }
    int height() const { return height_; }
    double cell_size_m() const { return cell_size_m_; }

    bool in_bounds(GridPos p) const;
    bool blocked(GridPos p) const;  // pre: in_bounds
    bool walkable(GridPos p) const { return in_bounds(p) && !blocked(p); }

    void set_obstacle(GridPos p);

    /// Cell center in meters.
    double center_x_m(GridPos p) const { return (p.x + 0.5) * cell_size_m_; }
    double center_y_m(GridPos p) const { return (p.y + 0.5) * cell_size_m_; }

private:
    int width_ = 0;
    int height_ = 0;
    double cell_size_m_ = 0.5;
    std::vector<std::uint8_t> obstacles_;
};

/// Characters and objects with unique names. Entity names are case-sensitive.
struct Scene {
    Grid grid;
    std::map<std::string, GridPos> characters;
    std::map<std::string, GridPos> objects;

    /// Position of a character or object; empty if the name is unknown.
    std::optional<GridPos> entity_pos(std::string_view name) const;
    bool has_character(std::string_view name) const;
    bool has_entity(std::string_view name) const;
};

/// Parses and validates the JSON scene document. Error codes:
/// MALFORMED-SCENE, DUPLICATE-NAME, OUT-OF-BOUNDS, ENTITY-ON-OBSTACLE.
Scene load_scene(std::string_view text);

}  // namespace chase
