// scene.cpp - scene document loading and validation
#include "chase/scene.hpp"

#include <fmt/core.h>
#include <nlohmann/json.hpp>

namespace chase {

Grid::Grid(int width, int height, double cell_size_m)
    : width_(width), height_(height), cell_size_m_(cell_size_m),
      obstacles_(static_cast<std::size_t>(width) * height, 0) {}

bool Grid::in_bounds(GridPos p) const {
    return p.x >= 0 && p.y >= 0 && p.x < width_ && p.y < height_;
}

bool Grid::blocked(GridPos p) const {
    return obstacles_[static_cast<std::size_t>(p.y) * width_ + p.x] != 0;
}

void Grid::set_obstacle(GridPos p) {
    obstacles_[static_cast<std::size_t>(p.y) * width_ + p.x] = 1;
}

std::optional<GridPos> Scene::entity_pos(std::string_view name) const {
    if (const auto it = characters.find(std::string(name)); it != characters.end())
        return it->second;
    if (const auto it = objects.find(std::string(name)); it != objects.end()) return it->second;
    return std::nullopt;
}

bool Scene::has_character(std::string_view name) const {
    return characters.count(std::string(name)) != 0;
}

bool Scene::has_entity(std::string_view name) const {
    return entity_pos(name).has_value();
}

namespace {

[[noreturn]] void bad_scene(std::string code, std::string message) {
    throw CompileError(make_error(std::move(code), std::move(message), {}));
}

GridPos parse_pos(const nlohmann::json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        bad_scene(codes::MalformedScene, where + ": position must be [x, y] cell indices");
    return {j[0].get<int>(), j[1].get<int>()};
}

void place_entities(const nlohmann::json& doc, const char* key, const Grid& grid, Scene& scene,
                    std::map<std::string, GridPos>& target) {
    if (!doc.contains(key)) return;
    if (!doc[key].is_array())
        bad_scene(codes::MalformedScene, fmt::format("\"{}\" must be an array", key));
    for (const auto& entry : doc[key]) {
        if (!entry.is_object() || !entry.contains("name") || !entry["name"].is_string() ||
            !entry.contains("pos"))
            bad_scene(codes::MalformedScene,
                      fmt::format("each entry of \"{}\" needs \"name\" and \"pos\"", key));
        const std::string name = entry["name"].get<std::string>();
        if (name.empty()) bad_scene(codes::MalformedScene, "entity names must be nonempty");
        const GridPos pos = parse_pos(entry["pos"], fmt::format("entity '{}'", name));
        if (scene.has_entity(name))
            bad_scene(codes::DuplicateName, fmt::format("entity name '{}' is used twice", name));
        if (!grid.in_bounds(pos))
            bad_scene(codes::OutOfBounds,
                      fmt::format("entity '{}' at ({}, {}) is outside the {}x{} grid", name, pos.x,
                                  pos.y, grid.width(), grid.height()));
        if (grid.blocked(pos))
            bad_scene(codes::EntityOnObstacle,
                      fmt::format("entity '{}' sits on an obstacle cell ({}, {})", name, pos.x,
                                  pos.y));
        target.emplace(name, pos);
    }
}

}  // namespace

Scene load_scene(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad_scene(codes::MalformedScene, fmt::format("scene is not valid JSON: {}", e.what()));
    }
    if (!doc.is_object() || !doc.contains("grid") || !doc["grid"].is_object())
        bad_scene(codes::MalformedScene, "scene document must be an object with a \"grid\"");

    const auto& g = doc["grid"];
    if (!g.contains("width") || !g["width"].is_number_integer() || !g.contains("height") ||
        !g["height"].is_number_integer())
        bad_scene(codes::MalformedScene, "grid needs integer \"width\" and \"height\"");
    const int width = g["width"].get<int>();
    const int height = g["height"].get<int>();
    if (width < 1 || height < 1)
        bad_scene(codes::MalformedScene, "grid dimensions must be at least 1x1");

    double cell_size = 0.5;
    if (g.contains("cell_size_m")) {
        if (!g["cell_size_m"].is_number() || !(g["cell_size_m"].get<double>() > 0.0))
            bad_scene(codes::MalformedScene, "cell_size_m must be a positive number");
        cell_size = g["cell_size_m"].get<double>();
    }

    Scene scene;
    scene.grid = Grid(width, height, cell_size);

    if (g.contains("obstacles")) {
        if (!g["obstacles"].is_array())
            bad_scene(codes::MalformedScene, "\"obstacles\" must be an array of [x, y] pairs");
        for (const auto& cell : g["obstacles"]) {
            const GridPos pos = parse_pos(cell, "obstacle");
            if (!scene.grid.in_bounds(pos))
                bad_scene(codes::OutOfBounds,
                          fmt::format("obstacle ({}, {}) is outside the {}x{} grid", pos.x, pos.y,
                                      width, height));
            scene.grid.set_obstacle(pos);
        }
    }

    place_entities(doc, "characters", scene.grid, scene, scene.characters);
    place_entities(doc, "objects", scene.grid, scene, scene.objects);
    return scene;
}

}  // namespace chase
