// config.hpp - engine tunables
#pragma once

#include <string_view>

#include "chase/registry.hpp"

namespace chase {

struct EngineConfig {
    double walk_speed_mps = 1.4;
    double run_speed_mps = 3.0;
    double fps = 30.0;

    double style_speed(MotionStyle style) const {
        return style == MotionStyle::Walk ? walk_speed_mps : run_speed_mps;
    }

    /// Speeds taken from the registry's style table, fps left at default.
    static EngineConfig from_registry(const Registry& registry);

    /// Applies a JSON override document: {"styles":{"walk":..,"run":..},"fps":..}.
    /// All keys optional. MALFORMED-CONFIG on bad values.
    void apply_json(std::string_view text);
};

}  // namespace chase
