// config.cpp - engine tunables and their JSON override document
#include "chase/config.hpp"

#include <fmt/core.h>

#include <nlohmann/json.hpp>

namespace chase {

namespace {

[[noreturn]] void bad_config(std::string message) {
    throw CompileError(make_error(codes::MalformedConfig, std::move(message), {}));
}

double positive_number(const nlohmann::json& value, const char* what) {
    if (!value.is_number()) bad_config(fmt::format("{} must be a number", what));
    const double number = value.get<double>();
    if (!(number > 0.0)) bad_config(fmt::format("{} must be positive, got {}", what, number));
    return number;
}

}  // namespace

EngineConfig EngineConfig::from_registry(const Registry& registry) {
    EngineConfig config;
    config.walk_speed_mps = registry.style_speed(MotionStyle::Walk);
    config.run_speed_mps = registry.style_speed(MotionStyle::Run);
    return config;
}

void EngineConfig::apply_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& err) {
        bad_config(fmt::format("config is not valid JSON: {}", err.what()));
    }
    if (!doc.is_object()) bad_config("config must be a JSON object");

    for (const auto& [key, value] : doc.items()) {
        if (key == "fps") {
            fps = positive_number(value, "fps");
        } else if (key == "styles") {
            if (!value.is_object()) bad_config("\"styles\" must be an object");
            for (const auto& [style, speed] : value.items()) {
                if (style == "walk")
                    walk_speed_mps = positive_number(speed, "styles.walk");
                else if (style == "run")
                    run_speed_mps = positive_number(speed, "styles.run");
                else
                    bad_config(fmt::format("unknown motion style '{}' in config", style));
            }
        } else {
            bad_config(fmt::format("unknown config key '{}'", key));
        }
    }
}

}  // namespace chase
