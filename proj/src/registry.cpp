// registry.cpp - action catalogue, built-in set and JSON loading
#include "chase/registry.hpp"

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

namespace chase {

const char* channel_name(Channel channel) {
    switch (channel) {
        case Channel::Body: return "body";
        case Channel::HandR: return "handR";
        case Channel::HandL: return "handL";
        case Channel::FootR: return "footR";
        case Channel::FootL: return "footL";
    }
    return "?";
}

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

// Iterative Levenshtein, case-insensitive; used for UNKNOWN-ACTION hints.
int edit_distance(std::string_view a, std::string_view b) {
    const std::string la = lowercase(a);
    const std::string lb = lowercase(b);
    std::vector<int> prev(lb.size() + 1);
    std::vector<int> cur(lb.size() + 1);
    for (std::size_t j = 0; j <= lb.size(); ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= la.size(); ++i) {
        cur[0] = static_cast<int>(i);
        for (std::size_t j = 1; j <= lb.size(); ++j) {
            const int sub = prev[j - 1] + (la[i - 1] == lb[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[lb.size()];
}

}  // namespace

std::optional<Channel> channel_from_keyword(std::string_view word) {
    const std::string w = lowercase(word);
    if (w == "handr") return Channel::HandR;
    if (w == "handl") return Channel::HandL;
    if (w == "footr") return Channel::FootR;
    if (w == "footl") return Channel::FootL;
    if (w == "wholebody") return Channel::Body;
    return std::nullopt;
}

const char* motion_style_name(MotionStyle style) {
    return style == MotionStyle::Walk ? "walk" : "run";
}

std::optional<MotionStyle> motion_style_from_keyword(std::string_view word) {
    const std::string w = lowercase(word);
    if (w == "walk") return MotionStyle::Walk;
    if (w == "run") return MotionStyle::Run;
    return std::nullopt;
}

bool ActionDef::allows_part(Channel part) const {
    return std::find(allowed_parts.begin(), allowed_parts.end(), part) != allowed_parts.end();
}

bool operator==(const ActionDef& a, const ActionDef& b) {
    return a.keyword == b.keyword && a.kind == b.kind && a.allowed_parts == b.allowed_parts &&
           a.default_part == b.default_part && a.default_duration_s == b.default_duration_s &&
           a.repeat_policy == b.repeat_policy;
}

bool operator==(const Registry& a, const Registry& b) {
    return a.actions_ == b.actions_ && a.walk_speed_mps_ == b.walk_speed_mps_ &&
           a.run_speed_mps_ == b.run_speed_mps_;
}

void Registry::add(ActionDef def) {
    actions_[lowercase(def.keyword)] = std::move(def);
}

void Registry::set_style_speed(MotionStyle style, double mps) {
    (style == MotionStyle::Walk ? walk_speed_mps_ : run_speed_mps_) = mps;
}

double Registry::style_speed(MotionStyle style) const {
    return style == MotionStyle::Walk ? walk_speed_mps_ : run_speed_mps_;
}

const ActionDef* Registry::find(std::string_view keyword) const {
    const auto it = actions_.find(lowercase(keyword));
    return it == actions_.end() ? nullptr : &it->second;
}

std::optional<std::string> Registry::suggest(std::string_view keyword) const {
    std::optional<std::string> best;
    int best_dist = 3;
    for (const auto& [key, def] : actions_) {
        const int d = edit_distance(keyword, def.keyword);
        if (d < best_dist) {
            best_dist = d;
            best = def.keyword;
        }
    }
    return best;
}

const ActionDef& Registry::lookup(std::string_view keyword, SourceSpan span) const {
    if (const ActionDef* def = find(keyword)) return *def;
    std::string message = fmt::format("unknown action '{}'", keyword);
    if (const auto hint = suggest(keyword)) message += fmt::format("; did you mean '{}'?", *hint);
    throw CompileError(make_error(codes::UnknownAction, std::move(message), span));
}

Registry Registry::builtin() {
    Registry r;
    r.add({"wave hand", ActionKind::SoloAction, {Channel::HandR, Channel::HandL}, Channel::HandR,
           2.0, RepeatPolicy::LoopUntilDuration});
    r.add({"jump", ActionKind::SoloAction, {Channel::Body}, Channel::Body, 1.0,
           RepeatPolicy::Once});
    r.add({"kick", ActionKind::InteractionModule, {Channel::FootR, Channel::FootL}, Channel::FootR,
           1.0, RepeatPolicy::Once});
    r.add({"punch", ActionKind::InteractionModule, {Channel::HandR, Channel::HandL}, Channel::HandR,
           1.0, RepeatPolicy::Once});
    r.add({"knock", ActionKind::InteractionModule, {Channel::HandR, Channel::HandL}, Channel::HandR,
           1.5, RepeatPolicy::LoopUntilDuration});
    return r;
}

int repetitions_for(const ActionDef& def, double duration_s) {
    if (def.repeat_policy == RepeatPolicy::Once) return 1;
    const double cycles = duration_s / def.default_duration_s;
    return std::max(1, static_cast<int>(std::ceil(cycles - 1e-9)));
}

DefaultBehavior default_behavior(const ActionDef& def) {
    return {def.default_duration_s, def.default_part,
            repetitions_for(def, def.default_duration_s)};
}

// -- JSON loading ------------------------------------------------------------

namespace {

[[noreturn]] void bad_registry(const std::string& message) {
    throw CompileError(make_error(codes::MalformedRegistry, message, {}));
}

Channel parse_part(const nlohmann::json& j, const char* where) {
    if (!j.is_string()) bad_registry(fmt::format("{}: body part must be a string", where));
    const auto part = channel_from_keyword(j.get<std::string>());
    if (!part)
        bad_registry(fmt::format("{}: unknown body part '{}'", where, j.get<std::string>()));
    return *part;
}

}  // namespace

Registry Registry::from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad_registry(fmt::format("registry is not valid JSON: {}", e.what()));
    }
    if (!doc.is_object() || !doc.contains("actions") || !doc["actions"].is_array())
        bad_registry("registry document must be an object with an \"actions\" array");

    Registry r;
    for (const auto& entry : doc["actions"]) {
        if (!entry.is_object()) bad_registry("action entries must be objects");
        ActionDef def;
        if (!entry.contains("keyword") || !entry["keyword"].is_string())
            bad_registry("action entry is missing its \"keyword\"");
        def.keyword = entry["keyword"].get<std::string>();
        const std::string where = fmt::format("action '{}'", def.keyword);

        if (!entry.contains("kind") || !entry["kind"].is_string())
            bad_registry(where + ": missing \"kind\"");
        const std::string kind = entry["kind"].get<std::string>();
        if (kind == "solo-action")
            def.kind = ActionKind::SoloAction;
        else if (kind == "interaction-module")
            def.kind = ActionKind::InteractionModule;
        else
            bad_registry(fmt::format("{}: unknown kind '{}'", where, kind));

        if (!entry.contains("allowed_parts") || !entry["allowed_parts"].is_array() ||
            entry["allowed_parts"].empty())
            bad_registry(where + ": \"allowed_parts\" must be a nonempty array");
        for (const auto& p : entry["allowed_parts"])
            def.allowed_parts.push_back(parse_part(p, where.c_str()));

        if (!entry.contains("default_part"))
            bad_registry(where + ": missing \"default_part\"");
        def.default_part = parse_part(entry["default_part"], where.c_str());
        if (!def.allows_part(def.default_part))
            bad_registry(where + ": default_part is not one of allowed_parts");

        if (!entry.contains("default_duration_s") || !entry["default_duration_s"].is_number())
            bad_registry(where + ": missing numeric \"default_duration_s\"");
        def.default_duration_s = entry["default_duration_s"].get<double>();
        if (!(def.default_duration_s > 0.0))
            bad_registry(where + ": default_duration_s must be positive");

        if (!entry.contains("repeat_policy") || !entry["repeat_policy"].is_string())
            bad_registry(where + ": missing \"repeat_policy\"");
        const std::string policy = entry["repeat_policy"].get<std::string>();
        if (policy == "once")
            def.repeat_policy = RepeatPolicy::Once;
        else if (policy == "loop-until-duration")
            def.repeat_policy = RepeatPolicy::LoopUntilDuration;
        else
            bad_registry(fmt::format("{}: unknown repeat_policy '{}'", where, policy));

        if (r.find(def.keyword))
            bad_registry(fmt::format("duplicate action keyword '{}'", def.keyword));
        r.add(std::move(def));
    }

    if (doc.contains("styles")) {
        const auto& styles = doc["styles"];
        if (!styles.is_object()) bad_registry("\"styles\" must be an object");
        for (const auto& [name, value] : styles.items()) {
            const auto style = motion_style_from_keyword(name);
            if (!style) bad_registry(fmt::format("unknown motion style '{}'", name));
            if (!value.is_number() || !(value.get<double>() > 0.0))
                bad_registry(fmt::format("style '{}' speed must be a positive number", name));
            r.set_style_speed(*style, value.get<double>());
        }
    }
    return r;
}

}  // namespace chase
