// registry.hpp - the catalogue of actions a character can perform
#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chase/channel.hpp"
#include "chase/diagnostics.hpp"

namespace chase {

enum class ActionKind { SoloAction, InteractionModule };
enum class RepeatPolicy { Once, LoopUntilDuration };
enum class MotionStyle { Walk, Run };

const char* motion_style_name(MotionStyle style);
std::optional<MotionStyle> motion_style_from_keyword(std::string_view word);

/// Registry entry for one action keyword. default_duration_s doubles as the
/// cycle length for loop-until-duration actions.
struct ActionDef {
    std::string keyword;
    ActionKind kind = ActionKind::SoloAction;
    std::vector<Channel> allowed_parts;
    Channel default_part = Channel::Body;
    double default_duration_s = 1.0;
    RepeatPolicy repeat_policy = RepeatPolicy::Once;

    bool allows_part(Channel part) const;
};

struct DefaultBehavior {
    double duration_s;
    Channel part;
    int repetitions;
};

/// Immutable after load; concurrent readers are safe.
class Registry {
public:
    /// The built-in action set: wave hand, jump, kick, punch, knock.
    static Registry builtin();

    /// Loads the JSON registry document; MALFORMED-REGISTRY on any schema
    /// or invariant violation.
    static Registry from_json(std::string_view text);

    /// Case-insensitive match. nullptr when the keyword is not registered.
    const ActionDef* find(std::string_view keyword) const;

    /// Like find but throws UNKNOWN-ACTION, hinting the nearest keyword
    /// within edit distance 2 when there is one.
    const ActionDef& lookup(std::string_view keyword, SourceSpan span = {}) const;

    /// Nearest registered keyword within Levenshtein distance 2, if any.
    std::optional<std::string> suggest(std::string_view keyword) const;

    double style_speed(MotionStyle style) const;

    const std::map<std::string, ActionDef>& actions() const { return actions_; }

    void add(ActionDef def);  // keyed case-insensitively; replaces duplicates
    void set_style_speed(MotionStyle style, double mps);

    friend bool operator==(const Registry&, const Registry&);

private:
    std::map<std::string, ActionDef> actions_;  // key: lowercased keyword
    double walk_speed_mps_ = 1.4;
    double run_speed_mps_ = 3.0;
};

/// Default duration, part and repetition count when no parameter is given.
DefaultBehavior default_behavior(const ActionDef& def);

/// once -> 1; loop-until-duration -> ceil(duration / cycle).
int repetitions_for(const ActionDef& def, double duration_s);

bool operator==(const ActionDef&, const ActionDef&);

}  // namespace chase
