// channel.hpp - per-character animation lanes
#pragma once

#include <optional>
#include <string_view>

namespace chase {

/// Body carries locomotion and whole-body actions; the rest are limb lanes.
/// Declaration order is the canonical sort order for timeline output.
enum class Channel { Body, HandR, HandL, FootR, FootL };

inline constexpr Channel kAllChannels[] = {Channel::Body, Channel::HandR, Channel::HandL,
                                           Channel::FootR, Channel::FootL};

/// Serialized name: "body", "handR", "handL", "footR", "footL".
const char* channel_name(Channel channel);

/// Script keyword -> channel, case-insensitive. Accepts the four limb
/// keywords plus "wholeBody" (which maps to Body). Empty for anything else.
std::optional<Channel> channel_from_keyword(std::string_view word);

inline bool is_limb(Channel channel) { return channel != Channel::Body; }

}  // namespace chase
