// serialize.hpp - deterministic document output
#pragma once

#include <string>
#include <vector>

#include "chase/motion.hpp"
#include "chase/timeline.hpp"

namespace chase {

/// Timeline document: one JSON object, one event per line, keys in fixed
/// order, seconds and coordinates with 6 decimals, LF newlines. Identical
/// input produces identical bytes.
std::string timeline_document(const Timeline& timeline);

/// Frames document: one JSON object per line.
std::string frames_document(const std::vector<Frame>& frames);

/// Fixed 6-decimal number text ("3.000000"); -0 normalizes to 0.
std::string format_seconds(double value);

}  // namespace chase
