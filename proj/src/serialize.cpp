// serialize.cpp - byte-stable timeline and frame documents
#include "chase/serialize.hpp"

#include <fmt/core.h>

#include <string_view>

namespace chase {

namespace {

void append_string(std::string& out, std::string_view text) {
    out += '"';
    for (const char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20)
                    out += fmt::format("\\u{:04x}", static_cast<unsigned char>(c));
                else
                    out += c;
        }
    }
    out += '"';
}

void append_seconds(std::string& out, double value) { out += format_seconds(value); }

void append_vec(std::string& out, double x, double y) {
    out += '[';
    append_seconds(out, x);
    out += ',';
    append_seconds(out, y);
    out += ']';
}

void append_params(std::string& out, const EventParams& params) {
    out += fmt::format("{{\"row\":{}", params.row);
    if (params.overlay) out += ",\"overlay\":true";
    if (params.approach) out += ",\"approach\":true";
    if (params.target) {
        out += ",\"target\":";
        append_string(out, *params.target);
    }
    if (params.style) {
        out += ",\"style\":";
        append_string(out, *params.style);
    }
    if (params.part) out += fmt::format(",\"part\":\"{}\"", channel_name(*params.part));
    if (params.repetitions) out += fmt::format(",\"repetitions\":{}", *params.repetitions);
    if (params.facing) {
        out += ",\"facing\":";
        append_vec(out, params.facing->x, params.facing->y);
    }
    out += '}';
}

void append_event(std::string& out, const TimelineEvent& ev) {
    out += "{\"character\":";
    append_string(out, ev.character);
    out += fmt::format(",\"channel\":\"{}\",\"action\":", channel_name(ev.channel));
    append_string(out, ev.action);
    out += ",\"start_s\":";
    append_seconds(out, ev.start_s);
    out += ",\"end_s\":";
    append_seconds(out, ev.end_s);
    out += ",\"params\":";
    append_params(out, ev.params);
    out += ",\"track\":[";
    for (std::size_t i = 0; i < ev.track.size(); ++i) {
        if (i > 0) out += ',';
        out += '[';
        append_seconds(out, ev.track[i].t_s);
        out += ',';
        append_seconds(out, ev.track[i].x_m);
        out += ',';
        append_seconds(out, ev.track[i].y_m);
        out += ']';
    }
    out += "]}";
}

}  // namespace

std::string format_seconds(double value) {
    std::string text = fmt::format("{:.6f}", value);
    if (text == "-0.000000") text.erase(0, 1);
    return text;
}

std::string timeline_document(const Timeline& timeline) {
    std::string out = "{\n";
    out += fmt::format("  \"total_s\": {},\n", format_seconds(timeline.total_s));
    out += "  \"events\": [";
    for (std::size_t i = 0; i < timeline.events.size(); ++i) {
        out += i == 0 ? "\n    " : ",\n    ";
        append_event(out, timeline.events[i]);
    }
    out += timeline.events.empty() ? "]\n" : "\n  ]\n";
    out += "}\n";
    return out;
}

std::string frames_document(const std::vector<Frame>& frames) {
    std::string out;
    for (const Frame& frame : frames) {
        out += "{\"t_s\":";
        append_seconds(out, frame.t_s);
        out += ",\"characters\":{";
        bool first_char = true;
        for (const auto& [name, state] : frame.characters) {
            if (!first_char) out += ',';
            first_char = false;
            append_string(out, name);
            out += ":{\"pos\":";
            append_vec(out, state.pos_m.x, state.pos_m.y);
            out += ",\"facing\":";
            append_vec(out, state.facing.x, state.facing.y);
            out += ",\"active\":{";
            bool first_ch = true;
            for (const auto& [channel, action] : state.active) {
                if (!first_ch) out += ',';
                first_ch = false;
                out += fmt::format("\"{}\":", channel_name(channel));
                append_string(out, action);
            }
            out += "}}";
        }
        out += "}}\n";
    }
    return out;
}

}  // namespace chase
