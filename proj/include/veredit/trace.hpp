#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "veredit/commands.hpp"

namespace veredit {

// Text form of a command trace, one command per line:
//
//   I <pos> <text>     insert <text> (verbatim to end of line) at <pos>
//   R <pos>            read at <pos>; replay uses an empty fallback line
//   D <pos>            delete at <pos>
//
// Positions are decimal. The format is what the verification harness writes
// for failing traces and reads back for replay.

std::string format_command(const Command& cmd);

/// One line per command, each terminated with '\n'.
std::string format_trace(std::span<const Command> cmds);

struct TraceParseError {
    std::size_t line_number = 0; // 1-based
    std::string message;
    bool operator==(const TraceParseError&) const = default;
};

/// Parses a single trace line (no terminating newline).
std::variant<Command, std::string> parse_trace_line(std::string_view line);

/// Parses a whole trace file image. A terminating '\n' after the last
/// command is accepted; blank lines are errors.
std::variant<std::vector<Command>, TraceParseError> parse_trace(std::string_view text);

} // namespace veredit
