#pragma once

#include <span>
#include <variant>
#include <vector>

#include "veredit/buffer.hpp"

namespace veredit {

struct InsertLine {
    LineIndex pos;
    Line text;
    bool operator==(const InsertLine&) const = default;
};

struct ReadLine {
    LineIndex pos;
    Line fallback;
    bool operator==(const ReadLine&) const = default;
};

struct DeleteLine {
    LineIndex pos;
    bool operator==(const DeleteLine&) const = default;
};

/// The editing command algebra. Every buffer mutation in the project,
/// including the interactive editor's, is expressed as one of these.
using Command = std::variant<InsertLine, ReadLine, DeleteLine>;

/// Result of evaluating one command: the successor buffer and the command's
/// output line. Only ReadLine produces a non-empty output.
struct EvalResult {
    Buffer buffer;
    Line output;
};

/// Evaluates a single command against a buffer. Total; the input buffer is
/// never touched.
EvalResult editor_eval(const Command& cmd, const Buffer& b);

struct TraceResult {
    Buffer buffer;
    std::vector<Line> outputs; // one entry per command, in order
};

/// Threads a buffer through a command sequence, collecting every step's
/// output line.
TraceResult eval_trace(std::span<const Command> cmds, Buffer initial);

} // namespace veredit
