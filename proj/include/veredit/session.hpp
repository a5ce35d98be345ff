#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "veredit/backend.hpp"
#include "veredit/parser.hpp"

namespace veredit {

/// Interactive editor state. `current` is the 1-based line pointer the user
/// addresses; 0 means the buffer is empty, otherwise 1 <= current <= lines.
/// The pointer and the 1-to-0-based translation live here and nowhere else;
/// every buffer change goes through a Command on the backend.
struct SessionState {
    std::unique_ptr<BufferBackend> backend;
    std::size_t current = 0;
    std::optional<std::string> filename;
    bool dirty = false;
    ParserMode mode = ParserMode::Command;
    std::string prompt;

    std::size_t insert_point = 0; // 0-based slot the next inserted line takes
    bool quit_warned = false;     // one "?" has been issued for a dirty quit
};

struct StepOutput {
    std::vector<std::string> text_out;
    bool error = false;     // a "?" line was emitted
    bool terminate = false; // only a quit sets this
};

/// Applies one parsed command to the session. Errors (bad address, printing
/// or deleting in an empty buffer, write without a filename) come back as a
/// single "?" output line with the state otherwise untouched.
StepOutput execute(SessionState& state, const ReplCommand& cmd);

/// Reads lines, parses them under the session's mode, executes, and writes
/// each output line. Stops on quit or end of input; returns the process
/// exit code (0 for both, nonzero only for stream failures, which are
/// reported on `diag`).
int run_session(SessionState& state, std::istream& in, std::ostream& out,
                std::ostream& diag);

/// Fresh session on the named backend ("reference" or "gap"); empty prompt.
SessionState make_session(std::string_view backend_name, Buffer initial = {});

} // namespace veredit
