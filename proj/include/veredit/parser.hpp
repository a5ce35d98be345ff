#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "veredit/line.hpp"

namespace veredit {

/// The REPL's two input modes. Insert mode is entered only by an
/// insert/append command and left only by the "." terminator.
enum class ParserMode {
    Command,
    Insert,
};

struct SetAddress {
    std::size_t address; // 1-based, never 0
    bool operator==(const SetAddress&) const = default;
};
struct EnterInsert {
    bool operator==(const EnterInsert&) const = default;
};
struct EnterAppend {
    bool operator==(const EnterAppend&) const = default;
};
struct DeleteCurrent {
    bool operator==(const DeleteCurrent&) const = default;
};
struct PrintNumbered {
    bool operator==(const PrintNumbered&) const = default;
};
struct PrintPlain {
    bool operator==(const PrintPlain&) const = default;
};
struct WriteFile {
    std::optional<std::string> path;
    bool operator==(const WriteFile&) const = default;
};
struct Quit {
    bool operator==(const Quit&) const = default;
};
struct Empty {
    bool operator==(const Empty&) const = default;
};
struct InsertText {
    Line text;
    bool operator==(const InsertText&) const = default;
};
struct EndInsert {
    bool operator==(const EndInsert&) const = default;
};

using ReplCommand = std::variant<SetAddress, EnterInsert, EnterAppend, DeleteCurrent,
                                 PrintNumbered, PrintPlain, WriteFile, Quit, Empty,
                                 InsertText, EndInsert>;

struct ParseError {
    std::string input; // the offending line, verbatim
    bool operator==(const ParseError&) const = default;
};

using ParseResult = std::variant<ReplCommand, ParseError>;

/// Parses one physical input line (no newline) under the given mode.
///
/// Insert mode: "." ends insertion, anything else is literal text. Command
/// mode: single-character commands i a d n p q w, "w PATH" with exactly one
/// separating space, all-digit strings as 1-based addresses (0 and overflow
/// are errors), and "" as the empty command. No whitespace tolerance.
/// Total: never throws for newline-free input.
ParseResult parse_line(std::string_view input, ParserMode mode);

} // namespace veredit
