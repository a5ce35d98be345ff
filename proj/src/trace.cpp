#include "veredit/trace.hpp"

#include <charconv>

namespace veredit {

namespace {

std::string decimal(LineIndex pos) {
    return std::to_string(pos);
}

// Parses "<digits>" into pos. Returns false on empty/non-digit/overflow.
bool parse_pos(std::string_view text, LineIndex& pos) {
    if (text.empty())
        return false;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, pos);
    return ec == std::errc() && ptr == last;
}

} // namespace

std::string format_command(const Command& cmd) {
    struct Visitor {
        std::string operator()(const InsertLine& c) const {
            return "I " + decimal(c.pos) + " " + c.text.content();
        }
        std::string operator()(const ReadLine& c) const {
            // The fallback line is not carried by the format; replay always
            // uses an empty fallback.
            return "R " + decimal(c.pos);
        }
        std::string operator()(const DeleteLine& c) const {
            return "D " + decimal(c.pos);
        }
    };
    return std::visit(Visitor{}, cmd);
}

std::string format_trace(std::span<const Command> cmds) {
    std::string out;
    for (const Command& cmd : cmds) {
        out += format_command(cmd);
        out += '\n';
    }
    return out;
}

std::variant<Command, std::string> parse_trace_line(std::string_view line) {
    if (line.size() < 2 || line[1] != ' ')
        return std::string("expected 'I', 'R' or 'D' followed by a space");
    const char kind = line[0];
    std::string_view rest = line.substr(2);
    switch (kind) {
    case 'I': {
        // "I <pos>" with no trailing text is an empty-line insert.
        std::string_view pos_part = rest;
        std::string_view text;
        if (auto space = rest.find(' '); space != std::string_view::npos) {
            pos_part = rest.substr(0, space);
            text = rest.substr(space + 1);
        }
        LineIndex pos = 0;
        if (!parse_pos(pos_part, pos))
            return std::string("bad position in insert command");
        return Command(InsertLine{pos, Line(text)});
    }
    case 'R': {
        LineIndex pos = 0;
        if (!parse_pos(rest, pos))
            return std::string("bad position in read command");
        return Command(ReadLine{pos, Line()});
    }
    case 'D': {
        LineIndex pos = 0;
        if (!parse_pos(rest, pos))
            return std::string("bad position in delete command");
        return Command(DeleteLine{pos});
    }
    default:
        return std::string("unknown command kind");
    }
}

std::variant<std::vector<Command>, TraceParseError> parse_trace(std::string_view text) {
    std::vector<Command> cmds;
    std::size_t line_number = 0;
    while (!text.empty()) {
        ++line_number;
        std::string_view line = text;
        if (auto nl = text.find('\n'); nl != std::string_view::npos) {
            line = text.substr(0, nl);
            text = text.substr(nl + 1);
        } else {
            text = {};
        }
        auto parsed = parse_trace_line(line);
        if (auto* err = std::get_if<std::string>(&parsed))
            return TraceParseError{line_number, *err};
        cmds.push_back(std::move(std::get<Command>(parsed)));
    }
    return cmds;
}

} // namespace veredit
