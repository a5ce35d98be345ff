#include "veredit/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace veredit {

namespace {

bool all_digits(std::string_view text) {
    return !text.empty() &&
           std::all_of(text.begin(), text.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

ParseResult error(std::string_view input) {
    return ParseError{std::string(input)};
}

} // namespace

ParseResult parse_line(std::string_view input, ParserMode mode) {
    if (mode == ParserMode::Insert) {
        if (input == ".")
            return ReplCommand(EndInsert{});
        return ReplCommand(InsertText{Line(input)});
    }

    if (input.empty())
        return ReplCommand(Empty{});

    if (all_digits(input)) {
        std::size_t address = 0;
        auto [ptr, ec] = std::from_chars(input.data(), input.data() + input.size(), address);
        if (ec != std::errc() || ptr != input.data() + input.size())
            return error(input); // overflow
        if (address == 0)
            return error(input); // addressing is 1-based
        return ReplCommand(SetAddress{address});
    }

    if (input == "i")
        return ReplCommand(EnterInsert{});
    if (input == "a")
        return ReplCommand(EnterAppend{});
    if (input == "d")
        return ReplCommand(DeleteCurrent{});
    if (input == "n")
        return ReplCommand(PrintNumbered{});
    if (input == "p")
        return ReplCommand(PrintPlain{});
    if (input == "q")
        return ReplCommand(Quit{});
    if (input == "w")
        return ReplCommand(WriteFile{std::nullopt});
    if (input.size() > 2 && input.substr(0, 2) == "w ")
        return ReplCommand(WriteFile{std::string(input.substr(2))});

    return error(input);
}

} // namespace veredit
