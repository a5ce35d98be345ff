#include <doctest.h>

#include <string>

#include "support/test_util.hpp"
#include "veredit/harness/generators.hpp"
#include "veredit/parser.hpp"

using namespace veredit;

namespace {

ReplCommand parsed(std::string_view input, ParserMode mode) {
    const ParseResult result = parse_line(input, mode);
    REQUIRE(std::holds_alternative<ReplCommand>(result));
    return std::get<ReplCommand>(result);
}

bool is_error(std::string_view input, ParserMode mode) {
    return std::holds_alternative<ParseError>(parse_line(input, mode));
}

} // namespace

TEST_CASE("command mode maps the single-letter grammar") {
    CHECK(parsed("i", ParserMode::Command) == ReplCommand(EnterInsert{}));
    CHECK(parsed("a", ParserMode::Command) == ReplCommand(EnterAppend{}));
    CHECK(parsed("d", ParserMode::Command) == ReplCommand(DeleteCurrent{}));
    CHECK(parsed("n", ParserMode::Command) == ReplCommand(PrintNumbered{}));
    CHECK(parsed("p", ParserMode::Command) == ReplCommand(PrintPlain{}));
    CHECK(parsed("q", ParserMode::Command) == ReplCommand(Quit{}));
    CHECK(parsed("w", ParserMode::Command) == ReplCommand(WriteFile{std::nullopt}));
    CHECK(parsed("w out.txt", ParserMode::Command) ==
          ReplCommand(WriteFile{std::string("out.txt")}));
    CHECK(parsed("w path with spaces", ParserMode::Command) ==
          ReplCommand(WriteFile{std::string("path with spaces")}));
    CHECK(parsed("", ParserMode::Command) == ReplCommand(Empty{}));
}

TEST_CASE("addresses are 1-based decimal") {
    CHECK(parsed("1", ParserMode::Command) == ReplCommand(SetAddress{1}));
    CHECK(parsed("42", ParserMode::Command) == ReplCommand(SetAddress{42}));
    CHECK(parsed("007", ParserMode::Command) == ReplCommand(SetAddress{7}));
    CHECK(is_error("0", ParserMode::Command));
    CHECK(is_error("000", ParserMode::Command));
    CHECK(is_error("99999999999999999999999999", ParserMode::Command)); // overflow
    CHECK(is_error("1x", ParserMode::Command));
    CHECK(is_error("-1", ParserMode::Command));
}

TEST_CASE("unknown or sloppy commands are errors") {
    CHECK(is_error("zz", ParserMode::Command));
    CHECK(is_error(" i", ParserMode::Command));
    CHECK(is_error("i ", ParserMode::Command));
    CHECK(is_error("w ", ParserMode::Command)); // separator without a path
    CHECK(is_error("q!", ParserMode::Command));
    CHECK(is_error("Hello World!", ParserMode::Command));

    const ParseResult result = parse_line("zz", ParserMode::Command);
    CHECK(std::get<ParseError>(result).input == "zz");
}

TEST_CASE("insert mode is literal except for the terminator") {
    CHECK(parsed(".", ParserMode::Insert) == ReplCommand(EndInsert{}));
    CHECK(parsed("Hello World!", ParserMode::Insert) ==
          ReplCommand(InsertText{ln("Hello World!")}));
    // commands and addresses are plain text while inserting
    CHECK(parsed("i", ParserMode::Insert) == ReplCommand(InsertText{ln("i")}));
    CHECK(parsed("42", ParserMode::Insert) == ReplCommand(InsertText{ln("42")}));
    CHECK(parsed("..", ParserMode::Insert) == ReplCommand(InsertText{ln("..")}));
    CHECK(parsed("", ParserMode::Insert) == ReplCommand(InsertText{ln("")}));
}

TEST_CASE("modes never leak each other's variants") {
    harness::Rng rng(919);
    for (int i = 0; i < 1000; ++i) {
        const std::string input = harness::gen_line(rng, 12).content();

        const ParseResult command = parse_line(input, ParserMode::Command);
        if (const auto* cmd = std::get_if<ReplCommand>(&command)) {
            CHECK_FALSE(std::holds_alternative<InsertText>(*cmd));
            CHECK_FALSE(std::holds_alternative<EndInsert>(*cmd));
        }

        const ParseResult insert = parse_line(input, ParserMode::Insert);
        REQUIRE(std::holds_alternative<ReplCommand>(insert)); // insert mode is total
        const auto& cmd = std::get<ReplCommand>(insert);
        CHECK((std::holds_alternative<InsertText>(cmd) ||
               std::holds_alternative<EndInsert>(cmd)));
    }
}
