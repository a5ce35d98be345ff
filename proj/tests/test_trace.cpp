#include <doctest.h>

#include <string>
#include <vector>

#include "support/test_util.hpp"
#include "veredit/harness/generators.hpp"
#include "veredit/trace.hpp"

using namespace veredit;

TEST_CASE("commands serialize one per line") {
    CHECK(format_command(Command(InsertLine{0, ln("hi")})) == "I 0 hi");
    CHECK(format_command(Command(InsertLine{3, ln("a b  c")})) == "I 3 a b  c");
    CHECK(format_command(Command(InsertLine{5, ln("")})) == "I 5 ");
    CHECK(format_command(Command(ReadLine{7, ln("ignored")})) == "R 7");
    CHECK(format_command(Command(DeleteLine{2})) == "D 2");

    const std::vector<Command> cmds{InsertLine{0, ln("a")}, ReadLine{0, ln("")},
                                    DeleteLine{0}};
    CHECK(format_trace(cmds) == "I 0 a\nR 0\nD 0\n");
    CHECK(format_trace({}) == "");
}

TEST_CASE("trace lines parse back") {
    CHECK(parse_trace_line("I 0 hi") == std::variant<Command, std::string>(
                                            Command(InsertLine{0, ln("hi")})));
    CHECK(parse_trace_line("I 5 ") ==
          std::variant<Command, std::string>(Command(InsertLine{5, ln("")})));
    // no trailing separator also means empty text
    CHECK(parse_trace_line("I 5") ==
          std::variant<Command, std::string>(Command(InsertLine{5, ln("")})));
    CHECK(parse_trace_line("R 7") ==
          std::variant<Command, std::string>(Command(ReadLine{7, ln("")})));
    CHECK(parse_trace_line("D 2") ==
          std::variant<Command, std::string>(Command(DeleteLine{2})));
}

TEST_CASE("malformed trace lines are rejected") {
    auto is_error = [](std::string_view line) {
        return std::holds_alternative<std::string>(parse_trace_line(line));
    };
    CHECK(is_error(""));
    CHECK(is_error("I"));
    CHECK(is_error("X 1"));
    CHECK(is_error("I x y"));
    CHECK(is_error("R "));
    CHECK(is_error("R 1 x"));
    CHECK(is_error("D -1"));
    CHECK(is_error("R 99999999999999999999999999")); // overflow
    CHECK(is_error("i 0 lowercase kind"));
}

TEST_CASE("parse_trace reports the offending line number") {
    const auto parsed = parse_trace("I 0 ok\nR 1\nbogus\nD 0\n");
    REQUIRE(std::holds_alternative<TraceParseError>(parsed));
    CHECK(std::get<TraceParseError>(parsed).line_number == 3);
}

TEST_CASE("generated traces round-trip through the text format") {
    harness::Rng rng(4242);
    const harness::TraceSpec spec{4242, 120, 10, 8};
    for (int i = 0; i < 50; ++i) {
        const std::vector<Command> cmds = harness::gen_trace(rng, spec);
        const auto parsed = parse_trace(format_trace(cmds));
        REQUIRE(std::holds_alternative<std::vector<Command>>(parsed));
        REQUIRE(std::get<std::vector<Command>>(parsed) == cmds);
    }
}
