#include <doctest.h>

#include <algorithm>
#include <limits>

#include "support/test_util.hpp"
#include "veredit/buffer.hpp"
#include "veredit/harness/generators.hpp"

using namespace veredit;

namespace {

constexpr LineIndex kMax = std::numeric_limits<LineIndex>::max();

// Independent oracle: plain index arithmetic on std::vector, no sharing with
// the first_n/skip_n construction the real operations use.
Buffer naive_first(const Buffer& b, LineIndex n) {
    Buffer out;
    for (std::size_t i = 0; i < b.size() && i < n; ++i)
        out.push_back(b[i]);
    return out;
}

Buffer naive_skip(const Buffer& b, LineIndex n) {
    Buffer out;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (i >= n)
            out.push_back(b[i]);
    return out;
}

Buffer naive_insert(Buffer b, LineIndex pos, const Line& s) {
    const auto at = std::min<std::size_t>(pos, b.size());
    b.insert(b.begin() + static_cast<std::ptrdiff_t>(at), s);
    return b;
}

Buffer naive_delete(Buffer b, LineIndex pos) {
    if (pos < b.size())
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(pos));
    return b;
}

} // namespace

TEST_CASE("Line rejects newlines and keeps everything else") {
    CHECK_THROWS_AS(Line("two\nlines"), std::invalid_argument);
    CHECK_THROWS_AS(Line("\n"), std::invalid_argument);
    CHECK(Line().content().empty());
    CHECK(Line("héllo → 🙂").content() == "héllo → 🙂");
    CHECK(Line("with\rreturn").content() == "with\rreturn");
    CHECK(Line("a\tb") == Line("a\tb"));
}

TEST_CASE("first_n takes a clamped prefix") {
    CHECK(first_n(buf({"a", "b", "c"}), 2) == buf({"a", "b"}));
    CHECK(first_n(buf({}), 5) == buf({}));
    CHECK(first_n(buf({"a"}), 0) == buf({}));
    CHECK(first_n(buf({"a", "b"}), kMax) == buf({"a", "b"}));
}

TEST_CASE("skip_n drops a clamped prefix") {
    CHECK(skip_n(buf({"a", "b", "c"}), 1) == buf({"b", "c"}));
    CHECK(skip_n(buf({"a"}), 7) == buf({}));
    CHECK(skip_n(buf({"a", "b"}), 0) == buf({"a", "b"}));
}

TEST_CASE("read_line returns the fallback out of range") {
    CHECK(read_line(buf({"x", "y"}), 1, ln("z")) == ln("y"));
    CHECK(read_line(buf({}), 0, ln("z")) == ln("z"));
    CHECK(read_line(buf({"x"}), 5, ln("")) == ln(""));
    CHECK(read_line(buf({"x"}), kMax, ln("d")) == ln("d"));
}

TEST_CASE("insert_line splices and appends past the end") {
    CHECK(insert_line(buf({"a", "b"}), 1, ln("x")) == buf({"a", "x", "b"}));
    CHECK(insert_line(buf({}), 3, ln("x")) == buf({"x"}));
    CHECK(insert_line(buf({"a"}), 9, ln("x")) == buf({"a", "x"}));
    CHECK(insert_line(buf({"a"}), kMax, ln("x")) == buf({"a", "x"}));
}

TEST_CASE("delete_line removes in range and is a no-op past the end") {
    CHECK(delete_line(buf({"a", "b", "c"}), 1) == buf({"a", "c"}));
    CHECK(delete_line(buf({}), 0) == buf({}));
    CHECK(delete_line(buf({"a"}), 7) == buf({"a"}));
    // pos + 1 must not wrap around
    CHECK(delete_line(buf({"a"}), kMax) == buf({"a"}));
    CHECK(delete_line(buf({"a", "b"}), kMax - 1) == buf({"a", "b"}));
}

TEST_CASE("operations never mutate their input") {
    const Buffer b = buf({"a", "b", "c"});
    const Buffer copy = b;
    (void)first_n(b, 2);
    (void)skip_n(b, 2);
    (void)read_line(b, 1, ln("d"));
    (void)insert_line(b, 1, ln("x"));
    (void)delete_line(b, 1);
    CHECK(b == copy);
}

TEST_CASE("operations agree with a naive splice oracle on random inputs") {
    harness::Rng rng(20240601);
    for (int i = 0; i < 500; ++i) {
        const Buffer b = harness::gen_buffer(rng, 12, 8);
        const LineIndex pos = harness::gen_pos_with_slack(rng, b.size(), 16);
        const Line s = harness::gen_line(rng, 8);
        CAPTURE(b);
        CAPTURE(pos);
        REQUIRE(first_n(b, pos) == naive_first(b, pos));
        REQUIRE(skip_n(b, pos) == naive_skip(b, pos));
        REQUIRE(insert_line(b, pos, s) == naive_insert(b, pos, s));
        REQUIRE(delete_line(b, pos) == naive_delete(b, pos));
    }
}
