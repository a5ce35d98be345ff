#include <doctest.h>

#include <algorithm>

#include "support/test_util.hpp"
#include "veredit/harness/generators.hpp"

using namespace veredit;
using namespace veredit::harness;

TEST_CASE("equal seeds give equal streams") {
    Rng a(123), b(123), c(124);
    bool any_difference = false;
    for (int i = 0; i < 100; ++i) {
        const auto va = a.next_u64();
        CHECK(va == b.next_u64());
        any_difference = any_difference || va != c.next_u64();
    }
    CHECK(any_difference);

    Rng g1(9), g2(9);
    for (int i = 0; i < 50; ++i)
        CHECK(gen_line(g1, 12) == gen_line(g2, 12));
}

TEST_CASE("derived seeds separate streams and indices") {
    CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 2, 4));
    CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 3));
    CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}

TEST_CASE("generated lines are valid and cover the interesting shapes") {
    Rng rng(7);
    int empty = 0, whitespace_only = 0, multibyte = 0;
    for (int i = 0; i < 2000; ++i) {
        const Line line = gen_line(rng, 10);
        const std::string& text = line.content();
        CHECK(text.find('\n') == std::string::npos);
        if (text.empty())
            ++empty;
        else if (text.find_first_not_of(" \t") == std::string::npos)
            ++whitespace_only;
        if (std::any_of(text.begin(), text.end(),
                        [](unsigned char c) { return c >= 0x80; }))
            ++multibyte;
    }
    CHECK(empty > 50);
    CHECK(whitespace_only > 50);
    CHECK(multibyte > 200);
}

TEST_CASE("position generators respect their bounds") {
    Rng rng(11);
    bool hit_upper = false;
    for (int i = 0; i < 2000; ++i) {
        CHECK(gen_pos_at_most(rng, 5) <= 5);
        const LineIndex p = gen_pos_with_slack(rng, 10, 6);
        CHECK(p <= 16);
        hit_upper = hit_upper || p > 10;
    }
    CHECK(hit_upper); // slack positions actually reach past the end
    CHECK(gen_pos_at_most(rng, 0) == 0);
}

TEST_CASE("traces have the requested length and replay deterministically") {
    const TraceSpec spec{555, 80, 8, 8};
    Rng r1(spec.seed), r2(spec.seed);
    const auto t1 = gen_trace(r1, spec);
    const auto t2 = gen_trace(r2, spec);
    CHECK(t1.size() == 80);
    CHECK(t1 == t2);

    // traces contain all three command kinds
    bool has_insert = false, has_read = false, has_delete = false;
    for (const Command& cmd : t1) {
        has_insert = has_insert || std::holds_alternative<InsertLine>(cmd);
        has_read = has_read || std::holds_alternative<ReadLine>(cmd);
        has_delete = has_delete || std::holds_alternative<DeleteLine>(cmd);
    }
    CHECK(has_insert);
    CHECK(has_read);
    CHECK(has_delete);
}
