#include "veredit/harness/generators.hpp"

#include <array>
#include <limits>
#include <string>
#include <string_view>

namespace veredit::harness {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// UTF-8 encoded code points the line generator draws from. Includes ASCII
// punctuation that is meaningful to the trace format and the command
// grammar (spaces, digits, 'I', '.', '?') so those never get special-cased
// by accident anywhere in the pipeline.
constexpr std::array<std::string_view, 48> kAlphabet = {
    "a", "b", "c", "x", "y", "z", "A", "Z", "0", "1", "9",
    " ", "\t", ".", ",", "?", "!", "-", "_", "/", "\\", "\"", "'",
    "i", "d", "n", "q", "w", "I", "R", "D",
    "(", ")", "#", "@", "~",
    "\r",                             // carriage return is content, not a line break
    "é", "ß", "λ", "Ω", "中", "日", "→", "…", "🙂", "𝄞", "€",
};

constexpr std::array<std::string_view, 2> kWhitespace = {" ", "\t"};

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(seed ^ 0x5cf2ba21025e41d3ULL) ^ splitmix64(stream) ^ index);
}

Line gen_line(Rng& rng, std::size_t max_len) {
    if (max_len == 0 || rng.chance(10))
        return Line();
    std::string content;
    const std::size_t len = 1 + rng.below(max_len);
    if (rng.chance(10)) {
        for (std::size_t i = 0; i < len; ++i)
            content += kWhitespace[rng.below(kWhitespace.size())];
    } else {
        for (std::size_t i = 0; i < len; ++i)
            content += kAlphabet[rng.below(kAlphabet.size())];
    }
    return Line(std::move(content));
}

Buffer gen_buffer(Rng& rng, std::size_t max_lines, std::size_t max_line_len) {
    Buffer b;
    const std::size_t count = rng.at_most(max_lines);
    b.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        b.push_back(gen_line(rng, max_line_len));
    return b;
}

LineIndex gen_pos_at_most(Rng& rng, std::size_t bound) {
    return rng.at_most(bound);
}

LineIndex gen_pos_with_slack(Rng& rng, std::size_t len, std::size_t slack) {
    return rng.at_most(len + slack);
}

LineIndex gen_wild_pos(Rng& rng) {
    const auto roll = rng.below(100);
    if (roll < 60)
        return rng.at_most(24);
    if (roll < 90)
        return rng.below(1'000'000);
    if (roll < 97)
        return rng.next_u64() >> 16;
    return std::numeric_limits<LineIndex>::max() - rng.at_most(2);
}

std::vector<Command> gen_trace(Rng& rng, const TraceSpec& spec) {
    std::vector<Command> cmds;
    cmds.reserve(spec.num_commands);
    std::size_t size = 0; // line count under reference semantics
    for (std::size_t i = 0; i < spec.num_commands; ++i) {
        const LineIndex pos = gen_pos_with_slack(rng, size, spec.max_pos_slack);
        const auto roll = rng.below(100);
        if (roll < 40) {
            cmds.emplace_back(InsertLine{pos, gen_line(rng, spec.max_line_len)});
            ++size;
        } else if (roll < 70) {
            cmds.emplace_back(ReadLine{pos, Line()});
        } else {
            cmds.emplace_back(DeleteLine{pos});
            if (pos < size)
                --size;
        }
    }
    return cmds;
}

} // namespace veredit::harness
