#include "veredit/harness/properties.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>

namespace veredit::harness {

namespace {

constexpr std::size_t kMaxBufferLines = 16;

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// One generated case: returns a counterexample description, or nothing.
using CaseFn = std::function<std::optional<std::string>(Rng&)>;

PropertyReport run_property(std::string name, std::uint64_t seed, std::size_t cases,
                            const CaseFn& case_fn) {
    PropertyReport report{std::move(name), cases, {}};
    const std::uint64_t stream = fnv1a(report.property_name);
    std::vector<std::optional<std::string>> outcomes(cases);

    // Cases are independent; the merge below walks them in index order, so
    // the report does not depend on scheduling.
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(cases); ++i) {
        Rng rng(derive_seed(seed, stream, static_cast<std::uint64_t>(i)));
        outcomes[static_cast<std::size_t>(i)] = case_fn(rng);
    }

    for (std::size_t i = 0; i < cases; ++i) {
        if (outcomes[i])
            report.failures.push_back({derive_seed(seed, stream, i), *outcomes[i]});
    }
    return report;
}

LineIndex gen_out_of_range_pos(Rng& rng, std::size_t len, std::size_t slack) {
    if (rng.chance(10))
        return std::numeric_limits<LineIndex>::max() - rng.at_most(2);
    return len + rng.at_most(slack);
}

} // namespace

bool check_lemma_1(const Buffer& l, LineIndex n) {
    if (n > l.size())
        return true;
    return first_n(l, n).size() == n;
}

bool check_thm_1(LineIndex n, const Buffer& l1, const Buffer& l2, const Line& s,
                 const Line& d) {
    if (n > l1.size())
        return true;
    Buffer combined = first_n(l1, n);
    combined.push_back(s);
    combined.insert(combined.end(), l2.begin(), l2.end());
    return read_line(combined, n, d) == s;
}

bool check_can_insert(const Line& s, LineIndex n) {
    const EvalResult r = editor_eval(Command(InsertLine{n, s}), Buffer{});
    return r.buffer == Buffer{s};
}

bool check_can_read(const Line& s, LineIndex n, const Buffer& b) {
    if (n > b.size())
        return true;
    const EvalResult inserted = editor_eval(Command(InsertLine{n, s}), b);
    const EvalResult read = editor_eval(Command(ReadLine{n, Line()}), inserted.buffer);
    return read.output == s;
}

bool check_can_change(const Line& s2, LineIndex n, const Buffer& b) {
    if (n > b.size())
        return true;
    const EvalResult deleted = editor_eval(Command(DeleteLine{n}), b);
    const EvalResult inserted = editor_eval(Command(InsertLine{n, s2}), deleted.buffer);
    const EvalResult read = editor_eval(Command(ReadLine{n, Line()}), inserted.buffer);
    return read.output == s2;
}

std::vector<PropertyReport> run_property_suite(const TraceSpec& spec, std::size_t cases) {
    const std::size_t line_len = spec.max_line_len;
    std::vector<PropertyReport> reports;

    reports.push_back(run_property(
        "can_insert_text", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Line s = gen_line(rng, line_len);
            const LineIndex n = gen_wild_pos(rng);
            if (check_can_insert(s, n))
                return std::nullopt;
            return "insert of s=" + render_line(s) + " at n=" + std::to_string(n) +
                   " into the empty buffer is not the singleton";
        }));

    reports.push_back(run_property(
        "can_read_text", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, b.size());
            const Line s = gen_line(rng, line_len);
            if (check_can_read(s, n, b))
                return std::nullopt;
            return "read-after-insert of s=" + render_line(s) + " at n=" + std::to_string(n) +
                   " into b=" + render_buffer(b) + " did not return s";
        }));

    reports.push_back(run_property(
        "can_change_text", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, b.size());
            const Line s2 = gen_line(rng, line_len);
            if (check_can_change(s2, n, b))
                return std::nullopt;
            return "delete-then-insert of s2=" + render_line(s2) + " at n=" +
                   std::to_string(n) + " into b=" + render_buffer(b) +
                   " did not read back as s2";
        }));

    reports.push_back(run_property(
        "lemma_1", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer l = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, l.size());
            if (check_lemma_1(l, n))
                return std::nullopt;
            return "|first_n(l, n)| != n for l=" + render_buffer(l) +
                   ", n=" + std::to_string(n);
        }));

    reports.push_back(run_property(
        "thm_1", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer l1 = gen_buffer(rng, kMaxBufferLines, line_len);
            const Buffer l2 = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, l1.size());
            const Line s = gen_line(rng, line_len);
            const Line d = gen_line(rng, line_len);
            if (check_thm_1(n, l1, l2, s, d))
                return std::nullopt;
            return "element n of first_n(l1, n) ++ [s] ++ l2 is not s for n=" +
                   std::to_string(n) + ", l1=" + render_buffer(l1) +
                   ", l2=" + render_buffer(l2) + ", s=" + render_line(s) +
                   ", d=" + render_line(d);
        }));

    return reports;
}

std::vector<PropertyReport> run_clamping_suite(const TraceSpec& spec, std::size_t cases) {
    const std::size_t line_len = spec.max_line_len;
    const std::size_t slack = spec.max_pos_slack;
    std::vector<PropertyReport> reports;

    reports.push_back(run_property(
        "insert_past_end_appends", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex pos = gen_out_of_range_pos(rng, b.size(), slack);
            const Line s = gen_line(rng, line_len);
            Buffer expected = b;
            expected.push_back(s);
            if (insert_line(b, pos, s) == expected)
                return std::nullopt;
            return "insert at pos=" + std::to_string(pos) + " into b=" + render_buffer(b) +
                   " is not append-at-end";
        }));

    reports.push_back(run_property(
        "delete_past_end_is_noop", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex pos = gen_out_of_range_pos(rng, b.size(), slack);
            if (delete_line(b, pos) == b)
                return std::nullopt;
            return "delete at pos=" + std::to_string(pos) + " changed b=" + render_buffer(b);
        }));

    reports.push_back(run_property(
        "read_past_end_yields_fallback", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex pos = gen_out_of_range_pos(rng, b.size(), slack);
            const Line d = gen_line(rng, line_len);
            if (read_line(b, pos, d) == d)
                return std::nullopt;
            return "read at pos=" + std::to_string(pos) + " of b=" + render_buffer(b) +
                   " did not return the fallback";
        }));

    return reports;
}

std::vector<PropertyReport> run_structural_suite(const TraceSpec& spec, std::size_t cases) {
    const std::size_t line_len = spec.max_line_len;
    const std::size_t slack = spec.max_pos_slack;
    std::vector<PropertyReport> reports;

    reports.push_back(run_property(
        "partition", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_with_slack(rng, b.size(), slack);
            Buffer joined = first_n(b, n);
            const Buffer tail = skip_n(b, n);
            joined.insert(joined.end(), tail.begin(), tail.end());
            if (joined == b)
                return std::nullopt;
            return "first_n ++ skip_n != b for b=" + render_buffer(b) +
                   ", n=" + std::to_string(n);
        }));

    reports.push_back(run_property(
        "insert_grows_by_one", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex pos = rng.chance(85)
                                      ? gen_pos_with_slack(rng, b.size(), slack)
                                      : gen_wild_pos(rng);
            const Line s = gen_line(rng, line_len);
            if (insert_line(b, pos, s).size() == b.size() + 1)
                return std::nullopt;
            return "|insert_line(b, pos, s)| != |b| + 1 for pos=" + std::to_string(pos) +
                   ", b=" + render_buffer(b);
        }));

    reports.push_back(run_property(
        "delete_shrinks_by_one_in_range", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex pos = gen_pos_with_slack(rng, b.size(), slack);
            const std::size_t expected = pos < b.size() ? b.size() - 1 : b.size();
            if (delete_line(b, pos).size() == expected)
                return std::nullopt;
            return "|delete_line(b, pos)| wrong for pos=" + std::to_string(pos) +
                   ", b=" + render_buffer(b);
        }));

    reports.push_back(run_property(
        "insert_delete_inverse", spec.seed, cases,
        [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, b.size());
            const Line s = gen_line(rng, line_len);
            if (delete_line(insert_line(b, n, s), n) == b)
                return std::nullopt;
            return "delete_line(insert_line(b, n, s), n) != b for n=" + std::to_string(n) +
                   ", s=" + render_line(s) + ", b=" + render_buffer(b);
        }));

    reports.push_back(run_property(
        "insert_frame", spec.seed, cases, [=](Rng& rng) -> std::optional<std::string> {
            const Buffer b = gen_buffer(rng, kMaxBufferLines, line_len);
            const LineIndex n = gen_pos_at_most(rng, b.size());
            const Line s = gen_line(rng, line_len);
            const Line d = gen_line(rng, line_len);
            const Buffer after = insert_line(b, n, s);
            for (std::size_t j = 0; j < after.size(); ++j) {
                if (j == n)
                    continue;
                const Line expected = j < n ? read_line(b, j, d) : read_line(b, j - 1, d);
                if (read_line(after, j, d) != expected)
                    return "insert at n=" + std::to_string(n) + " disturbed position " +
                           std::to_string(j) + " of b=" + render_buffer(b);
            }
            return std::nullopt;
        }));

    return reports;
}

std::string render_line(const Line& line) {
    std::string out = "\"";
    for (unsigned char c : line.content()) {
        switch (c) {
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        case '\\': out += "\\\\"; break;
        case '"': out += "\\\""; break;
        default:
            if (c < 0x20) {
                static const char* hex = "0123456789abcdef";
                out += "\\x";
                out += hex[c >> 4];
                out += hex[c & 0xf];
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    out += '"';
    return out;
}

std::string render_buffer(const Buffer& b) {
    std::string out = "[";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += render_line(b[i]);
    }
    out += ']';
    return out;
}

} // namespace veredit::harness
