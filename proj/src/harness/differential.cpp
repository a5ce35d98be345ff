#include "veredit/harness/differential.hpp"

#include <cstdint>
#include <utility>

#include "veredit/trace.hpp"

namespace veredit::harness {

namespace {

constexpr std::uint64_t kDifferentialStream = 0x64696666ULL; // stream tag

std::string describe_lines_mismatch(const Buffer& expected, const Buffer& got) {
    if (expected.size() != got.size())
        return "line count " + std::to_string(got.size()) + ", reference has " +
               std::to_string(expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (expected[i] != got[i])
            return "line " + std::to_string(i) + " is " + render_line(got[i]) +
                   ", reference has " + render_line(expected[i]);
    }
    return "buffers match"; // unreachable when called on a mismatch
}

std::string command_text(const Command& cmd) {
    return format_command(cmd);
}

} // namespace

std::optional<Divergence> check_trace(std::span<const Command> trace, BufferBackend& backend) {
    backend.reset({});
    Buffer reference;
    for (std::size_t step = 0; step < trace.size(); ++step) {
        const Command& cmd = trace[step];
        EvalResult expected = editor_eval(cmd, reference);
        reference = std::move(expected.buffer);
        const Line output = backend.apply(cmd);
        if (output != expected.output)
            return Divergence{step, std::string(backend.name()),
                              "after '" + command_text(cmd) + "': output " +
                                  render_line(output) + ", reference output " +
                                  render_line(expected.output)};
        const Buffer lines = backend.lines();
        if (lines != reference)
            return Divergence{step, std::string(backend.name()),
                              "after '" + command_text(cmd) + "': " +
                                  describe_lines_mismatch(reference, lines)};
    }
    return std::nullopt;
}

namespace {

bool trace_fails(std::span<const Command> trace, const BackendFactory& make) {
    auto backend = make();
    return check_trace(trace, *backend).has_value();
}

// Smaller-position candidates, strongest simplification first.
std::vector<LineIndex> position_candidates(LineIndex pos) {
    std::vector<LineIndex> cands;
    if (pos > 0)
        cands.push_back(0);
    if (pos > 1)
        cands.push_back(pos / 2);
    if (pos > 0)
        cands.push_back(pos - 1);
    return cands;
}

Command with_position(const Command& cmd, LineIndex pos) {
    struct Visitor {
        LineIndex pos;
        Command operator()(const InsertLine& c) const { return InsertLine{pos, c.text}; }
        Command operator()(const ReadLine& c) const { return ReadLine{pos, c.fallback}; }
        Command operator()(const DeleteLine&) const { return DeleteLine{pos}; }
    };
    return std::visit(Visitor{pos}, cmd);
}

LineIndex position_of(const Command& cmd) {
    return std::visit([](const auto& c) { return c.pos; }, cmd);
}

bool remove_pass(std::vector<Command>& trace, const BackendFactory& make) {
    bool changed = false;
    for (std::size_t i = 0; i < trace.size();) {
        std::vector<Command> candidate = trace;
        candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
        if (trace_fails(candidate, make)) {
            trace = std::move(candidate);
            changed = true;
        } else {
            ++i;
        }
    }
    return changed;
}

// Removing an insert shifts everything behind it one slot left; dropping the
// command and decrementing later positions together lets insert chains
// collapse where plain removal would push a trailing command out of range.
// Candidates are re-checked, so the transformation only has to be useful,
// not semantics-preserving.
bool remove_insert_shift_pass(std::vector<Command>& trace, const BackendFactory& make) {
    bool changed = false;
    for (std::size_t i = 0; i < trace.size();) {
        const auto* ins = std::get_if<InsertLine>(&trace[i]);
        if (!ins) {
            ++i;
            continue;
        }
        std::vector<Command> candidate;
        candidate.reserve(trace.size() - 1);
        for (std::size_t j = 0; j < trace.size(); ++j) {
            if (j == i)
                continue;
            const LineIndex pos = position_of(trace[j]);
            if (j > i && pos > ins->pos)
                candidate.push_back(with_position(trace[j], pos - 1));
            else
                candidate.push_back(trace[j]);
        }
        if (trace_fails(candidate, make)) {
            trace = std::move(candidate);
            changed = true;
        } else {
            ++i;
        }
    }
    return changed;
}

bool simplify_pass(std::vector<Command>& trace, const BackendFactory& make) {
    bool changed = false;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        for (LineIndex pos : position_candidates(position_of(trace[i]))) {
            std::vector<Command> candidate = trace;
            candidate[i] = with_position(trace[i], pos);
            if (trace_fails(candidate, make)) {
                trace = std::move(candidate);
                changed = true;
                break;
            }
        }
        if (auto* ins = std::get_if<InsertLine>(&trace[i]); ins && !ins->text.empty()) {
            std::vector<Command> candidate = trace;
            candidate[i] = InsertLine{ins->pos, Line()};
            if (trace_fails(candidate, make)) {
                trace = std::move(candidate);
                changed = true;
            }
        }
    }
    return changed;
}

} // namespace

std::vector<Command> shrink_trace(std::vector<Command> trace, const BackendFactory& make) {
    if (!trace_fails(trace, make))
        return trace;
    bool changed = true;
    while (changed) {
        changed = false;
        while (remove_pass(trace, make))
            changed = true;
        if (remove_insert_shift_pass(trace, make))
            changed = true;
        if (simplify_pass(trace, make))
            changed = true;
    }
    return trace;
}

PropertyReport run_differential(const TraceSpec& spec,
                                std::span<const BackendFactory> backends,
                                std::size_t num_traces,
                                std::vector<FailingTrace>* captured) {
    PropertyReport report{"differential", num_traces, {}};

    struct BackendFailure {
        std::size_t backend_index;
        Divergence divergence;
    };
    std::vector<std::vector<BackendFailure>> outcomes(num_traces);

    // Each trace gets its own derived seed and its own backend instances, so
    // traces are independent; the ordered merge keeps reports deterministic.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(num_traces); ++t) {
        const std::uint64_t trace_seed =
            derive_seed(spec.seed, kDifferentialStream, static_cast<std::uint64_t>(t));
        TraceSpec local = spec;
        local.seed = trace_seed;
        Rng rng(trace_seed);
        const std::vector<Command> trace = gen_trace(rng, local);
        for (std::size_t b = 0; b < backends.size(); ++b) {
            auto backend = backends[b]();
            if (auto divergence = check_trace(trace, *backend))
                outcomes[static_cast<std::size_t>(t)].push_back(
                    {b, std::move(*divergence)});
        }
    }

    bool shrunk_one = false;
    for (std::size_t t = 0; t < num_traces; ++t) {
        const std::uint64_t trace_seed = derive_seed(spec.seed, kDifferentialStream, t);
        for (const BackendFailure& failure : outcomes[t]) {
            std::string description = "trace " + std::to_string(t) + " on '" +
                                      failure.divergence.backend_name + "' diverged at step " +
                                      std::to_string(failure.divergence.step) + ": " +
                                      failure.divergence.detail;
            if (!shrunk_one) {
                // Only the first counterexample is shrunk; the rest are
                // reported as found to keep the runtime bounded.
                shrunk_one = true;
                TraceSpec local = spec;
                local.seed = trace_seed;
                Rng rng(trace_seed);
                std::vector<Command> shrunk =
                    shrink_trace(gen_trace(rng, local), backends[failure.backend_index]);
                description += "; shrunk to " + std::to_string(shrunk.size()) + " command(s)";
                if (captured)
                    captured->push_back({trace_seed, failure.divergence.backend_name,
                                         std::move(shrunk)});
            }
            report.failures.push_back({trace_seed, std::move(description)});
        }
    }
    return report;
}

} // namespace veredit::harness
