#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "veredit/commands.hpp"

namespace veredit::harness {

/// Deterministic random source. mt19937_64 has a standard-mandated output
/// sequence and all bounding below is hand-rolled, so streams are identical
/// across platforms and standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform-ish value in [0, bound); bound must be nonzero. Modulo bias
    /// is irrelevant at test-case scale.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    /// Uniform-ish value in [0, bound] inclusive.
    std::uint64_t at_most(std::uint64_t bound) { return below(bound + 1); }

    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Stable per-case seed derivation (splitmix64 over seed/stream/index), so
/// cases can run in any order or in parallel and still reproduce one by one.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Parameters for generated inputs and command traces. Generation is a pure
/// function of the seed and these bounds.
struct TraceSpec {
    std::uint64_t seed = 0;
    std::size_t num_commands = 200;
    std::size_t max_line_len = 16;  // in code points
    std::size_t max_pos_slack = 16; // how far past |b| generated positions may go
};

/// Random line: sometimes empty, sometimes whitespace-only, otherwise a mix
/// of ASCII and multi-byte code points. Never contains '\n'.
Line gen_line(Rng& rng, std::size_t max_len);

Buffer gen_buffer(Rng& rng, std::size_t max_lines, std::size_t max_line_len);

/// Position in [0, bound] — hypothesis-respecting draws for the theorem
/// checks use bound = |b|.
LineIndex gen_pos_at_most(Rng& rng, std::size_t bound);

/// Position in [0, len + slack]: mostly in range, sometimes past the end.
LineIndex gen_pos_with_slack(Rng& rng, std::size_t len, std::size_t slack);

/// Unrestricted position; occasionally extreme (up to SIZE_MAX) to stress
/// the clamping and overflow paths.
LineIndex gen_wild_pos(Rng& rng);

/// Command trace meant to run from an empty buffer. Tracks the evolving
/// line count so positions stay mostly in range with spec.max_pos_slack of
/// overshoot; insert/read/delete are weighted so buffers grow over time.
std::vector<Command> gen_trace(Rng& rng, const TraceSpec& spec);

} // namespace veredit::harness
