#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veredit/backend.hpp"
#include "veredit/harness/properties.hpp"

namespace veredit::harness {

/// Produces a fresh, independent backend instance. The differential runner
/// replays traces on many instances, possibly in parallel, so it takes
/// factories rather than shared instances.
using BackendFactory = std::function<std::unique_ptr<BufferBackend>()>;

/// First point where a backend's observable behavior left the reference
/// semantics.
struct Divergence {
    std::size_t step = 0; // index of the offending command
    std::string backend_name;
    std::string detail;
};

/// Replays a trace from the empty buffer on the reference semantics and on
/// the given backend, comparing the output line and the full line sequence
/// after every single step.
std::optional<Divergence> check_trace(std::span<const Command> trace, BufferBackend& backend);

/// Shrinks a failing trace until it is locally minimal: removing any single
/// command, zeroing any position, or emptying any insert text makes it pass.
/// The result still fails check_trace against a backend from `make`.
std::vector<Command> shrink_trace(std::vector<Command> trace, const BackendFactory& make);

/// A captured counterexample, already shrunk, replayable from the empty
/// buffer via the trace text format.
struct FailingTrace {
    std::uint64_t seed = 0; // regenerates the original unshrunk trace
    std::string backend_name;
    std::vector<Command> commands;
};

/// Generates `num_traces` command traces from spec (per-trace derived seeds)
/// and checks every backend against the reference on each. The first failure
/// is shrunk and, when `captured` is given, appended to it. Deterministic
/// given spec.seed, independent of thread count.
PropertyReport run_differential(const TraceSpec& spec,
                                std::span<const BackendFactory> backends,
                                std::size_t num_traces,
                                std::vector<FailingTrace>* captured = nullptr);

} // namespace veredit::harness
