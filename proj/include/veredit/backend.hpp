#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "veredit/commands.hpp"

namespace veredit {

/// Storage-agnostic buffer contract. Implementations may keep any internal
/// representation as long as applying a command is observationally identical
/// to editor_eval on the logical line sequence, clamping included. The
/// differential harness enforces exactly that.
///
/// An instance is single-owner: not safe for concurrent mutation. Distinct
/// instances are independent.
class BufferBackend {
public:
    virtual ~BufferBackend() = default;

    virtual std::string_view name() const = 0;

    /// Replaces the logical content.
    virtual void reset(Buffer lines) = 0;

    /// Applies one command in place and returns its output line.
    virtual Line apply(const Command& cmd) = 0;

    /// The logical line sequence.
    virtual Buffer lines() const = 0;

    virtual std::size_t line_count() const = 0;
};

/// Plain vector-of-lines backend that evaluates every command through
/// editor_eval. This is the reference the differential harness certifies
/// other backends against; it stays deliberately unoptimized.
class ReferenceBackend final : public BufferBackend {
public:
    ReferenceBackend() = default;
    explicit ReferenceBackend(Buffer initial) : buffer_(std::move(initial)) {}

    std::string_view name() const override { return "reference"; }
    void reset(Buffer lines) override { buffer_ = std::move(lines); }
    Line apply(const Command& cmd) override;
    Buffer lines() const override { return buffer_; }
    std::size_t line_count() const override { return buffer_.size(); }

private:
    Buffer buffer_;
};

/// Known backend names, in registry order.
std::vector<std::string> backend_names();

/// Constructs a backend by name; nullptr for an unknown name.
std::unique_ptr<BufferBackend> make_backend(std::string_view name, Buffer initial = {});

} // namespace veredit
