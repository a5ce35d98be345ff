#pragma once

#include "veredit/backend.hpp"

namespace veredit {

/// Line-granular gap buffer. Lines before the gap sit in before_; lines
/// after it sit in after_ in reverse order, so both stacks grow and shrink
/// at their ends. Edits move the gap to the command position first, which
/// makes runs of nearby edits cheap.
///
/// Invariants, checked by the test suite after every command:
///   gap_position() == |before_|
///   logical content == before_ ++ reverse(after_)
class GapBufferBackend final : public BufferBackend {
public:
    GapBufferBackend() = default;
    explicit GapBufferBackend(Buffer initial) { reset(std::move(initial)); }

    std::string_view name() const override { return "gap"; }
    void reset(Buffer lines) override;
    Line apply(const Command& cmd) override;
    Buffer lines() const override;
    std::size_t line_count() const override { return before_.size() + after_.size(); }

    std::size_t gap_position() const { return before_.size(); }

private:
    void move_gap_to(std::size_t pos);
    const Line& line_at(std::size_t pos) const;

    std::vector<Line> before_;
    std::vector<Line> after_; // reversed: back() is the line right after the gap
};

} // namespace veredit
