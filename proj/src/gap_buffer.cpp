#include "veredit/gap_buffer.hpp"

#include <algorithm>
#include <cassert>

namespace veredit {

void GapBufferBackend::reset(Buffer lines) {
    before_ = std::move(lines);
    after_.clear();
}

void GapBufferBackend::move_gap_to(std::size_t pos) {
    assert(pos <= line_count());
    while (before_.size() > pos) {
        after_.push_back(std::move(before_.back()));
        before_.pop_back();
    }
    while (before_.size() < pos) {
        before_.push_back(std::move(after_.back()));
        after_.pop_back();
    }
}

const Line& GapBufferBackend::line_at(std::size_t pos) const {
    assert(pos < line_count());
    if (pos < before_.size())
        return before_[pos];
    return after_[after_.size() - 1 - (pos - before_.size())];
}

Line GapBufferBackend::apply(const Command& cmd) {
    struct Visitor {
        GapBufferBackend& self;
        Line operator()(const InsertLine& c) {
            // Past-the-end positions clamp to append.
            self.move_gap_to(std::min<std::size_t>(c.pos, self.line_count()));
            self.before_.push_back(c.text);
            return Line();
        }
        Line operator()(const ReadLine& c) {
            return c.pos < self.line_count() ? self.line_at(c.pos) : c.fallback;
        }
        Line operator()(const DeleteLine& c) {
            if (c.pos < self.line_count()) {
                self.move_gap_to(c.pos);
                self.after_.pop_back();
            }
            return Line();
        }
    };
    return std::visit(Visitor{*this}, cmd);
}

Buffer GapBufferBackend::lines() const {
    Buffer out = before_;
    out.reserve(line_count());
    out.insert(out.end(), after_.rbegin(), after_.rend());
    return out;
}

} // namespace veredit
