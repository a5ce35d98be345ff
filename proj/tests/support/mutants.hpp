#pragma once

// Deliberately wrong buffer models for mutation-sanity tests. Each mutant is
// a single off-by-one: the operation lands one position too far right.

#include <limits>

#include "veredit/backend.hpp"
#include "veredit/harness/differential.hpp"

namespace veredit {

inline LineIndex shift_right(LineIndex pos) {
    return pos == std::numeric_limits<LineIndex>::max() ? pos : pos + 1;
}

inline Buffer mutant_insert_line(const Buffer& b, LineIndex pos, const Line& s) {
    return insert_line(b, shift_right(pos), s);
}

inline Buffer mutant_delete_line(const Buffer& b, LineIndex pos) {
    return delete_line(b, shift_right(pos));
}

class MutantBackend final : public BufferBackend {
public:
    enum class Kind { OffByOneInsert, OffByOneDelete };

    explicit MutantBackend(Kind kind) : kind_(kind) {}

    std::string_view name() const override {
        return kind_ == Kind::OffByOneInsert ? "mutant-insert" : "mutant-delete";
    }
    void reset(Buffer lines) override { buffer_ = std::move(lines); }
    Line apply(const Command& cmd) override {
        if (const auto* ins = std::get_if<InsertLine>(&cmd)) {
            buffer_ = kind_ == Kind::OffByOneInsert
                          ? mutant_insert_line(buffer_, ins->pos, ins->text)
                          : insert_line(buffer_, ins->pos, ins->text);
            return Line();
        }
        if (const auto* del = std::get_if<DeleteLine>(&cmd)) {
            buffer_ = kind_ == Kind::OffByOneDelete
                          ? mutant_delete_line(buffer_, del->pos)
                          : delete_line(buffer_, del->pos);
            return Line();
        }
        const auto& read = std::get<ReadLine>(cmd);
        return read_line(buffer_, read.pos, read.fallback);
    }
    Buffer lines() const override { return buffer_; }
    std::size_t line_count() const override { return buffer_.size(); }

private:
    Kind kind_;
    Buffer buffer_;
};

inline harness::BackendFactory mutant_factory(MutantBackend::Kind kind) {
    return [kind] { return std::make_unique<MutantBackend>(kind); };
}

} // namespace veredit
