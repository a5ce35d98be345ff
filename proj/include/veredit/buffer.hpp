#pragma once

#include <cstddef>
#include <vector>

#include "veredit/line.hpp"

namespace veredit {

/// The document: an ordered sequence of lines. Duplicates allowed, order
/// significant.
using Buffer = std::vector<Line>;

/// 0-based line position. Deliberately unbounded: every operation below is
/// total, and out-of-range positions are legal inputs with defined results.
using LineIndex = std::size_t;

/// First min(n, |b|) lines of b.
Buffer first_n(const Buffer& b, LineIndex n);

/// b with its first min(n, |b|) lines removed.
Buffer skip_n(const Buffer& b, LineIndex n);

/// Line at pos if pos < |b|, otherwise the fallback. Out-of-range reads
/// signal through the fallback value, never through an error.
Line read_line(const Buffer& b, LineIndex pos, const Line& fallback);

/// first_n(b, pos) ++ [text] ++ skip_n(b, pos). Always grows the buffer by
/// one line; a position past the end appends.
Buffer insert_line(const Buffer& b, LineIndex pos, const Line& text);

/// first_n(b, pos) ++ skip_n(b, pos + 1). Removes the line at pos when
/// pos < |b|; a position past the end is a no-op.
Buffer delete_line(const Buffer& b, LineIndex pos);

} // namespace veredit
