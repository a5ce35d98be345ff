#include "veredit/buffer.hpp"

#include <algorithm>
#include <limits>

namespace veredit {

Buffer first_n(const Buffer& b, LineIndex n) {
    const auto count = std::min<std::size_t>(n, b.size());
    return Buffer(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(count));
}

Buffer skip_n(const Buffer& b, LineIndex n) {
    const auto count = std::min<std::size_t>(n, b.size());
    return Buffer(b.begin() + static_cast<std::ptrdiff_t>(count), b.end());
}

Line read_line(const Buffer& b, LineIndex pos, const Line& fallback) {
    return pos < b.size() ? b[pos] : fallback;
}

Buffer insert_line(const Buffer& b, LineIndex pos, const Line& text) {
    Buffer out = first_n(b, pos);
    out.reserve(b.size() + 1);
    out.push_back(text);
    Buffer tail = skip_n(b, pos);
    out.insert(out.end(), std::make_move_iterator(tail.begin()),
               std::make_move_iterator(tail.end()));
    return out;
}

Buffer delete_line(const Buffer& b, LineIndex pos) {
    // pos + 1 saturates instead of wrapping; positions are unbounded naturals
    // semantically, and SIZE_MAX is already past any representable buffer.
    const LineIndex past = pos == std::numeric_limits<LineIndex>::max() ? pos : pos + 1;
    Buffer out = first_n(b, pos);
    Buffer tail = skip_n(b, past);
    out.insert(out.end(), std::make_move_iterator(tail.begin()),
               std::make_move_iterator(tail.end()));
    return out;
}

} // namespace veredit
