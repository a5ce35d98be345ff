#pragma once

#include <initializer_list>
#include <ostream>
#include <string_view>

#include "veredit/buffer.hpp"
#include "veredit/harness/properties.hpp"

namespace veredit {

inline Line ln(std::string_view text) {
    return Line(text);
}

inline Buffer buf(std::initializer_list<std::string_view> lines) {
    Buffer b;
    for (std::string_view text : lines)
        b.emplace_back(text);
    return b;
}

// Readable doctest failure output.
inline std::ostream& operator<<(std::ostream& os, const Line& line) {
    return os << harness::render_line(line);
}

inline std::ostream& operator<<(std::ostream& os, const Buffer& b) {
    return os << harness::render_buffer(b);
}

} // namespace veredit
