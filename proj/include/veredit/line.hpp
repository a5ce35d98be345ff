#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace veredit {

/// One line of buffer text. Content is UTF-8 and never contains '\n';
/// the line boundary is what makes "buffer = sequence of lines" unambiguous.
class Line {
public:
    Line() = default;

    explicit Line(std::string content)
        : content_(std::move(content)) {
        if (content_.find('\n') != std::string::npos)
            throw std::invalid_argument("Line content must not contain a newline");
    }

    explicit Line(std::string_view content)
        : Line(std::string(content)) {}

    explicit Line(const char* content)
        : Line(std::string(content)) {}

    const std::string& content() const { return content_; }
    bool empty() const { return content_.empty(); }

    bool operator==(const Line&) const = default;
    auto operator<=>(const Line&) const = default;

private:
    std::string content_;
};

} // namespace veredit
