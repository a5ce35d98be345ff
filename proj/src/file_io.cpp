#include "veredit/file_io.hpp"

#include <cerrno>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace veredit {

namespace {

constexpr std::size_t npos = std::string_view::npos;

// Length of the well-formed UTF-8 sequence starting at data[0], or 0.
// Rejects overlong encodings, surrogates, and anything above U+10FFFF.
std::size_t utf8_sequence_length(const unsigned char* data, std::size_t remaining) {
    const unsigned char b0 = data[0];
    if (b0 < 0x80)
        return 1;
    std::size_t len = 0;
    unsigned char min_b1 = 0x80, max_b1 = 0xBF;
    if (b0 >= 0xC2 && b0 <= 0xDF) {
        len = 2;
    } else if (b0 >= 0xE0 && b0 <= 0xEF) {
        len = 3;
        if (b0 == 0xE0)
            min_b1 = 0xA0; // no overlongs
        else if (b0 == 0xED)
            max_b1 = 0x9F; // no surrogates
    } else if (b0 >= 0xF0 && b0 <= 0xF4) {
        len = 4;
        if (b0 == 0xF0)
            min_b1 = 0x90; // no overlongs
        else if (b0 == 0xF4)
            max_b1 = 0x8F; // no code points above U+10FFFF
    } else {
        return 0; // 0x80..0xC1 and 0xF5..0xFF can never start a sequence
    }
    if (remaining < len)
        return 0;
    if (data[1] < min_b1 || data[1] > max_b1)
        return 0;
    for (std::size_t i = 2; i < len; ++i)
        if (data[i] < 0x80 || data[i] > 0xBF)
            return 0;
    return len;
}

} // namespace

std::size_t find_invalid_utf8(std::string_view bytes) {
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
    std::size_t i = 0;
    while (i < bytes.size()) {
        const std::size_t len = utf8_sequence_length(data + i, bytes.size() - i);
        if (len == 0)
            return i;
        i += len;
    }
    return npos;
}

std::variant<Buffer, LoadError> buffer_from_bytes(std::string_view bytes) {
    if (const std::size_t bad = find_invalid_utf8(bytes); bad != npos)
        return LoadError{bad, "invalid UTF-8 at byte offset " + std::to_string(bad)};

    Buffer lines;
    while (!bytes.empty()) {
        const std::size_t nl = bytes.find('\n');
        if (nl == npos) {
            lines.emplace_back(bytes); // unterminated final fragment
            break;
        }
        lines.emplace_back(bytes.substr(0, nl));
        bytes.remove_prefix(nl + 1);
    }
    return lines;
}

std::string bytes_from_buffer(const Buffer& b) {
    std::string out;
    for (const Line& line : b) {
        out += line.content();
        out += '\n';
    }
    return out;
}

std::variant<std::string, IoError> read_file(const std::string& path) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec))
        return IoError{path + ": is a directory"};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        return IoError{path + ": " + std::strerror(errno)};
    std::ostringstream contents;
    contents << file.rdbuf();
    if (file.bad())
        return IoError{path + ": read failed"};
    return std::move(contents).str();
}

std::optional<IoError> write_file(const std::string& path, std::string_view bytes) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        return IoError{path + ": " + std::strerror(errno)};
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    file.flush();
    if (!file)
        return IoError{path + ": write failed"};
    return std::nullopt;
}

} // namespace veredit
