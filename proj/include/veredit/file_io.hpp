#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "veredit/buffer.hpp"

namespace veredit {

// On-disk format: UTF-8 text with LF terminators. "\r\n" is not normalized;
// a '\r' stays part of the line. Loading keeps a final unterminated fragment
// as its own line; saving terminates every line, so a missing final newline
// is the one thing a load/save round trip repairs.

struct LoadError {
    std::size_t byte_offset = 0; // first offending byte
    std::string message;
    bool operator==(const LoadError&) const = default;
};

/// Offset of the first byte where `bytes` stops being well-formed UTF-8,
/// or npos when the whole image is valid.
std::size_t find_invalid_utf8(std::string_view bytes);

/// Splits a UTF-8 image into lines. A trailing newline yields no trailing
/// empty line; an empty image is the empty buffer.
std::variant<Buffer, LoadError> buffer_from_bytes(std::string_view bytes);

/// Each line followed by '\n'; the empty buffer is the empty image.
std::string bytes_from_buffer(const Buffer& b);

struct IoError {
    std::string message;
};

std::variant<std::string, IoError> read_file(const std::string& path);
std::optional<IoError> write_file(const std::string& path, std::string_view bytes);

} // namespace veredit
