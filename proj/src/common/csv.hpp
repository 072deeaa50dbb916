#pragma once

// Small CSV helpers shared by the I/O translation units.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "stpm/errors.hpp"

namespace stpm::csv {

inline std::vector<std::string_view> split(std::string_view line, char sep = ',') {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        if (pos == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

inline double parse_double(std::string_view field, std::size_t line_no,
                           const char* what) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last)
        throw DataError("line " + std::to_string(line_no) + ": invalid " + what +
                        " '" + std::string(field) + "'");
    return value;
}

inline std::size_t parse_size(std::string_view field, std::size_t line_no,
                              const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size())
        throw DataError("line " + std::to_string(line_no) + ": invalid " + what +
                        " '" + std::string(field) + "'");
    return value;
}

/// Shortest representation that round-trips exactly.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

/// Strips one trailing '\r' (CRLF input).
inline void chomp(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

} // namespace stpm::csv
