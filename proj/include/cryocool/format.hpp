#ifndef CRYOCOOL_FORMAT_HPP_
#define CRYOCOOL_FORMAT_HPP_

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

// Locale-independent number formatting/parsing. CSV and scenario files are
// byte-reproducible, so all output goes through std::to_chars.
namespace cryocool::detail {

// shortest representation that round-trips through from_chars
inline std::string format_double(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

// scientific notation; precision 12 gives 13 significant digits
inline std::string format_double_sci(double v, int precision = 12) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, precision);
    return std::string(buf, r.ptr);
}

// 9 significant digits, general form; for human-facing messages where the
// shortest round-trip digits of a converted quantity read as noise
inline std::string format_double_msg(double v) {
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
    return std::string(buf, r.ptr);
}

inline std::string format_int(long long v) {
    char buf[32];
    auto r = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, r.ptr);
}

inline std::string_view trim(std::string_view s) {
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

// strict full-token parse; throws std::invalid_argument on anything else
inline double parse_double(std::string_view token, const std::string& what = "number") {
    token = trim(token);
    double v = 0.0;
    auto r = std::from_chars(token.data(), token.data() + token.size(), v);
    if (r.ec != std::errc{} || r.ptr != token.data() + token.size())
        throw std::invalid_argument("cannot parse " + what + " from '" + std::string(token) + "'");
    return v;
}

inline long long parse_int(std::string_view token, const std::string& what = "integer") {
    token = trim(token);
    long long v = 0;
    auto r = std::from_chars(token.data(), token.data() + token.size(), v);
    if (r.ec != std::errc{} || r.ptr != token.data() + token.size())
        throw std::invalid_argument("cannot parse " + what + " from '" + std::string(token) + "'");
    return v;
}

}  // namespace cryocool::detail

#endif
