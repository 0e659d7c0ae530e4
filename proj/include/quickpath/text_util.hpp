#pragma once

#include <cstdint>
#include <string>

namespace quickpath {

/// Formats a double with 17 significant digits, enough to round-trip the
/// exact bit pattern through text.
std::string format_real(double v);

/// Parses a decimal real; throws std::invalid_argument with `what` in the
/// message on malformed input.
double parse_real(const std::string& token, const std::string& what);

long parse_int(const std::string& token, const std::string& what);

/// FNV-1a over a byte string, rendered as 16 hex characters.
std::string fnv1a_hex(const std::string& bytes);

} // namespace quickpath
