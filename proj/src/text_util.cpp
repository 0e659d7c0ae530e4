#include "quickpath/text_util.hpp"

#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace quickpath {

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_real(const std::string& token, const std::string& what) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw std::invalid_argument("bad real for " + what + ": '" + token + "'");
    return v;
}

long parse_int(const std::string& token, const std::string& what) {
    const char* begin = token.c_str();
    char* end = nullptr;
    long v = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0')
        throw std::invalid_argument("bad integer for " + what + ": '" + token + "'");
    return v;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace quickpath
