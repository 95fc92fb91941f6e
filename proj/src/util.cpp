#include "clwsd/util.hpp"

#include <cctype>
#include <charconv>

namespace clwsd::text {

bool getline_norm(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) {
        return false;
    }
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return true;
}

std::vector<std::string> split(std::string_view s, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(delim, start);
        if (pos == std::string_view::npos) {
            fields.emplace_back(s.substr(start));
            break;
        }
        fields.emplace_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

bool parse_double(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out, std::chars_format::general);
    return ec == std::errc() && ptr == last;
}

bool parse_uint(std::string_view s, unsigned long long& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out, 10);
    return ec == std::errc() && ptr == last;
}

bool parse_positive_int(std::string_view s, long long& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out, 10);
    return ec == std::errc() && ptr == last && out > 0;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool has_whitespace(std::string_view s) {
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            return true;
        }
    }
    return false;
}

}  // namespace clwsd::text
