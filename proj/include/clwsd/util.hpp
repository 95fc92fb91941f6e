#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clwsd {

// Error raised by every file parser. what() is "<source>:<line>: <message>".
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& message)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace text {

// Reads one line, stripping a single trailing '\r'. Returns false at end of input.
bool getline_norm(std::istream& in, std::string& line);

// Splits on every occurrence of delim; empty fields are kept.
std::vector<std::string> split(std::string_view s, char delim);

// Full-string numeric parses, locale-independent (decimal point only).
// Fixed and scientific notation accepted for doubles.
bool parse_double(std::string_view s, double& out);
bool parse_uint(std::string_view s, unsigned long long& out);
bool parse_positive_int(std::string_view s, long long& out);

// Shortest decimal form that parses back to the identical double.
std::string format_double(double value);

bool has_whitespace(std::string_view s);

}  // namespace text
}  // namespace clwsd
