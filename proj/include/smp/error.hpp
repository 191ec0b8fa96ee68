#pragma once

#include <stdexcept>
#include <string>

namespace smp {

// Invalid domain input: a bad profile row, a size mismatch, a bad argument.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed profile text; carries the 1-based input line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A computation was refused because it exceeds the configured work guard.
class GatedError : public std::runtime_error {
public:
    explicit GatedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smp
