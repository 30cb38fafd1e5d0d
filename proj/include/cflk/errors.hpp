#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cflk {

// Invalid problem parameters or evaluation outside the kernel's domain.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed input data; `line` is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace cflk
