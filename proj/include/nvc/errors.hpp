#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nvc {

/// Malformed input text (count files, embedding files, checkpoints, ...).
/// Carries the 1-based line number when one is known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message
                                       : message + " (line " + std::to_string(line) + ")"),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A key (pair, token, concept, ...) that is not present where it was expected.
class LookupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument outside an operation's domain (empty batch, zero norm, bad sizes, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace nvc
