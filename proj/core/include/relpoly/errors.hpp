#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relpoly {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (edge lists, curve files).
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit FormatError(const std::string& what) : Error(what), line_(0) {}

    /// 1-based line number, 0 when not tied to a line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An argument is outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The request exceeds a configured size cap or the available capacity.
class CapacityError : public Error {
public:
    using Error::Error;
};

}  // namespace relpoly
