#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace missmass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (range, duplicates, empty input).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A point does not fit the space it is used with.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A proposed r-net is not r-separated or does not cover the sample.
class InvalidNetError : public Error {
public:
    using Error::Error;
};

/// The operation is not defined for the given space or distribution.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/// Malformed input; carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace missmass
