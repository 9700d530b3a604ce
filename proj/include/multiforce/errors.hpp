#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multiforce {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DuplicateLabelError : public Error {
public:
    explicit DuplicateLabelError(const std::string& label)
        : Error("duplicate label: '" + label + "'"), label_(label) {}
    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

class UnknownIdError : public Error {
public:
    using Error::Error;
};

/// An edge whose endpoints live on different layers.
class MultiplexViolationError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::string reason_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

}  // namespace multiforce
