#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace collatz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Raised when 1 is not reached within the step cap. `value()` is the start value
/// as a decimal string.
class OrbitCapExceeded : public Error {
public:
    OrbitCapExceeded(std::string value, std::size_t cap)
        : Error("orbit of " + value + " did not reach 1 within " + std::to_string(cap) + " steps"),
          value_(std::move(value)), cap_(cap) {}

    const std::string& value() const noexcept { return value_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::string value_;
    std::size_t cap_;
};

class CheckpointError : public Error {
public:
    using Error::Error;
};

class EmptyDomain : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IntegrityError : public Error {
public:
    using Error::Error;
};

/// A level sink threw; carries the level index it was handed.
class SinkError : public Error {
public:
    SinkError(std::size_t nu, const std::string& what)
        : Error("sink failed at level " + std::to_string(nu) + ": " + what), nu_(nu) {}

    std::size_t nu() const noexcept { return nu_; }

private:
    std::size_t nu_;
};

}  // namespace collatz
