#pragma once

#include <stdexcept>
#include <string>

namespace ionforge {

/// Raised when an input violates an invariant of the type it is assigned to.
class ValidationError : public std::runtime_error
{
public:
    explicit ValidationError(const std::string& what, std::string key = {})
        : std::runtime_error(what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// The design is well formed but cannot meet a physical target.
class InfeasibleError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Syntax or structure problem in a design file. Line is 1-based, 0 if unknown.
class ParseError : public ValidationError
{
public:
    ParseError(const std::string& what, std::string key, int line)
        : ValidationError(what, std::move(key)), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace ionforge
