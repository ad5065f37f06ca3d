#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// A computation would exceed the configured degree cap.
class CapExceeded : public std::runtime_error
{
public:
    CapExceeded(std::string what, unsigned degree, unsigned cap)
        : std::runtime_error(what + ": degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap)),
          degree_(degree), cap_(cap)
    {}
    unsigned degree() const noexcept { return degree_; }
    unsigned cap() const noexcept { return cap_; }

private:
    unsigned degree_;
    unsigned cap_;
};

/// A size guard (group-algebra size, oracle size) was exceeded.
class GuardExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries the offending token and its position.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string& message, std::string token, std::size_t position)
        : std::runtime_error(message + " at position " + std::to_string(position) + " in '" + token + "'"),
          token_(std::move(token)), position_(position)
    {}
    const std::string& token() const noexcept { return token_; }
    std::size_t position() const noexcept { return position_; }

private:
    std::string token_;
    std::size_t position_;
};

/// An operation was called outside of its domain (e.g. inapplicable Hom flavor).
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace mackey
