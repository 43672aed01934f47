#pragma once

#include <stdexcept>
#include <string>

namespace nbhd {

/// Raised when an argument lies outside an operation's domain
/// (out-of-range vertex, non-chordal input to a chordal-only routine, ...).
class DomainError : public std::domain_error
{
public:
    explicit DomainError(const std::string & what) : std::domain_error(what) {}
};

/// Raised when an exact solver is asked to run above its configured size cap.
/// Exact routines never fall back to an approximation.
class TooLarge : public std::runtime_error
{
public:
    explicit TooLarge(const std::string & what) : std::runtime_error(what) {}
};

/// Malformed graph / complex input. Carries the 1-based line number when known.
class ParseError : public std::runtime_error
{
public:
    ParseError(const std::string & what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace nbhd
