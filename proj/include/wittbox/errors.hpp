#pragma once

#include <stdexcept>
#include <string>

namespace wittbox {

// Every library failure derives from Error and carries a short machine-readable
// kind string, which the CLI prints as `error.kind=<kind>`.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Operation outside its mathematical domain (e.g. inverting zero).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error("domain", what) {}
};

// Inexact division or another arithmetic impossibility; signals a bug.
class ArithmeticError : public Error {
public:
    explicit ArithmeticError(const std::string& what) : Error("arithmetic", what) {}
};

// Missing weights, missing assignments, mismatched variable sets.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error("config", what) {}
};

// Invalid parameters or objects (reducible modulus, unreduced generator, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error("validation", what) {}
};

// Enumeration or combinatorial budget exceeded; never approximated.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error("budget", what) {}
};

class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("parse", what), line_(line) {}

    // 1-based line in the source text, 0 when not tied to a line.
    int line() const noexcept { return line_; }

private:
    int line_;
};

}  // namespace wittbox
