#pragma once

#include <stdexcept>
#include <string>

namespace omegact {

// Typed failure signals. Mathematical failures (NotDivisible, PoleAtZero,
// ...) are distinct from resource exhaustion (BudgetExhausted), which the
// CLI maps to its own exit code.
enum class ErrorKind {
    NotDivisible,
    PoleAtZero,
    UnitMonomial,
    DegenerateFactor,
    NotCanonical,
    UnknownVariable,
    NonInteger,
    Parse,
    BudgetExhausted,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Syntax error with source position (1-based).
class ParseError : public Error {
public:
    ParseError(std::string msg, int line, int column)
        : Error(ErrorKind::Parse, msg + " at line " + std::to_string(line) +
                                      ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// Thrown when a run exceeds its time budget; carries the checkpoint path
// so the caller can tell the user how to resume.
class BudgetError : public Error {
public:
    explicit BudgetError(std::string checkpoint_path)
        : Error(ErrorKind::BudgetExhausted,
                "time budget exhausted; checkpoint saved"),
          checkpoint_(std::move(checkpoint_path)) {}

    const std::string& checkpoint_path() const { return checkpoint_; }

private:
    std::string checkpoint_;
};

} // namespace omegact
