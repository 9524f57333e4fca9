#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cra {

enum class ErrorKind {
    ArithmeticOverflow,
    InvalidValue,
    MissingBinding,
    CopylessViolation,
    NotUnivariate,
    Alphabet,
    Precondition,
    NonZeroViolation,
    DomainMismatch,
    StuckRun,
    Disjointness,
    Ambiguity,
    AcceptanceCount,
    RegisterBudget,
    StateExplosion,
    Limit,
    Syntax,
    Semantic,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg, std::optional<std::string> witness = std::nullopt)
        : std::runtime_error(msg), kind_(kind), witness_(std::move(witness)) {}

    ErrorKind kind() const { return kind_; }
    // Offending word, when the failure is tied to one.
    const std::optional<std::string>& witness() const { return witness_; }

private:
    ErrorKind kind_;
    std::optional<std::string> witness_;
};

// Syntax and semantic errors from the text formats.
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, int line, int column, const std::string& msg)
        : Error(kind, "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace cra
