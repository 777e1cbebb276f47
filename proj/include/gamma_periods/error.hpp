#pragma once

#include <stdexcept>
#include <string>

namespace gamma_periods {

enum class ErrorKind {
    invalid_modulus,
    shape_error,
    invalid_unit,
    no_epsilon,
    incompatible_moduli,
    no_line_bundle,
    invalid_divisor,
    invalid_argument,
    pole,
    quadrature_failure,
    unsupported_residue,
    degenerate_basis,
    inconclusive_basis,
    precision_exhausted,
    invalid_discriminant,
    invalid_curve,
    parse_error,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::shape_error: return "shape-error";
    case ErrorKind::invalid_unit: return "invalid-unit";
    case ErrorKind::no_epsilon: return "no-epsilon";
    case ErrorKind::incompatible_moduli: return "incompatible-moduli";
    case ErrorKind::no_line_bundle: return "no-line-bundle";
    case ErrorKind::invalid_divisor: return "invalid-divisor";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::pole: return "pole";
    case ErrorKind::quadrature_failure: return "quadrature-failure";
    case ErrorKind::unsupported_residue: return "unsupported-residue";
    case ErrorKind::degenerate_basis: return "degenerate-basis";
    case ErrorKind::inconclusive_basis: return "inconclusive-basis";
    case ErrorKind::precision_exhausted: return "precision-exhausted";
    case ErrorKind::invalid_discriminant: return "invalid-discriminant";
    case ErrorKind::invalid_curve: return "invalid-curve";
    case ErrorKind::parse_error: return "parse-error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), message_(message) {}

    ErrorKind kind() const noexcept { return kind_; }
    // The message without the kind prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorKind kind_;
    std::string message_;
};

// Raised by gamma evaluation at a non-positive integer.
class PoleError : public Error {
public:
    explicit PoleError(long at)
        : Error(ErrorKind::pole, "gamma has a pole at " + std::to_string(at)), at_(at) {}

    long at() const noexcept { return at_; }

private:
    long at_;
};

// Parse failure with a 1-based position in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, int line, int column)
        : Error(ErrorKind::parse_error,
                std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), detail_(message) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    int line_;
    int column_;
    std::string detail_;
};

} // namespace gamma_periods
