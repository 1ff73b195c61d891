#pragma once

#include <stdexcept>
#include <string>

namespace fpsl {

enum class ErrorKind {
    NonInvertibleLead,
    DivByZero,
    InnerConstantTerm,
    NotInvertible,
    BadConstantTerm,
    NonIntegrableTerm,
    NotNormalized,
    DegenerateDivisor,
    DegenerateParameter,
    PremiseViolated,
    LogDegreeOverflow,
    BadLead,
    NotMonic,
    DegreeMismatch,
    OutOfRange,
    InsufficientOrder,
    IncompatibleExponents,
    InternalCheck,
    Config,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace fpsl
