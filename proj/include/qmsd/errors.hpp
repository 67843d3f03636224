#pragma once

#include <stdexcept>
#include <string>

namespace qmsd {

/// Raised when user-facing parameters violate a documented precondition.
/// `field()` names the offending parameter.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Raised when an internal numerical invariant does not hold.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace qmsd
