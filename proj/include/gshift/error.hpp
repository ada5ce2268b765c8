// error.hpp -- the single exception type thrown by the library.

#ifndef GSHIFT_ERROR_HPP
#define GSHIFT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace gshift {

enum class ErrorKind {
    NotAdmissible,
    EmptyLanguage,
    TooShort,
    PropertyDFailed,
    Undefined,
    Reducible,
    ZeroMass,
    NotTransitionComplete,
    NotContractive,
    DomainMismatch,
    Unresolvable,
    DepthTooSmall,
    ParseError,
    InvariantViolation,
    InvalidArgument,
};

std::string_view kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace gshift

#endif // GSHIFT_ERROR_HPP
