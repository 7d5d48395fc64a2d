#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace supercong {

enum class ErrorKind {
    CompositeModulus,
    BadExponent,
    ModulusTooLarge,
    NotPIntegral,
    NotInvertible,
    MixedContext,
    KTooLarge,
    NTooLarge,
    RangeError,
    BoundExceeded,
    ZeroM,
    ExcludedU,
    WrongResidueClass,
    PrimeTooSmall,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can tell "parameter not admissible at this prime" apart from
// programming errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace supercong
