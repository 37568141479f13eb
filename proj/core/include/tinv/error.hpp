#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tinv {

enum class ErrorKind {
    InstanceCapExceeded,
    StateNotInDomain,
    NotWellFounded,
    NotHWellFounded,
    ParseError,
    ArithmeticOverflow,
    PartialFunction,
    NotABound,
    BudgetExceeded,
    OutsideTable,
    NotTransitiveSequence,
    NotAPartialOrder,
    NotDeterministic,
    NotBounded,
    EmptySet,
    NotFoundWithinCap,
    InternalInconsistency,
    InvalidArgument,
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this type; `kind()` is the
/// stable discriminator, `what()` carries the human-readable witness.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace tinv
