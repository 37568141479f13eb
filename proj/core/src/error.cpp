#include "tinv/error.hpp"

namespace tinv {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InstanceCapExceeded: return "InstanceCapExceeded";
    case ErrorKind::StateNotInDomain: return "StateNotInDomain";
    case ErrorKind::NotWellFounded: return "NotWellFounded";
    case ErrorKind::NotHWellFounded: return "NotHWellFounded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorKind::PartialFunction: return "PartialFunction";
    case ErrorKind::NotABound: return "NotABound";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::OutsideTable: return "OutsideTable";
    case ErrorKind::NotTransitiveSequence: return "NotTransitiveSequence";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotDeterministic: return "NotDeterministic";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotFoundWithinCap: return "NotFoundWithinCap";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace tinv
