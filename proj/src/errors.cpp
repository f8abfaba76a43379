#include "thetamin/errors.hpp"

namespace thetamin {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IterationLimit: return "IterationLimit";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::CutoffExceeded: return "CutoffExceeded";
    case ErrorKind::NotOnGamma: return "NotOnGamma";
    case ErrorKind::RootNotBracketed: return "RootNotBracketed";
    case ErrorKind::GridOutsideWindow: return "GridOutsideWindow";
    case ErrorKind::QuadratureFailure: return "QuadratureFailure";
    case ErrorKind::IdentityViolated: return "IdentityViolated";
    }
    return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::InvalidArgument, what);
}

} // namespace thetamin
