#pragma once

#include <stdexcept>
#include <string>

namespace thetamin {

enum class ErrorKind {
    InvalidArgument,
    IterationLimit,
    BudgetExceeded,
    CutoffExceeded,
    NotOnGamma,
    RootNotBracketed,
    GridOutsideWindow,
    QuadratureFailure,
    IdentityViolated, // an internal cross-check disagreed beyond tolerance
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

// Throws InvalidArgument unless `ok`.
void require(bool ok, const std::string& what);

} // namespace thetamin
