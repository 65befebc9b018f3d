#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace repur {

enum class ErrorCode {
    InvalidArgument,
    ZeroMass,
    NonPositiveOrder,
    OutOfRange,
    GridTooCoarse,
    InsufficientTower,
    NonFinitePower,
    OrderUnsupported,
    DegenerateFit,
    NoConvergence,
    InsufficientTail,
    SpliceFailure,
    DomainError,
    Io,
    Parse,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// C API maps them one-to-one onto repur_status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace repur
