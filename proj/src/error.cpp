#include "repur/error.hpp"

namespace repur {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ZeroMass: return "ZeroMass";
        case ErrorCode::NonPositiveOrder: return "NonPositiveOrder";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::GridTooCoarse: return "GridTooCoarse";
        case ErrorCode::InsufficientTower: return "InsufficientTower";
        case ErrorCode::NonFinitePower: return "NonFinitePower";
        case ErrorCode::OrderUnsupported: return "OrderUnsupported";
        case ErrorCode::DegenerateFit: return "DegenerateFit";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::InsufficientTail: return "InsufficientTail";
        case ErrorCode::SpliceFailure: return "SpliceFailure";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace repur
