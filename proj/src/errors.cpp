#include "susyqm/errors.hpp"

namespace susyqm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidSector: return "invalid-sector";
    case ErrorCode::InvalidMode: return "invalid-mode";
    case ErrorCode::InvalidIndices: return "invalid-indices";
    case ErrorCode::InvalidPermutation: return "malformed-permutation";
    case ErrorCode::SizeMismatch: return "size-mismatch";
    case ErrorCode::SingularArgument: return "singular-argument";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::UnknownModel: return "unknown-model";
    case ErrorCode::NoMatch: return "no-match";
    case ErrorCode::MultipleMatch: return "multiple-match";
    case ErrorCode::BoundarySector: return "boundary-sector";
    case ErrorCode::DerivativeOrder: return "derivative-order-insufficient";
    }
    return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

} // namespace susyqm
