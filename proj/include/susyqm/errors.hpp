#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace susyqm {

/// Stable error codes. The CLI reports these verbatim in its error objects.
enum class ErrorCode {
    InvalidArgument,
    InvalidSector,
    InvalidMode,
    InvalidIndices,
    InvalidPermutation,
    SizeMismatch,
    SingularArgument,
    DimensionMismatch,
    NonConvergence,
    UnknownModel,
    NoMatch,
    MultipleMatch,
    BoundarySector,
    DerivativeOrder,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace susyqm
