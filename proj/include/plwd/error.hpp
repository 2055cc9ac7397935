#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plwd {

enum class ErrorCode {
    CycleDetected,
    NonPositiveWeight,
    DuplicateEdge,
    SelfLoop,
    VertexOutOfRange,
    InvalidPath,
    EndpointMismatch,
    LengthExceeded,
    InvalidWeightSequence,
    TargetOutOfRange,
    WeightFormUnsupported,
    ConditionNotVerified,
    ExplosionGuard,
    SyntaxError,
    SemanticError,
    ReportMismatch,
    InvalidParams,
    EngineMismatch,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library. `code()` identifies the failure;
/// `line()` is set for errors raised while parsing text input.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
};

}  // namespace plwd
