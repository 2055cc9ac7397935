#include "plwd/error.hpp"

namespace plwd {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CycleDetected: return "CycleDetected";
        case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::SelfLoop: return "SelfLoop";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::InvalidPath: return "InvalidPath";
        case ErrorCode::EndpointMismatch: return "EndpointMismatch";
        case ErrorCode::LengthExceeded: return "LengthExceeded";
        case ErrorCode::InvalidWeightSequence: return "InvalidWeightSequence";
        case ErrorCode::TargetOutOfRange: return "TargetOutOfRange";
        case ErrorCode::WeightFormUnsupported: return "WeightFormUnsupported";
        case ErrorCode::ConditionNotVerified: return "ConditionNotVerified";
        case ErrorCode::ExplosionGuard: return "ExplosionGuard";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SemanticError: return "SemanticError";
        case ErrorCode::ReportMismatch: return "ReportMismatch";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::EngineMismatch: return "EngineMismatch";
    }
    return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message, std::optional<std::size_t> line) {
    std::string out(to_string(code));
    if (line) {
        out += " at line " + std::to_string(*line);
    }
    out += ": ";
    out += message;
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

}  // namespace plwd
