#include "pwgraph/errors.hpp"

namespace pwg {

ErrorCategory category_of(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IsolatedVertex:
        case ErrorKind::DisconnectedGraph:
        case ErrorKind::ZeroSignal:
        case ErrorKind::KZero:
        case ErrorKind::NotSamplingSet:
        case ErrorKind::NotBandlimited:
            return ErrorCategory::Precondition;
        case ErrorKind::ConvergenceFailure:
            return ErrorCategory::Numerical;
        default:
            return ErrorCategory::Input;
    }
}

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NegativeWeight: return "NegativeWeight";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::AsymmetricWeight: return "AsymmetricWeight";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::GraphMismatch: return "GraphMismatch";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::EmptySet: return "EmptySet";
        case ErrorKind::FullSet: return "FullSet";
        case ErrorKind::BadSizes: return "BadSizes";
        case ErrorKind::MissingLaplacianData: return "MissingLaplacianData";
        case ErrorKind::IsolatedVertex: return "IsolatedVertex";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::ZeroSignal: return "ZeroSignal";
        case ErrorKind::KZero: return "KZero";
        case ErrorKind::NotSamplingSet: return "NotSamplingSet";
        case ErrorKind::NotBandlimited: return "NotBandlimited";
        case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    }
    return "Unknown";
}

int exit_code(ErrorCategory cat) noexcept {
    switch (cat) {
        case ErrorCategory::Input: return 2;
        case ErrorCategory::Precondition: return 3;
        case ErrorCategory::Numerical: return 4;
    }
    return 1;
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace pwg
