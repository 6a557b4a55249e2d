#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwg {

enum class ErrorKind {
    // input errors
    Parse,
    NegativeWeight,
    DuplicateEdge,
    AsymmetricWeight,
    SelfLoop,
    UnknownVertex,
    GraphMismatch,
    LengthMismatch,
    EmptySet,
    FullSet,
    BadSizes,
    MissingLaplacianData,
    // mathematical preconditions
    IsolatedVertex,
    DisconnectedGraph,
    ZeroSignal,
    KZero,
    NotSamplingSet,
    NotBandlimited,
    // numerical
    ConvergenceFailure,
};

enum class ErrorCategory { Input, Precondition, Numerical };

ErrorCategory category_of(ErrorKind kind) noexcept;
std::string_view to_string(ErrorKind kind) noexcept;

/// Process exit code for an error category: 2 input, 3 precondition, 4 numerical.
int exit_code(ErrorCategory cat) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }
    ErrorCategory category() const noexcept { return category_of(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace pwg
