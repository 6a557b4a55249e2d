#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "pwgraph/graph.hpp"

namespace pwg {

/// Full eigendecomposition of Delta. Eigenvectors are real, stored as
/// columns, orthonormal in the graph's measure.
struct Spectrum {
    std::uint64_t graph_id = 0;
    MeasureMode mode = MeasureMode::Counting;
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXd eigenvectors;  // column j is e_{lambda_j}
    Eigen::VectorXd measure;

    Index size() const noexcept { return eigenvalues.size(); }
    double lambda_max() const { return size() == 0 ? 0.0 : eigenvalues(size() - 1); }

    /// Tolerance for every "lambda <= omega" comparison: 1e-9 * max(1, lambda_max).
    double tolerance() const { return 1e-9 * std::max(1.0, lambda_max()); }

    /// Number of eigenvalues <= omega (within tolerance): dim PW_omega.
    Index pw_dimension(double omega) const;

    /// First pw_dimension(omega) eigenvectors.
    Eigen::MatrixXd pw_basis(double omega) const;
};

void require_same_graph(const Spectrum& spec, const Signal& f);

/// Throws ConvergenceFailure if the solver fails or the result violates
/// the residual / orthonormality bounds.
Spectrum eigendecompose(const Graph& g);

/// c_j = <f, e_j> in the mode's inner product.
Eigen::VectorXcd fourier(const Spectrum& spec, const Signal& f);
Signal inverse_fourier(const Spectrum& spec, const Eigen::VectorXcd& coefficients);

struct Projection {
    Signal signal;
    Index dimension = 0;
};

/// Orthogonal projection onto PW_omega (eigenvalues <= omega, closed).
Projection pw_project(const Spectrum& spec, const Signal& f, double omega);

/// Delta^p f evaluated on the spectrum (p >= 0, fractional powers allowed).
Signal apply_power(const Spectrum& spec, const Signal& f, double p);

double spectral_norm_of(const Spectrum& spec, const Signal& f);

struct BernsteinResult {
    bool holds = false;
    double ratio = 0.0;  // ||Delta^k f|| / (omega^k ||f||)
};

/// Throws ZeroSignal for f = 0.
BernsteinResult bernstein_check(const Spectrum& spec, const Signal& f, double omega, int k);

enum class Endpoint { Closed, Open };

/// Number of eigenvalues in the interval from a to b with the given endpoint
/// kinds, using spec.tolerance() at both ends.
Index eigenvalue_count(const Spectrum& spec, double a, double b, Endpoint left = Endpoint::Closed,
                       Endpoint right = Endpoint::Closed);

}  // namespace pwg
