#include "pwgraph/spectral.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace pwg {

Index Spectrum::pw_dimension(double omega) const {
    const double bound = omega + tolerance();
    Index d = 0;
    while (d < size() && eigenvalues(d) <= bound) ++d;
    return d;
}

Eigen::MatrixXd Spectrum::pw_basis(double omega) const {
    return eigenvectors.leftCols(pw_dimension(omega));
}

void require_same_graph(const Spectrum& spec, const Signal& f) {
    if (f.graph_id != spec.graph_id) throw Error(ErrorKind::GraphMismatch, "signal and spectrum differ in graph");
    if (f.size() != spec.size()) throw Error(ErrorKind::LengthMismatch, "signal length differs from spectrum size");
}

Spectrum eigendecompose(const Graph& g) {
    if (g.size() < 1) throw Error(ErrorKind::BadSizes, "graph has no vertices");
    const LaplacianMatrix lap = laplacian_matrix(g);

    // Eigen's tridiagonal QR is deterministic for a fixed input, which fixes the
    // basis chosen inside degenerate eigenspaces.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap.symmetric);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");

    Spectrum spec;
    spec.graph_id = g.id();
    spec.mode = g.mode();
    spec.measure = g.measure();
    spec.eigenvalues = solver.eigenvalues();
    spec.eigenvectors = lap.sqrt_measure.cwiseInverse().asDiagonal() * solver.eigenvectors();

    // sign convention: first nonzero entry of each eigenvector is positive
    for (Index j = 0; j < spec.size(); ++j) {
        auto col = spec.eigenvectors.col(j);
        for (Index i = 0; i < col.size(); ++i) {
            if (std::abs(col(i)) > 1e-12) {
                if (col(i) < 0) col = -col;
                break;
            }
        }
    }

    const double lmax = std::max(1.0, spec.lambda_max());
    if (spec.eigenvalues(0) < -1e-10 * lmax)
        throw Error(ErrorKind::ConvergenceFailure, "negative eigenvalue " + std::to_string(spec.eigenvalues(0)));
    for (Index j = 0; j < spec.size(); ++j)
        spec.eigenvalues(j) = std::max(spec.eigenvalues(j), 0.0);

    const Eigen::MatrixXd residual =
        lap.op * spec.eigenvectors - spec.eigenvectors * spec.eigenvalues.asDiagonal();
    for (Index j = 0; j < spec.size(); ++j) {
        const double r = std::sqrt((residual.col(j).array().square() * spec.measure.array()).sum());
        if (r > 1e-9 * lmax)
            throw Error(ErrorKind::ConvergenceFailure, "eigenpair residual " + std::to_string(r));
    }
    const Eigen::MatrixXd gram =
        spec.eigenvectors.transpose() * spec.measure.asDiagonal() * spec.eigenvectors;
    const double orth = (gram - Eigen::MatrixXd::Identity(spec.size(), spec.size())).cwiseAbs().maxCoeff();
    if (orth > 1e-9) throw Error(ErrorKind::ConvergenceFailure, "eigenbasis not orthonormal: " + std::to_string(orth));
    return spec;
}

Eigen::VectorXcd fourier(const Spectrum& spec, const Signal& f) {
    require_same_graph(spec, f);
    const Eigen::VectorXcd weighted = spec.measure.cast<Complex>().cwiseProduct(f.values);
    return spec.eigenvectors.transpose().cast<Complex>() * weighted;
}

Signal inverse_fourier(const Spectrum& spec, const Eigen::VectorXcd& coefficients) {
    if (coefficients.size() != spec.size())
        throw Error(ErrorKind::LengthMismatch, "coefficient vector length differs from spectrum size");
    return Signal{spec.graph_id, spec.eigenvectors.cast<Complex>() * coefficients};
}

Projection pw_project(const Spectrum& spec, const Signal& f, double omega) {
    Eigen::VectorXcd c = fourier(spec, f);
    const Index d = spec.pw_dimension(omega);
    c.tail(spec.size() - d).setZero();
    return {inverse_fourier(spec, c), d};
}

Signal apply_power(const Spectrum& spec, const Signal& f, double p) {
    Eigen::VectorXcd c = fourier(spec, f);
    for (Index j = 0; j < c.size(); ++j) {
        const double lam = spec.eigenvalues(j);
        c(j) *= (p == 0.0) ? 1.0 : std::pow(lam, p);
    }
    return inverse_fourier(spec, c);
}

double spectral_norm_of(const Spectrum& spec, const Signal& f) {
    require_same_graph(spec, f);
    return weighted_norm(spec.measure, f.values);
}

BernsteinResult bernstein_check(const Spectrum& spec, const Signal& f, double omega, int k) {
    if (k < 1) throw Error(ErrorKind::BadSizes, "Bernstein exponent must be >= 1");
    const Eigen::VectorXcd c = fourier(spec, f);
    const double fnorm = c.norm();
    if (fnorm == 0.0) throw Error(ErrorKind::ZeroSignal, "Bernstein ratio undefined for f = 0");

    // ||Delta^k f|| / (omega^k ||f||) = sqrt(sum |c_j|^2 (lambda_j / omega)^{2k}) / ||f||;
    // scaling by omega before exponentiation avoids overflow for large k
    double acc = 0.0;
    for (Index j = 0; j < c.size(); ++j) {
        const double lam = spec.eigenvalues(j);
        if (lam == 0.0 || std::abs(c(j)) == 0.0) continue;
        if (omega <= 0.0) {
            acc = std::numeric_limits<double>::infinity();
            break;
        }
        acc += std::norm(c(j)) * std::pow(lam / omega, 2.0 * k);
    }
    BernsteinResult r;
    r.ratio = std::sqrt(acc) / fnorm;
    r.holds = r.ratio <= 1.0 + 1e-9;
    return r;
}

Index eigenvalue_count(const Spectrum& spec, double a, double b, Endpoint left, Endpoint right) {
    const double tol = spec.tolerance();
    Index count = 0;
    for (Index j = 0; j < spec.size(); ++j) {
        const double lam = spec.eigenvalues(j);
        const bool above = left == Endpoint::Closed ? lam >= a - tol : lam > a + tol;
        const bool below = right == Endpoint::Closed ? lam <= b + tol : lam < b - tol;
        if (above && below) ++count;
    }
    return count;
}

}  // namespace pwg
