#include "pwgraph/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace pwg {

namespace {

Eigen::MatrixXd select_rows(const Eigen::MatrixXd& m, const std::vector<Index>& rows) {
    Eigen::MatrixXd out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
    return out;
}

Eigen::MatrixXd select_cols(const Eigen::MatrixXd& m, const std::vector<Index>& cols) {
    Eigen::MatrixXd out(m.rows(), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < cols.size(); ++i) out.col(static_cast<Index>(i)) = m.col(cols[i]);
    return out;
}

void require_set_on(const Spectrum& spec, const VertexSet& s) {
    if (s.graph_id() != spec.graph_id)
        throw Error(ErrorKind::GraphMismatch, "vertex set and spectrum differ in graph");
}

// Numerical rank of B through the eigenvalues of B^T B, relative to a reference
// scale so that an all-zero restriction has rank 0.
Index numerical_rank(const Eigen::MatrixXd& b, double reference_scale) {
    if (b.rows() == 0 || b.cols() == 0) return 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(b.transpose() * b, Eigen::EigenvaluesOnly);
    const double tol = 1e-8 * reference_scale;
    Index r = 0;
    for (Index i = 0; i < es.eigenvalues().size(); ++i)
        if (es.eigenvalues()(i) > tol) ++r;
    return r;
}

}  // namespace

void require_proper(const VertexSet& s) {
    if (s.empty()) throw Error(ErrorKind::EmptySet, "vertex set is empty");
    if (s.is_full()) throw Error(ErrorKind::FullSet, "vertex set is all of V");
}

ConnectivityMeasures connectivity_measures(const Graph& g, const VertexSet& s) {
    require_same_graph(g, s);
    require_proper(s);
    const VertexSet sc = s.complement();
    const auto& w = g.adjacency();

    ConnectivityMeasures m;
    m.K = std::numeric_limits<double>::infinity();
    for (Index v : sc.members()) {
        double ws = 0.0;
        for (Index u : s.members()) ws += w(u, v);
        m.K = std::min(m.K, ws);
    }
    m.D = 0.0;
    for (Index u : s.members()) {
        double wsc = 0.0;
        for (Index v : sc.members()) wsc += w(u, v);
        m.D = std::max(m.D, wsc);
    }
    return m;
}

PoincareResult poincare_extremal(const Graph& g, const VertexSet& u) {
    require_same_graph(g, u);
    if (u.empty()) throw Error(ErrorKind::EmptySet, "support set is empty");
    const LaplacianMatrix lap = laplacian_matrix(g);

    // With psi = mu^{1/2} phi the mode norms become Euclidean and Delta becomes
    // the symmetric form, so Lambda(U) is the smallest singular value of its
    // U-columns.
    const Eigen::MatrixXd cols = select_cols(lap.symmetric, u.members());
    Eigen::BDCSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeThinV);
    const Index last = svd.singularValues().size() - 1;
    const Eigen::VectorXd psi = svd.matrixV().col(last);

    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(g.size());
    for (std::size_t i = 0; i < u.members().size(); ++i) {
        const Index v = u.members()[i];
        phi(v) = psi(static_cast<Index>(i)) / lap.sqrt_measure(v);
    }

    PoincareResult r;
    r.constant = u.is_full() ? 0.0 : svd.singularValues()(last);
    r.minimizer = Signal{g.id(), std::move(phi)};
    return r;
}

double poincare_constant(const Graph& g, const VertexSet& u) { return poincare_extremal(g, u).constant; }

Eigen::VectorXcd restrict_to(const Signal& f, const VertexSet& s) {
    Eigen::VectorXcd out(s.size());
    for (std::size_t i = 0; i < s.members().size(); ++i) out(static_cast<Index>(i)) = f.values(s.members()[i]);
    return out;
}

MainInequality main_inequality_check(const Graph& g, const Spectrum& spec, const VertexSet& s,
                                     const Signal& f) {
    require_same_graph(g, f);
    const ConnectivityMeasures cm = connectivity_measures(g, s);
    if (cm.K == 0.0) throw Error(ErrorKind::KZero, "K_S = 0: some vertex of S^c has no edge into S");

    const double energy = spectral_norm_of(spec, apply_power(spec, f, 0.5));
    const double on_set = restrict_to(f, s).norm();
    const double off_set = restrict_to(f, s.complement()).norm();
    const double a = 1.0 / std::sqrt(cm.K);
    const double b = std::sqrt(cm.D / cm.K);

    MainInequality r;
    r.lhs = off_set;
    r.rhs = a * energy + b * on_set;
    r.holds = r.lhs <= r.rhs + 1e-9;
    r.literal_lhs = norm(g, f);
    r.literal_rhs = a * energy + b * off_set;
    r.literal_holds = r.literal_lhs <= r.literal_rhs + 1e-9;
    return r;
}

Eigen::MatrixXd reduced_laplacian(const Graph& g, const VertexSet& s) {
    require_same_graph(g, s);
    Eigen::MatrixXd m = laplacian_matrix(g).op;
    for (Index v : s.members()) {
        m.row(v).setZero();
        m.col(v).setZero();
    }
    return m;
}

double reduced_laplacian_cutoff(const Graph& g, const VertexSet& s) {
    require_same_graph(g, s);
    require_proper(s);
    if (!g.is_connected())
        throw Error(ErrorKind::DisconnectedGraph, "reduced-Laplacian cut-off requires a connected graph");
    const LaplacianMatrix lap = laplacian_matrix(g);
    const VertexSet sc = s.complement();
    const auto& rest = sc.members();
    const Eigen::MatrixXd block = select_cols(select_rows(lap.symmetric, rest), rest);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw Error(ErrorKind::ConvergenceFailure, "reduced Laplacian eigensolver failed");
    return es.eigenvalues()(0);
}

FrameBounds frame_bounds(const Spectrum& spec, const VertexSet& s, double omega) {
    require_set_on(spec, s);
    FrameBounds fb;
    fb.dimension = spec.pw_dimension(omega);
    if (s.empty() || fb.dimension == 0) return fb;

    const Eigen::MatrixXd sampled = select_rows(spec.pw_basis(omega), s.members());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sampled.transpose() * sampled, Eigen::EigenvaluesOnly);
    fb.upper = std::max(es.eigenvalues().maxCoeff(), 0.0);
    fb.rank_tolerance = 1e-8 * fb.upper;
    const double lower = es.eigenvalues().minCoeff();
    fb.lower = lower <= fb.rank_tolerance ? 0.0 : lower;
    return fb;
}

Signal DualFrame::function(Index k) const {
    return Signal{graph_id, phi.col(k).cast<Complex>()};
}

Signal DualFrame::reconstruct(const Eigen::VectorXcd& samples_on_set) const {
    if (samples_on_set.size() != phi.cols())
        throw Error(ErrorKind::LengthMismatch, "sample vector length differs from |S|");
    return Signal{graph_id, phi.cast<Complex>() * samples_on_set};
}

DualFrame dual_frame(const Spectrum& spec, const VertexSet& s, double omega) {
    const FrameBounds fb = frame_bounds(spec, s, omega);
    if (!fb.is_sampling())
        throw Error(ErrorKind::NotSamplingSet,
                    "lower frame bound c = " + std::to_string(fb.lower) + " for omega = " + std::to_string(omega));

    const Eigen::MatrixXd basis = spec.pw_basis(omega);
    const Eigen::MatrixXd sampled = select_rows(basis, s.members());
    // A = U diag(sv) V^T has full column rank here, so A^+ = V diag(1/sv) U^T
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sampled, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::MatrixXd pinv = svd.matrixV() * svd.singularValues().cwiseInverse().asDiagonal() *
                                 svd.matrixU().transpose();

    DualFrame dual;
    dual.graph_id = spec.graph_id;
    dual.set = s;
    dual.omega = omega;
    dual.phi = basis * pinv;
    return dual;
}

UncertaintyReport uncertainty_report(const Graph& g, const Spectrum& spec, const VertexSet& s,
                                     double omega) {
    require_same_graph(g, s);
    require_set_on(spec, s);
    require_proper(s);
    const VertexSet sc = s.complement();
    const Eigen::MatrixXd basis = spec.pw_basis(omega);
    const Index d = basis.cols();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> whole(basis.transpose() * basis, Eigen::EigenvaluesOnly);
    const double scale = d > 0 ? whole.eigenvalues().maxCoeff() : 1.0;

    UncertaintyReport r;
    // supported on S  <=>  vanishes on S^c
    r.intersection_dim = d - numerical_rank(select_rows(basis, sc.members()), scale);
    r.zero_set_dim = d - numerical_rank(select_rows(basis, s.members()), scale);
    r.poincare_set = poincare_constant(g, s);
    r.poincare_complement = poincare_constant(g, sc);
    r.literal_u1 = omega * r.poincare_complement > 1.0;
    r.literal_u2 = omega * r.poincare_set > 1.0;
    const double tol = spec.tolerance();
    r.derived_support_holds = r.intersection_dim == 0 || r.poincare_set <= omega + tol;
    r.derived_zero_set_holds = r.zero_set_dim == 0 || r.poincare_complement <= omega + tol;
    return r;
}

SamplingCertificate certify(const Graph& g, const Spectrum& spec, const VertexSet& s, double omega) {
    require_same_graph(g, s);
    require_set_on(spec, s);
    SamplingCertificate cert;
    cert.set = s;
    cert.omega = omega;
    const ConnectivityMeasures cm = connectivity_measures(g, s);
    cert.K = cm.K;
    cert.D = cm.D;
    cert.poincare_complement = poincare_constant(g, s.complement());
    cert.sigma = reduced_laplacian_cutoff(g, s);
    cert.frame = frame_bounds(spec, s, omega);
    if (cert.frame.is_sampling()) cert.dual = dual_frame(spec, s, omega);
    return cert;
}

}  // namespace pwg
