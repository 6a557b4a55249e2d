#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pwgraph/graph.hpp"
#include "pwgraph/spectral.hpp"

namespace pwg {

struct ConnectivityMeasures {
    double K = 0.0;  // inf over v in S^c of w_S(v)
    double D = 0.0;  // sup over s in S of w_{S^c}(s)
};

/// Throws EmptySet / FullSet unless S is proper and nonempty.
void require_proper(const VertexSet& s);

ConnectivityMeasures connectivity_measures(const Graph& g, const VertexSet& s);

struct PoincareResult {
    double constant = 0.0;
    Signal minimizer;  // unit-norm signal supported on U attaining the constant
};

/// Lambda(U) = min over nonzero phi supported on U of ||Delta phi|| / ||phi||,
/// in the mode's norms. Zero when U = V.
PoincareResult poincare_extremal(const Graph& g, const VertexSet& u);
double poincare_constant(const Graph& g, const VertexSet& u);

/// Restriction-norm inequality relating f on S^c to its energy and its values
/// on S:
///   ||f|_{S^c}|| <= K_S^{-1/2} ||Delta^{1/2} f|| + (D_S / K_S)^{1/2} ||f|_S||
/// Restriction norms are unweighted sums of squares; ||Delta^{1/2} f||^2 is the
/// Dirichlet energy in both measure modes. The variant with
/// lhs ||f|| and ||f|_{S^c}|| on the right is reported alongside, unasserted.
struct MainInequality {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
    double literal_lhs = 0.0;
    double literal_rhs = 0.0;
    bool literal_holds = false;
};

/// Throws KZero when K_S = 0.
MainInequality main_inequality_check(const Graph& g, const Spectrum& spec, const VertexSet& s,
                                     const Signal& f);

/// Matrix of Delta (operator form) with the rows and columns of S zeroed.
Eigen::MatrixXd reduced_laplacian(const Graph& g, const VertexSet& s);

/// Smallest positive eigenvalue of the reduced Laplacian, i.e. the smallest
/// eigenvalue of its S^c x S^c block. Requires a connected graph.
double reduced_laplacian_cutoff(const Graph& g, const VertexSet& s);

struct FrameBounds {
    double lower = 0.0;  // c, snapped to 0 when below rank_tolerance
    double upper = 0.0;  // C
    Index dimension = 0;
    double rank_tolerance = 0.0;

    bool is_sampling() const noexcept { return lower > 0.0; }
};

/// Extreme eigenvalues of A*A for the sampling map A: PW_omega -> C^S.
FrameBounds frame_bounds(const Spectrum& spec, const VertexSet& s, double omega);

/// Canonical dual frame: column k of `phi` is Phi_{s_k} for the k-th member of S.
struct DualFrame {
    std::uint64_t graph_id = 0;
    VertexSet set;
    double omega = 0.0;
    Eigen::MatrixXd phi;  // |V| x |S|

    Signal function(Index k) const;

    /// sum_s samples(s) Phi_s. For f in PW_omega this is f itself; otherwise it
    /// is the PW_omega function whose values on S best fit the samples.
    Signal reconstruct(const Eigen::VectorXcd& samples_on_set) const;
};

/// Throws NotSamplingSet when the lower frame bound is numerically zero.
DualFrame dual_frame(const Spectrum& spec, const VertexSet& s, double omega);

/// Values of f on S, in set order.
Eigen::VectorXcd restrict_to(const Signal& f, const VertexSet& s);

struct UncertaintyReport {
    Index intersection_dim = 0;  // dim(L2(S) cap PW_omega)
    Index zero_set_dim = 0;      // dim of PW_omega functions vanishing on S
    double poincare_set = 0.0;         // Lambda(S)
    double poincare_complement = 0.0;  // Lambda(S^c)
    bool literal_u1 = false;  // omega * Lambda(S^c) > 1
    bool literal_u2 = false;  // omega * Lambda(S) > 1
    // provable forms: a nontrivial PW_omega function supported on U forces
    // Lambda(U) <= omega
    bool derived_support_holds = true;
    bool derived_zero_set_holds = true;
};

UncertaintyReport uncertainty_report(const Graph& g, const Spectrum& spec, const VertexSet& s,
                                     double omega);

struct SamplingCertificate {
    VertexSet set;
    double omega = 0.0;
    double K = 0.0;
    double D = 0.0;
    double poincare_complement = 0.0;
    double sigma = 0.0;
    FrameBounds frame;
    std::optional<DualFrame> dual;  // present iff frame.lower > 0
};

SamplingCertificate certify(const Graph& g, const Spectrum& spec, const VertexSet& s, double omega);

}  // namespace pwg
