#pragma once

#include <optional>

#include <Eigen/Dense>

#include "pwgraph/graph.hpp"
#include "pwgraph/sampling.hpp"
#include "pwgraph/spectral.hpp"

namespace pwg {

/// Values g(k pi / omega, s) for |k| <= K and s in S, optionally with (Delta f)|_S.
struct SpaceTimeSamples {
    std::uint64_t graph_id = 0;
    VertexSet set;
    double omega = 0.0;
    int K = 0;
    Eigen::MatrixXcd values;  // row k + K, column = position of s in set
    std::optional<Eigen::VectorXcd> laplacian_on_set;

    Complex at(int k, Index set_pos) const { return values(k + K, set_pos); }
};

/// Relative out-of-band energy above which an initial datum is rejected.
inline constexpr double kBandlimitTolerance = 1e-8;

/// Samples the exact evolution of f on S x {k pi / omega}. Throws NotBandlimited
/// if f has energy above omega.
SpaceTimeSamples take_spacetime_samples(const Spectrum& spec, const Signal& f, const VertexSet& s,
                                        double omega, int K);

struct ReconstructOptions {
    /// Derive (Delta f)|_S from the t = 0 samples when it is not supplied.
    bool derive_laplacian = true;
};

/// Recovers g(t, .) from space-time samples and a sampling certificate for
/// (S, omega): g(t, v) = sum_s h_s(t) Phi_s(v), with h_s the truncated
/// time interpolant of the samples at s.
/// Throws NotSamplingSet (no dual frame) or MissingLaplacianData.
Signal reconstruct_spacetime(const Spectrum& spec, const SpaceTimeSamples& samples,
                             const SamplingCertificate& cert, double t, ReconstructOptions opts = {});

Complex reconstruct_spacetime_at(const Spectrum& spec, const SpaceTimeSamples& samples,
                                 const SamplingCertificate& cert, double t, Index v,
                                 ReconstructOptions opts = {});

/// (Delta f)|_S derived from f = sum_s g(0, s) Phi_s.
Eigen::VectorXcd derive_laplacian_on_set(const Spectrum& spec, const SpaceTimeSamples& samples,
                                         const DualFrame& dual);

}  // namespace pwg
