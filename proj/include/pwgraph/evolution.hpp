#pragma once

#include <vector>

#include "pwgraph/graph.hpp"
#include "pwgraph/spectral.hpp"

namespace pwg {

/// sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// g(t) = e^{it Delta} f, the solution of dg/dt = i Delta g with g(0) = f.
Signal evolve(const Spectrum& spec, const Signal& f, double t);

/// Scalar weights of the truncated Valiron-Tschakaloff series at time t:
///   F(t) ~ derivative * F'(0) + value * F(0) + sum_k node[k] * F(k pi / omega)
/// over 0 < |k| <= K. node is indexed by k + K (the k = 0 slot is unused, 0).
struct VTWeights {
    double derivative = 0.0;  // t sinc(omega t / pi)
    double value = 0.0;       // sinc(omega t / pi)
    std::vector<double> node;
};

VTWeights vt_weights(double omega, int K, double t);

/// Evolution sampled on the grid t_k = k pi / omega for |k| <= K.
struct TimeSamples {
    std::uint64_t graph_id = 0;
    double omega = 0.0;
    int K = 0;
    std::vector<Signal> samples;  // index k + K
    Signal f0;
    Signal laplacian_f0;
    Eigen::VectorXd measure;

    const Signal& at(int k) const { return samples.at(static_cast<std::size_t>(k + K)); }
    double time_of(int k) const;
};

TimeSamples collect_time_samples(const Spectrum& spec, const Signal& f, double omega, int K);

/// Truncated vector-valued interpolation from f, Delta f and the grid samples.
/// Throws NotBandlimited if ||Delta f|| > (1 + 1e-6) omega ||f||.
Signal vt_interpolate(const TimeSamples& samples, double t);

/// ||Delta|| = lambda_max; every f in L2(G) is admissible with omega >= this.
double operator_norm_bandwidth(const Spectrum& spec);

}  // namespace pwg
