#include "pwgraph/spacetime.hpp"

#include <cmath>
#include <numbers>

#include "pwgraph/evolution.hpp"

namespace pwg {

namespace {

const DualFrame& require_dual(const SpaceTimeSamples& samples, const SamplingCertificate& cert) {
    if (!cert.dual)
        throw Error(ErrorKind::NotSamplingSet, "certificate has no dual frame (c = " +
                                                   std::to_string(cert.frame.lower) + ")");
    if (!(cert.set == samples.set))
        throw Error(ErrorKind::GraphMismatch, "certificate and samples use different vertex sets");
    if (cert.omega != samples.omega)
        throw Error(ErrorKind::NotSamplingSet, "certificate omega differs from sample bandwidth");
    return *cert.dual;
}

Eigen::VectorXcd time_interpolants(const Spectrum& spec, const SpaceTimeSamples& samples,
                                   const DualFrame& dual, double t, ReconstructOptions opts) {
    Eigen::VectorXcd lap;
    if (samples.laplacian_on_set) {
        lap = *samples.laplacian_on_set;
    } else if (opts.derive_laplacian) {
        lap = derive_laplacian_on_set(spec, samples, dual);
    } else {
        throw Error(ErrorKind::MissingLaplacianData, "(Delta f)|_S absent and derivation disabled");
    }

    const VTWeights w = vt_weights(samples.omega, samples.K, t);
    const int K = samples.K;
    Eigen::VectorXcd h = Complex(0.0, w.derivative) * lap + w.value * samples.values.row(K).transpose();
    for (int k = 1; k <= K; ++k) {
        h += w.node[static_cast<std::size_t>(K + k)] * samples.values.row(K + k).transpose();
        h += w.node[static_cast<std::size_t>(K - k)] * samples.values.row(K - k).transpose();
    }
    return h;
}

}  // namespace

SpaceTimeSamples take_spacetime_samples(const Spectrum& spec, const Signal& f, const VertexSet& s,
                                        double omega, int K) {
    if (s.graph_id() != spec.graph_id) throw Error(ErrorKind::GraphMismatch, "vertex set and spectrum differ in graph");
    if (!(omega > 0.0)) throw Error(ErrorKind::BadSizes, "omega must be positive");
    if (K < 0) throw Error(ErrorKind::BadSizes, "K must be nonnegative");

    const Eigen::VectorXcd c = fourier(spec, f);
    const Index d = spec.pw_dimension(omega);
    const double outside = c.tail(spec.size() - d).norm();
    if (outside > kBandlimitTolerance * c.norm())
        throw Error(ErrorKind::NotBandlimited, "energy above omega: " + std::to_string(outside));

    SpaceTimeSamples st;
    st.graph_id = spec.graph_id;
    st.set = s;
    st.omega = omega;
    st.K = K;
    st.values.resize(2 * K + 1, s.size());
    for (int k = -K; k <= K; ++k) {
        const Signal g = k == 0 ? f : evolve(spec, f, k * std::numbers::pi / omega);
        st.values.row(k + K) = restrict_to(g, s).transpose();
    }
    st.laplacian_on_set = restrict_to(apply_power(spec, f, 1.0), s);
    return st;
}

Eigen::VectorXcd derive_laplacian_on_set(const Spectrum& spec, const SpaceTimeSamples& samples,
                                         const DualFrame& dual) {
    const Signal f = dual.reconstruct(samples.values.row(samples.K).transpose());
    return restrict_to(apply_power(spec, f, 1.0), samples.set);
}

Signal reconstruct_spacetime(const Spectrum& spec, const SpaceTimeSamples& samples,
                             const SamplingCertificate& cert, double t, ReconstructOptions opts) {
    const DualFrame& dual = require_dual(samples, cert);
    return dual.reconstruct(time_interpolants(spec, samples, dual, t, opts));
}

Complex reconstruct_spacetime_at(const Spectrum& spec, const SpaceTimeSamples& samples,
                                 const SamplingCertificate& cert, double t, Index v,
                                 ReconstructOptions opts) {
    const DualFrame& dual = require_dual(samples, cert);
    const Eigen::VectorXcd h = time_interpolants(spec, samples, dual, t, opts);
    Complex acc = 0.0;
    for (Index k = 0; k < h.size(); ++k) acc += h(k) * dual.phi(v, k);
    return acc;
}

}  // namespace pwg
