#include "pwgraph/evolution.hpp"

#include <cmath>
#include <numbers>

namespace pwg {

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

Signal evolve(const Spectrum& spec, const Signal& f, double t) {
    if (t == 0.0) {
        require_same_graph(spec, f);
        return f;
    }
    Eigen::VectorXcd c = fourier(spec, f);
    for (Index j = 0; j < c.size(); ++j) c(j) *= std::polar(1.0, t * spec.eigenvalues(j));
    return inverse_fourier(spec, c);
}

VTWeights vt_weights(double omega, int K, double t) {
    if (!(omega > 0.0)) throw Error(ErrorKind::BadSizes, "omega must be positive");
    if (K < 0) throw Error(ErrorKind::BadSizes, "K must be nonnegative");
    const double x = omega * t / std::numbers::pi;
    VTWeights w;
    w.value = sinc(x);
    w.derivative = t * w.value;
    w.node.assign(static_cast<std::size_t>(2 * K + 1), 0.0);
    for (int k = -K; k <= K; ++k) {
        if (k == 0) continue;
        w.node[static_cast<std::size_t>(k + K)] = (x / k) * sinc(x - k);
    }
    return w;
}

double TimeSamples::time_of(int k) const { return k * std::numbers::pi / omega; }

TimeSamples collect_time_samples(const Spectrum& spec, const Signal& f, double omega, int K) {
    if (!(omega > 0.0)) throw Error(ErrorKind::BadSizes, "omega must be positive");
    if (K < 0) throw Error(ErrorKind::BadSizes, "K must be nonnegative");
    TimeSamples ts;
    ts.graph_id = spec.graph_id;
    ts.omega = omega;
    ts.K = K;
    ts.measure = spec.measure;
    ts.f0 = f;
    ts.laplacian_f0 = apply_power(spec, f, 1.0);

    const Eigen::VectorXcd c = fourier(spec, f);
    ts.samples.reserve(static_cast<std::size_t>(2 * K + 1));
    for (int k = -K; k <= K; ++k) {
        if (k == 0) {
            ts.samples.push_back(f);
            continue;
        }
        const double t = ts.time_of(k);
        Eigen::VectorXcd ck = c;
        for (Index j = 0; j < ck.size(); ++j) ck(j) *= std::polar(1.0, t * spec.eigenvalues(j));
        ts.samples.push_back(inverse_fourier(spec, ck));
    }
    return ts;
}

Signal vt_interpolate(const TimeSamples& ts, double t) {
    const double fnorm = weighted_norm(ts.measure, ts.f0.values);
    const double lnorm = weighted_norm(ts.measure, ts.laplacian_f0.values);
    if (lnorm > (1.0 + 1e-6) * ts.omega * fnorm)
        throw Error(ErrorKind::NotBandlimited, "||Delta f|| / (omega ||f||) = " +
                                                   std::to_string(lnorm / (ts.omega * fnorm)));

    const VTWeights w = vt_weights(ts.omega, ts.K, t);
    // F'(0) = i Delta f
    Eigen::VectorXcd out = Complex(0.0, w.derivative) * ts.laplacian_f0.values + w.value * ts.f0.values;
    for (int k = 1; k <= ts.K; ++k) {
        out += w.node[static_cast<std::size_t>(ts.K + k)] * ts.at(k).values;
        out += w.node[static_cast<std::size_t>(ts.K - k)] * ts.at(-k).values;
    }
    return Signal{ts.graph_id, std::move(out)};
}

double operator_norm_bandwidth(const Spectrum& spec) { return spec.lambda_max(); }

}  // namespace pwg
