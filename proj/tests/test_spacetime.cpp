#include <gtest/gtest.h>

#include <random>

#include "pwgraph/evolution.hpp"
#include "pwgraph/generators.hpp"
#include "pwgraph/spacetime.hpp"
#include "support.hpp"

using namespace pwg;

namespace {

struct Fixture {
    Bipartite b = make_complete_bipartite(5, 3);
    Spectrum spec = eigendecompose(b.graph);
    SamplingCertificate cert = certify(b.graph, spec, b.big_side, 4.0);
};

}  // namespace

TEST(TakeSamples, ShapeAndValues) {
    std::mt19937_64 rng(1);
    Fixture fx;
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, 20);
    EXPECT_EQ(st.values.rows(), 41);
    EXPECT_EQ(st.values.cols(), 5);
    EXPECT_EQ(st.values.row(20).transpose(), restrict_to(f, fx.b.big_side));
    for (int k = -20; k <= 20; k += 7) {
        const Signal g = evolve(fx.spec, f, k * std::numbers::pi / 4.0);
        for (Index p = 0; p < 5; ++p) EXPECT_LE(std::abs(st.at(k, p) - g(fx.b.big_side.members()[static_cast<std::size_t>(p)])), 1e-12);
    }
    ASSERT_TRUE(st.laplacian_on_set.has_value());
    EXPECT_LE((*st.laplacian_on_set - restrict_to(apply_laplacian(fx.b.graph, f), fx.b.big_side)).norm(), 1e-12);
}

TEST(TakeSamples, RejectsOutOfBand) {
    std::mt19937_64 rng(2);
    Fixture fx;
    try {
        take_spacetime_samples(fx.spec, random_signal(fx.b.graph, rng), fx.b.big_side, 4.0, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotBandlimited);
    }
}

TEST(Reconstruct, TimeZeroReproducesSignal) {
    std::mt19937_64 rng(3);
    Fixture fx;
    for (int i = 0; i < 10; ++i) {
        const Signal f = random_pw_signal(fx.spec, 4.0, rng);
        const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, 5);
        EXPECT_LE(oracles::rel_err(reconstruct_spacetime(fx.spec, st, fx.cert, 0.0).values, f.values), 1e-8);
    }
}

TEST(Reconstruct, MatchesEvolution) {
    std::mt19937_64 rng(4);
    Fixture fx;
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    const Signal exact = evolve(fx.spec, f, 0.7);
    double prev = 1e300;
    for (int K : {250, 500, 1000, 2000}) {
        const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, K);
        const double err = oracles::rel_err(reconstruct_spacetime(fx.spec, st, fx.cert, 0.7).values, exact.values);
        EXPECT_LE(err, 1.1 * prev) << K;
        prev = err;
    }
    EXPECT_LE(prev, 5e-3);
}

TEST(Reconstruct, ConstantIsStationary) {
    Fixture fx;
    const Signal f = constant_signal(fx.b.graph, Complex(1.5, -0.5));
    // truncation tail of the constant mode decays like K^-2
    for (double t : {-0.6, 0.2, 0.77}) {
        double prev = 1e300;
        for (int K : {10, 100, 1000, 10000}) {
            const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, K);
            const double err = oracles::rel_err(reconstruct_spacetime(fx.spec, st, fx.cert, t).values, f.values);
            EXPECT_LT(err, prev) << t << " " << K;
            prev = err;
        }
        EXPECT_LE(prev, 1e-8) << t;
    }
}

TEST(Reconstruct, GridConsistencyOnSet) {
    std::mt19937_64 rng(5);
    Fixture fx;
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, 12);
    for (int m = -12; m <= 12; ++m) {
        const Signal g = reconstruct_spacetime(fx.spec, st, fx.cert, m * std::numbers::pi / 4.0);
        const Eigen::VectorXcd on_set = restrict_to(g, fx.b.big_side);
        EXPECT_LE(oracles::rel_err(on_set, st.values.row(m + 12).transpose()), 1e-8) << m;
    }
}

TEST(Reconstruct, DerivedLaplacianAgreesWithProvided) {
    std::mt19937_64 rng(6);
    Fixture fx;
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, 30);
    const Eigen::VectorXcd derived = derive_laplacian_on_set(fx.spec, st, *fx.cert.dual);
    EXPECT_LE(oracles::rel_err(derived, *st.laplacian_on_set), 1e-9);

    const Signal with = reconstruct_spacetime(fx.spec, st, fx.cert, 0.45);
    st.laplacian_on_set.reset();
    const Signal without = reconstruct_spacetime(fx.spec, st, fx.cert, 0.45);
    EXPECT_LE(oracles::rel_err(without.values, with.values), 1e-9);

    try {
        reconstruct_spacetime(fx.spec, st, fx.cert, 0.45, ReconstructOptions{false});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MissingLaplacianData);
    }
}

TEST(Reconstruct, Linearity) {
    std::mt19937_64 rng(7);
    Fixture fx;
    const Signal f1 = random_pw_signal(fx.spec, 4.0, rng);
    const Signal f2 = random_pw_signal(fx.spec, 4.0, rng);
    const Complex a(0.7, -1.2);
    const SpaceTimeSamples s1 = take_spacetime_samples(fx.spec, f1, fx.b.big_side, 4.0, 15);
    const SpaceTimeSamples s2 = take_spacetime_samples(fx.spec, f2, fx.b.big_side, 4.0, 15);
    SpaceTimeSamples mix = s1;
    mix.values = a * s1.values + s2.values;
    mix.laplacian_on_set = a * *s1.laplacian_on_set + *s2.laplacian_on_set;
    const double t = -0.33;
    const Eigen::VectorXcd lhs = reconstruct_spacetime(fx.spec, mix, fx.cert, t).values;
    const Eigen::VectorXcd rhs = a * reconstruct_spacetime(fx.spec, s1, fx.cert, t).values +
                                 reconstruct_spacetime(fx.spec, s2, fx.cert, t).values;
    EXPECT_LE(oracles::rel_err(lhs, rhs), 1e-12);
}

TEST(Reconstruct, PointwiseMatchesFull) {
    std::mt19937_64 rng(8);
    Fixture fx;
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, fx.b.big_side, 4.0, 40);
    const Signal full = reconstruct_spacetime(fx.spec, st, fx.cert, 0.21);
    for (Index v = 0; v < fx.b.graph.size(); ++v)
        EXPECT_LE(std::abs(reconstruct_spacetime_at(fx.spec, st, fx.cert, 0.21, v) - full(v)), 1e-12);
}

TEST(Reconstruct, RequiresSamplingCertificate) {
    std::mt19937_64 rng(9);
    Fixture fx;
    const VertexSet small = fx.b.big_side.complement();
    const SamplingCertificate none = certify(fx.b.graph, fx.spec, small, 4.0);
    const Signal f = random_pw_signal(fx.spec, 4.0, rng);
    const SpaceTimeSamples st = take_spacetime_samples(fx.spec, f, small, 4.0, 3);
    try {
        reconstruct_spacetime(fx.spec, st, none, 0.1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotSamplingSet);
    }
    // certificate for a different set
    EXPECT_THROW(reconstruct_spacetime(fx.spec, st, fx.cert, 0.1), Error);
}
