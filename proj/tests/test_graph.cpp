#include <gtest/gtest.h>

#include <random>

#include "pwgraph/generators.hpp"
#include "pwgraph/graph.hpp"
#include "support.hpp"

using namespace pwg;

namespace {

Graph p3(MeasureMode mode = MeasureMode::Counting) {
    const std::vector<EdgeSpec> edges{{"0", "1", 1.0}, {"1", "2", 1.0}};
    return Graph::build(edges, mode);
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::Parse;
}

}  // namespace

TEST(BuildGraph, SingleEdge) {
    const std::vector<EdgeSpec> edges{{"a", "b", 1.0}};
    const Graph g = Graph::build(edges, MeasureMode::Counting);
    ASSERT_EQ(g.size(), 2);
    EXPECT_EQ(g.vertices(), (std::vector<std::string>{"a", "b"}));
    EXPECT_DOUBLE_EQ(g.degree("a"), 1.0);
    EXPECT_DOUBLE_EQ(g.degree("b"), 1.0);
}

TEST(BuildGraph, PathDegrees) {
    const Graph g = p3();
    EXPECT_DOUBLE_EQ(g.degree("0"), 1.0);
    EXPECT_DOUBLE_EQ(g.degree("1"), 2.0);
    EXPECT_DOUBLE_EQ(g.degree("2"), 1.0);
    EXPECT_EQ(g.edges().size(), 2u);
}

TEST(BuildGraph, ContractErrors) {
    EXPECT_EQ(kind_of([] {
                  const std::vector<EdgeSpec> e{{"a", "b", 1.0}, {"b", "a", 2.0}};
                  Graph::build(e, MeasureMode::Counting);
              }),
              ErrorKind::AsymmetricWeight);
    EXPECT_EQ(kind_of([] {
                  const std::vector<EdgeSpec> e{{"a", "b", 1.0}, {"a", "b", 1.0}};
                  Graph::build(e, MeasureMode::Counting);
              }),
              ErrorKind::DuplicateEdge);
    EXPECT_EQ(kind_of([] {
                  const std::vector<EdgeSpec> e{{"a", "b", -0.5}};
                  Graph::build(e, MeasureMode::Counting);
              }),
              ErrorKind::NegativeWeight);
    EXPECT_EQ(kind_of([] {
                  const std::vector<EdgeSpec> e{{"a", "a", 1.0}};
                  Graph::build(e, MeasureMode::Counting);
              }),
              ErrorKind::SelfLoop);
    EXPECT_EQ(kind_of([] { p3().degree("zz"); }), ErrorKind::UnknownVertex);
}

TEST(BuildGraph, SymmetricRestatementAndZeroWeights) {
    const std::vector<EdgeSpec> e{{"a", "b", 2.0}, {"b", "a", 2.0}, {"b", "c", 0.0}};
    const Graph g = Graph::build(e, MeasureMode::Counting);
    EXPECT_EQ(g.size(), 3);  // c still a vertex
    EXPECT_EQ(g.edges().size(), 1u);
    EXPECT_DOUBLE_EQ(g.weight(0, 1), 2.0);
    EXPECT_DOUBLE_EQ(g.degree("c"), 0.0);
}

TEST(BuildGraph, NumericAwareOrder) {
    const std::vector<EdgeSpec> e{{"10", "9", 1.0}, {"b", "10", 1.0}, {"a", "2", 1.0}};
    const Graph g = Graph::build(e, MeasureMode::Counting);
    EXPECT_EQ(g.vertices(), (std::vector<std::string>{"2", "9", "10", "a", "b"}));
}

TEST(BuildGraph, IdentityIsContentBased) {
    EXPECT_EQ(p3().id(), p3().id());
    EXPECT_NE(p3().id(), p3(MeasureMode::Degree).id());
    EXPECT_NE(p3().id(), make_path(4).id());
}

TEST(InnerProduct, CountingAndDegree) {
    const Graph c = p3();
    const Graph d = p3(MeasureMode::Degree);
    EXPECT_NEAR(std::abs(inner_product(c, constant_signal(c, 1.0), constant_signal(c, 1.0)) - 3.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(inner_product(d, constant_signal(d, 1.0), constant_signal(d, 1.0)) - 4.0), 0.0, 1e-15);
}

TEST(InnerProduct, ConjugateLinearInSecondArgument) {
    const Graph g = p3();
    Eigen::VectorXcd a(3), b(3);
    a << Complex(1, 1), 2.0, Complex(0, -1);
    b << Complex(0, 1), 1.0, 1.0;
    // sum a conj(b) = (1+i)(-i) + 2 + (-i) = 1 - i + 2 - i
    const Complex ip = inner_product(g, make_signal(g, a), make_signal(g, b));
    EXPECT_NEAR(std::abs(ip - Complex(3.0, -2.0)), 0.0, 1e-15);
}

TEST(InnerProduct, GraphMismatch) {
    const Graph a = p3();
    const Graph b = make_path(4);
    EXPECT_EQ(kind_of([&] { inner_product(a, constant_signal(a, 1.0), constant_signal(b, 1.0)); }),
              ErrorKind::GraphMismatch);
}

TEST(ApplyLaplacian, ConstantIsHarmonic) {
    for (auto mode : {MeasureMode::Counting, MeasureMode::Degree}) {
        const Graph g = make_complete_bipartite(5, 3, mode).graph;
        EXPECT_LE(apply_laplacian(g, constant_signal(g, Complex(2.0, -1.0))).values.norm(), 1e-14);
    }
}

TEST(ApplyLaplacian, PathDelta) {
    const Graph g = p3();
    const Signal out = apply_laplacian(g, delta_signal(g, 0));
    EXPECT_EQ(out(0), Complex(1.0));
    EXPECT_EQ(out(1), Complex(-1.0));
    EXPECT_EQ(out(2), Complex(0.0));
}

TEST(ApplyLaplacian, BipartiteIndicatorMatchesDenseOracle) {
    const auto [g, s] = make_complete_bipartite(5, 3);
    Eigen::VectorXcd ind = Eigen::VectorXcd::Zero(g.size());
    for (Index v : s.complement().members()) ind(v) = 1.0;
    const Signal out = apply_laplacian(g, make_signal(g, ind));
    const Eigen::VectorXcd oracle = oracles::combinatorial_laplacian_oracle(g).cast<Complex>() * ind;
    EXPECT_LE((out.values - oracle).norm(), 1e-14);
    for (Index v : s.complement().members()) EXPECT_DOUBLE_EQ(out(v).real(), 5.0);
    for (Index v : s.members()) EXPECT_DOUBLE_EQ(out(v).real(), -3.0);
}

TEST(ApplyLaplacian, IsolatedVertexInDegreeMode) {
    const std::vector<EdgeSpec> e{{"a", "b", 1.0}};
    const std::vector<std::string> extra{"c"};
    const Graph g = Graph::build(e, MeasureMode::Degree, extra);
    EXPECT_EQ(kind_of([&] { apply_laplacian(g, constant_signal(g, 1.0)); }), ErrorKind::IsolatedVertex);
    EXPECT_EQ(kind_of([&] { laplacian_matrix(g); }), ErrorKind::IsolatedVertex);
    // counting mode is fine with isolated vertices
    const Graph c = g.with_mode(MeasureMode::Counting);
    EXPECT_LE(apply_laplacian(c, constant_signal(c, 1.0)).values.norm(), 0.0);
}

TEST(LaplacianMatrix, PathExact) {
    Eigen::MatrixXd expected(3, 3);
    expected << 1, -1, 0, -1, 2, -1, 0, -1, 1;
    const LaplacianMatrix m = laplacian_matrix(p3());
    EXPECT_EQ(m.op, expected);
    EXPECT_EQ(m.symmetric, expected);
    EXPECT_LE((m.op * Eigen::VectorXd::Ones(3)).norm(), 0.0);
}

TEST(LaplacianMatrix, AgreesWithOperatorOnRandomSignals) {
    std::mt19937_64 rng(7);
    for (auto mode : {MeasureMode::Counting, MeasureMode::Degree}) {
        const Graph g = make_erdos_renyi_weighted(25, 0.3, 0.5, 2.0, 11, mode).graph;
        const LaplacianMatrix m = laplacian_matrix(g);
        for (int i = 0; i < 100; ++i) {
            const Signal f = random_signal(g, rng);
            const Eigen::VectorXcd direct = apply_laplacian(g, f).values;
            const Eigen::VectorXcd dense = m.op.cast<Complex>() * f.values;
            EXPECT_LE((direct - dense).norm(), 1e-12 * std::max(1.0, direct.norm()));
        }
    }
}

// Self-adjointness, positivity and kernel on random connected graphs, both modes.
TEST(LaplacianProperties, SelfAdjointPositiveKernel) {
    std::mt19937_64 rng(2024);
    for (auto mode : {MeasureMode::Counting, MeasureMode::Degree}) {
        for (const auto& gen : oracles::random_family(8, 99, mode)) {
            const Graph& g = gen.graph;
            for (int i = 0; i < 10; ++i) {
                const Signal f = random_signal(g, rng);
                const Signal h = random_signal(g, rng);
                const Complex lhs = inner_product(g, apply_laplacian(g, f), h);
                const Complex rhs = inner_product(g, f, apply_laplacian(g, h));
                EXPECT_LE(std::abs(lhs - rhs), 1e-10 * norm(g, f) * norm(g, h));

                const Complex q = inner_product(g, apply_laplacian(g, f), f);
                EXPECT_GE(q.real(), -1e-12 * std::pow(norm(g, f), 2));
                EXPECT_LE(std::abs(q.imag()), 1e-10 * std::pow(norm(g, f), 2));

                // real signals too
                Eigen::VectorXcd r = f.values.real().cast<Complex>();
                const Signal fr{g.id(), r};
                EXPECT_GE(inner_product(g, apply_laplacian(g, fr), fr).real(), -1e-12 * std::pow(norm(g, fr), 2));

                // kernel: nonconstant f is not harmonic
                EXPECT_GT(norm(g, apply_laplacian(g, f)), 1e-10);
            }
            std::normal_distribution<double> gauss;
            const Complex c(gauss(rng), gauss(rng));
            EXPECT_LE(norm(g, apply_laplacian(g, constant_signal(g, c))), 1e-10);
        }
    }
}

TEST(VertexSetTest, ComplementAndNames) {
    const Graph g = make_path(5);
    const std::vector<std::string> names{"3", "1"};
    const VertexSet s = VertexSet::from_names(g, names);
    EXPECT_EQ(s.members(), (std::vector<Index>{1, 3}));
    EXPECT_EQ(s.complement().members(), (std::vector<Index>{0, 2, 4}));
    EXPECT_EQ(s.names(g), (std::vector<std::string>{"1", "3"}));
    EXPECT_TRUE(VertexSet::all(g).is_full());
    EXPECT_TRUE(VertexSet::all(g).complement().empty());
}
