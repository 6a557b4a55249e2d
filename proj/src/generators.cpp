#include "pwgraph/generators.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "pwgraph/sampling.hpp"

namespace pwg {

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::CompleteBipartite: return "complete_bipartite";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::ErdosRenyiWeighted: return "erdos_renyi_weighted";
    }
    return "unknown";
}

Family parse_family(std::string_view text) {
    if (text == "complete_bipartite" || text == "bipartite") return Family::CompleteBipartite;
    if (text == "path") return Family::Path;
    if (text == "cycle") return Family::Cycle;
    if (text == "erdos_renyi_weighted" || text == "erdos-renyi") return Family::ErdosRenyiWeighted;
    throw Error(ErrorKind::Parse, "unknown generator family '" + std::string(text) + "'");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Bipartite make_complete_bipartite(int N, int M, MeasureMode mode) {
    if (!(N > M && M >= 1))
        throw Error(ErrorKind::BadSizes, "complete bipartite needs N > M >= 1, got N=" + std::to_string(N) +
                                             " M=" + std::to_string(M));
    std::vector<EdgeSpec> edges;
    for (int a = 0; a < N; ++a)
        for (int b = N; b < N + M; ++b) edges.push_back({std::to_string(a), std::to_string(b), 1.0});
    Graph g = Graph::build(edges, mode);
    std::vector<Index> side;
    for (int a = 0; a < N; ++a) side.push_back(g.index_of(std::to_string(a)));
    VertexSet s(g, std::move(side));
    return {std::move(g), std::move(s)};
}

Graph make_path(int n, MeasureMode mode) {
    if (n < 2) throw Error(ErrorKind::BadSizes, "path needs n >= 2");
    std::vector<EdgeSpec> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1), 1.0});
    return Graph::build(edges, mode);
}

Graph make_cycle(int n, MeasureMode mode) {
    if (n < 3) throw Error(ErrorKind::BadSizes, "cycle needs n >= 3");
    std::vector<EdgeSpec> edges;
    for (int i = 0; i < n; ++i) edges.push_back({std::to_string(i), std::to_string((i + 1) % n), 1.0});
    return Graph::build(edges, mode);
}

GeneratedGraph make_erdos_renyi_weighted(int n, double p, double w_min, double w_max, std::uint64_t seed,
                                         MeasureMode mode) {
    if (n < 2) throw Error(ErrorKind::BadSizes, "random graph needs n >= 2");
    if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorKind::BadSizes, "edge probability must be in (0, 1]");
    if (!(w_min > 0.0 && w_min <= w_max)) throw Error(ErrorKind::BadSizes, "weight range must satisfy 0 < w_min <= w_max");

    constexpr int kMaxAttempts = 1000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        const std::uint64_t subseed = splitmix64(seed + static_cast<std::uint64_t>(attempt));
        std::mt19937_64 rng(subseed);
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        std::uniform_real_distribution<double> weight(w_min, w_max);
        std::vector<EdgeSpec> edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng) < p) edges.push_back({std::to_string(a), std::to_string(b), weight(rng)});

        std::vector<std::string> all;
        for (int a = 0; a < n; ++a) all.push_back(std::to_string(a));
        Graph g = Graph::build(edges, mode, all);
        if (g.is_connected() && !g.has_isolated_vertex())
            return GeneratedGraph{std::move(g), std::nullopt, subseed, attempt + 1};
    }
    throw Error(ErrorKind::BadSizes, "no connected draw after " + std::to_string(kMaxAttempts) + " attempts");
}

GeneratedGraph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::CompleteBipartite: {
            auto b = make_complete_bipartite(spec.N, spec.M, spec.mode);
            return GeneratedGraph{std::move(b.graph), std::move(b.big_side), spec.seed, 1};
        }
        case Family::Path: return GeneratedGraph{make_path(spec.n, spec.mode), std::nullopt, spec.seed, 1};
        case Family::Cycle: return GeneratedGraph{make_cycle(spec.n, spec.mode), std::nullopt, spec.seed, 1};
        case Family::ErdosRenyiWeighted:
            return make_erdos_renyi_weighted(spec.n, spec.p, spec.w_min, spec.w_max, spec.seed, spec.mode);
    }
    throw Error(ErrorKind::BadSizes, "unknown family");
}

Signal random_signal(std::uint64_t graph_id, Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd x(n);
    for (Index i = 0; i < n; ++i) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        x(i) = Complex(re, im);
    }
    return Signal{graph_id, std::move(x)};
}

Signal random_signal(const Graph& g, std::mt19937_64& rng) { return random_signal(g.id(), g.size(), rng); }

Signal random_pw_signal(const Spectrum& spec, double omega, std::mt19937_64& rng) {
    const Index d = spec.pw_dimension(omega);
    Eigen::VectorXcd c = random_signal(spec.graph_id, spec.size(), rng).values;
    c.tail(spec.size() - d).setZero();
    return inverse_fourier(spec, c);
}

Multiset bipartite_reference_spectrum(int N, int M) {
    if (!(N > M && M >= 1)) throw Error(ErrorKind::BadSizes, "reference spectrum needs N > M >= 1");
    Multiset out;
    out.emplace_back(0.0, 1);
    if (N - 1 > 0) out.emplace_back(static_cast<double>(M), N - 1);
    if (M - 1 > 0) out.emplace_back(static_cast<double>(N), M - 1);
    out.emplace_back(static_cast<double>(N + M), 1);
    return out;
}

Multiset cluster_eigenvalues(const Eigen::VectorXd& eigenvalues, double rel_tol) {
    Multiset out;
    if (eigenvalues.size() == 0) return out;
    const double tol = rel_tol * std::max(1.0, eigenvalues.maxCoeff());
    Index start = 0;
    for (Index i = 1; i <= eigenvalues.size(); ++i) {
        if (i == eigenvalues.size() || eigenvalues(i) - eigenvalues(i - 1) > tol) {
            const int count = static_cast<int>(i - start);
            out.emplace_back(eigenvalues.segment(start, count).mean(), count);
            start = i;
        }
    }
    return out;
}

bool LemmaReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const ReportItem& it) { return it.pass; });
}

LemmaReport lemma_sharpness_report(int N, int M) {
    const auto [g, s] = make_complete_bipartite(N, M);
    const Spectrum spec = eigendecompose(g);
    const double n = static_cast<double>(N);
    constexpr double tol = 1e-9;

    LemmaReport r;
    r.N = N;
    r.M = M;

    {
        const double lambda = poincare_constant(g, s.complement());
        const double k = connectivity_measures(g, s).K;
        const double sigma = reduced_laplacian_cutoff(g, s);
        const double res = std::max({std::abs(lambda - n), std::abs(k - n), std::abs(sigma - n)});
        r.items.push_back({"poincare constant of complement = K_S = sigma = N", res <= tol, res});
    }
    {
        // rank of the first N eigenvectors restricted to S
        const Eigen::MatrixXd restricted = [&] {
            Eigen::MatrixXd m(s.size(), N);
            for (Index i = 0; i < s.size(); ++i)
                m.row(i) = spec.eigenvectors.row(s.members()[static_cast<std::size_t>(i)]).head(N);
            return m;
        }();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(restricted);
        const double smin = svd.singularValues()(N - 1);
        const double smax = svd.singularValues()(0);
        r.items.push_back({"S is a uniqueness set for span{e_0..e_{N-1}}", smin > 1e-8 * smax, smin});
    }
    {
        const Index count = eigenvalue_count(spec, 0.0, n, Endpoint::Closed, Endpoint::Open);
        r.items.push_back({"N[0, N) = N", count == N, std::abs(static_cast<double>(count - N))});
    }
    {
        const Index count = eigenvalue_count(spec, n, spec.lambda_max(), Endpoint::Closed, Endpoint::Closed);
        r.items.push_back({"N[N, lambda_max] = M", count == M, std::abs(static_cast<double>(count - M))});
    }
    {
        const double res = std::abs(spec.eigenvalues(N) - n);
        r.items.push_back({"lambda_N = N", res <= tol, res});
    }

    r.lower_bound_below_N = frame_bounds(spec, s, n - 0.5).lower;
    const FrameBounds at = frame_bounds(spec, s, n);
    r.lower_bound_at_N = at.lower;
    r.dimension_at_N = at.dimension;
    r.sharpness_demonstrated = at.dimension > s.size() ? (r.lower_bound_below_N > 0.0 && at.lower == 0.0)
                                                       : r.lower_bound_below_N > 0.0;
    return r;
}

PoincareOracle oracle_poincare(const Graph& g, const VertexSet& u, int trials, std::uint64_t seed,
                               double candidate) {
    require_same_graph(g, u);
    if (u.empty()) throw Error(ErrorKind::EmptySet, "support set is empty");
    PoincareOracle out;
    out.trials = trials;
    out.upper_bound = std::numeric_limits<double>::infinity();
    for (int i = 0; i < trials; ++i) {
        std::mt19937_64 rng(splitmix64(seed ^ (0x5851f42d4c957f2dULL * static_cast<std::uint64_t>(i + 1))));
        std::normal_distribution<double> gauss(0.0, 1.0);
        Eigen::VectorXcd x = Eigen::VectorXcd::Zero(g.size());
        for (Index v : u.members()) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            x(v) = Complex(re, im);
        }
        const Signal phi{g.id(), std::move(x)};
        const double n_phi = norm(g, phi);
        if (n_phi == 0.0) continue;
        const double n_lap = norm(g, apply_laplacian(g, phi));
        out.upper_bound = std::min(out.upper_bound, n_lap / n_phi);
        if (candidate > 0.0 && n_phi > n_lap / candidate + 1e-9) ++out.violations;
    }
    return out;
}

}  // namespace pwg
