#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pwgraph/graph.hpp"
#include "pwgraph/spectral.hpp"

namespace pwg {

enum class Family { CompleteBipartite, Path, Cycle, ErdosRenyiWeighted };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

/// Replayable description of a generated graph.
struct GeneratorSpec {
    Family family = Family::CompleteBipartite;
    int N = 0;  // complete bipartite sides, N > M
    int M = 0;
    int n = 0;  // path / cycle / random vertex count
    double p = 0.0;
    double w_min = 0.5;
    double w_max = 2.0;
    std::uint64_t seed = 0;
    MeasureMode mode = MeasureMode::Counting;
};

struct GeneratedGraph {
    Graph graph;
    std::optional<VertexSet> set;  // the N-side for complete bipartite graphs
    std::uint64_t subseed = 0;     // seed of the accepted random draw
    int attempts = 1;
};

/// Identical specs give bit-identical graphs.
GeneratedGraph generate(const GeneratorSpec& spec);

std::uint64_t splitmix64(std::uint64_t x);

struct Bipartite {
    Graph graph;
    VertexSet big_side;  // vertices "0".."N-1"
};

/// Unit-weight K_{N,M}; N-side is "0".."N-1", M-side "N".."N+M-1". Throws BadSizes unless N > M >= 1.
Bipartite make_complete_bipartite(int N, int M, MeasureMode mode = MeasureMode::Counting);
Graph make_path(int n, MeasureMode mode = MeasureMode::Counting);
Graph make_cycle(int n, MeasureMode mode = MeasureMode::Counting);

/// Connected G(n, p) with weights uniform in [w_min, w_max]; redraws with
/// derived subseeds until connected.
GeneratedGraph make_erdos_renyi_weighted(int n, double p, double w_min, double w_max, std::uint64_t seed,
                                         MeasureMode mode = MeasureMode::Counting);

/// Complex Gaussian signal.
Signal random_signal(const Graph& g, std::mt19937_64& rng);
Signal random_signal(std::uint64_t graph_id, Index n, std::mt19937_64& rng);

/// Random element of PW_omega with Gaussian coefficients on the admissible eigenvectors.
Signal random_pw_signal(const Spectrum& spec, double omega, std::mt19937_64& rng);

/// (eigenvalue, multiplicity) pairs.
using Multiset = std::vector<std::pair<double, int>>;

/// {(0,1), (M, N-1), (N, M-1), (N+M, 1)}, omitting zero multiplicities.
Multiset bipartite_reference_spectrum(int N, int M);

/// Groups ascending eigenvalues whose gap is within rel_tol * max(1, lambda_max).
Multiset cluster_eigenvalues(const Eigen::VectorXd& eigenvalues, double rel_tol = 1e-6);

struct ReportItem {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

struct LemmaReport {
    int N = 0;
    int M = 0;
    std::vector<ReportItem> items;  // the five items of the bipartite sharpness lemma
    // sharpness demo: including the eigenvalue N in the band destroys sampling
    double lower_bound_below_N = 0.0;  // c for omega just below N
    double lower_bound_at_N = 0.0;     // c for omega = N
    Index dimension_at_N = 0;
    bool sharpness_demonstrated = false;

    bool all_pass() const;
};

LemmaReport lemma_sharpness_report(int N, int M);

struct PoincareOracle {
    double upper_bound = 0.0;  // min over sampled phi of ||Delta phi|| / ||phi||
    int violations = 0;        // samples with ||phi|| > ||Delta phi|| / candidate + 1e-9
    int trials = 0;
};

/// Monte-Carlo upper bound on Lambda(U) from random phi supported on U,
/// evaluated with the direct (edge-sum) Laplacian.
PoincareOracle oracle_poincare(const Graph& g, const VertexSet& u, int trials, std::uint64_t seed,
                               double candidate);

}  // namespace pwg
