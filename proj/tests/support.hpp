// Shared test helpers: random families and brute-force oracles that do not
// go through the library's eigen/SVD paths.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "pwgraph/generators.hpp"
#include "pwgraph/graph.hpp"

namespace pwg::oracles {

inline double rel_err(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const double scale = std::max(b.norm(), 1e-300);
    return (a - b).norm() / scale;
}

/// Seeded family of connected weighted graphs with |V| in [8, 40].
inline std::vector<GeneratedGraph> random_family(int count, std::uint64_t seed,
                                                 MeasureMode mode = MeasureMode::Counting) {
    std::vector<GeneratedGraph> out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(8, 40);
    for (int i = 0; i < count; ++i) {
        const int n = size(rng);
        const double p = std::min(1.0, 3.0 / n + 0.1);
        out.push_back(make_erdos_renyi_weighted(n, p, 0.5, 2.0, rng(), mode));
    }
    return out;
}

/// Random proper nonempty subsets.
inline std::vector<VertexSet> random_subsets(const Graph& g, int count, std::mt19937_64& rng) {
    std::vector<VertexSet> out;
    const Index n = g.size();
    std::uniform_int_distribution<Index> size(1, n - 1);
    std::vector<Index> all(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < count; ++i) {
        std::shuffle(all.begin(), all.end(), rng);
        const Index k = size(rng);
        out.emplace_back(g, std::vector<Index>(all.begin(), all.begin() + k));
    }
    return out;
}

/// Dense D - W assembled directly from the edge list.
inline Eigen::MatrixXd combinatorial_laplacian_oracle(const Graph& g) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(g.size(), g.size());
    for (const auto& e : g.edges()) {
        m(e.u, e.u) += e.weight;
        m(e.v, e.v) += e.weight;
        m(e.u, e.v) -= e.weight;
        m(e.v, e.u) -= e.weight;
    }
    return m;
}

/// Rank by Gaussian elimination with full pivoting; pivots below
/// rel_tol * max|a_ij| count as zero.
inline Index brute_force_rank(Eigen::MatrixXd a, double rel_tol = 1e-10) {
    const double scale = a.size() ? a.cwiseAbs().maxCoeff() : 0.0;
    if (scale == 0.0) return 0;
    Index rank = 0;
    const Index rows = a.rows(), cols = a.cols();
    for (Index step = 0; step < std::min(rows, cols); ++step) {
        Index pr = step, pc = step;
        double best = 0.0;
        for (Index i = step; i < rows; ++i)
            for (Index j = step; j < cols; ++j)
                if (std::abs(a(i, j)) > best) {
                    best = std::abs(a(i, j));
                    pr = i;
                    pc = j;
                }
        if (best <= rel_tol * scale) break;
        a.row(step).swap(a.row(pr));
        a.col(step).swap(a.col(pc));
        for (Index i = step + 1; i < rows; ++i) {
            const double factor = a(i, step) / a(step, step);
            a.row(i) -= factor * a.row(step);
        }
        ++rank;
    }
    return rank;
}

inline Eigen::MatrixXd rows_of(const Eigen::MatrixXd& m, const std::vector<Index>& rows) {
    Eigen::MatrixXd out(static_cast<Index>(rows.size()), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
    return out;
}

/// Random signal supported on U.
inline Signal random_supported(const Graph& g, const VertexSet& u, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(g.size());
    for (Index v : u.members()) {
        const double re = gauss(rng);
        x(v) = Complex(re, gauss(rng));
    }
    return Signal{g.id(), x};
}

}  // namespace pwg::oracles
