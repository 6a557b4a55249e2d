#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "pwgraph/errors.hpp"

namespace pwg {

using Complex = std::complex<double>;
using Index = Eigen::Index;

/// Measure used by the L2(G) inner product.
///  counting: mu = 1, Laplacian D - W.
///  degree:   mu = vertex degree, random-walk Laplacian D^{-1}(D - W).
enum class MeasureMode { Counting, Degree };

std::string_view to_string(MeasureMode mode) noexcept;
MeasureMode parse_measure_mode(std::string_view text);

struct EdgeSpec {
    std::string u;
    std::string v;
    double weight = 1.0;
};

struct Edge {
    Index u = 0;  // u < v in canonical order
    Index v = 0;
    double weight = 0.0;
};

/// Orders vertex identifiers: pure-integer ids first (numerically), then the
/// rest lexicographically.
bool vertex_id_less(const std::string& a, const std::string& b);

/// Finite weighted undirected graph. Immutable after construction.
class Graph {
public:
    /// `extra_vertices` adds vertices that may have no incident edge.
    static Graph build(std::span<const EdgeSpec> edges, MeasureMode mode,
                       std::span<const std::string> extra_vertices = {});

    Index size() const noexcept { return static_cast<Index>(vertices_.size()); }
    MeasureMode mode() const noexcept { return mode_; }
    std::uint64_t id() const noexcept { return id_; }

    const std::vector<std::string>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::string& name(Index i) const { return vertices_.at(static_cast<std::size_t>(i)); }

    /// Throws UnknownVertex.
    Index index_of(const std::string& vertex) const;
    bool contains(const std::string& vertex) const { return index_.count(vertex) != 0; }

    double weight(Index u, Index v) const { return weights_(u, v); }
    const Eigen::MatrixXd& adjacency() const noexcept { return weights_; }

    double degree(Index v) const { return degrees_(v); }
    double degree(const std::string& vertex) const { return degrees_(index_of(vertex)); }
    const Eigen::VectorXd& degrees() const noexcept { return degrees_; }

    /// mu(v) per measure mode.
    const Eigen::VectorXd& measure() const noexcept { return measure_; }

    bool has_isolated_vertex() const noexcept;
    bool is_connected() const;

    /// Same graph with a different measure mode.
    Graph with_mode(MeasureMode mode) const;

private:
    Graph() = default;
    void finalize();

    std::vector<std::string> vertices_;
    std::unordered_map<std::string, Index> index_;
    std::vector<Edge> edges_;
    Eigen::MatrixXd weights_;
    Eigen::VectorXd degrees_;
    Eigen::VectorXd measure_;
    MeasureMode mode_ = MeasureMode::Counting;
    std::uint64_t id_ = 0;
};

/// Complex vertex function in canonical vertex order, tagged with its graph.
struct Signal {
    std::uint64_t graph_id = 0;
    Eigen::VectorXcd values;

    Index size() const noexcept { return values.size(); }
    Complex operator()(Index i) const { return values(i); }
};

Signal make_signal(const Graph& g, Eigen::VectorXcd values);
Signal constant_signal(const Graph& g, Complex value);
Signal delta_signal(const Graph& g, Index v);

/// Sorted subset of vertex indices of one graph.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(const Graph& g, std::vector<Index> members);
    static VertexSet from_names(const Graph& g, std::span<const std::string> names);
    static VertexSet all(const Graph& g);

    std::uint64_t graph_id() const noexcept { return graph_id_; }
    Index graph_size() const noexcept { return graph_size_; }
    const std::vector<Index>& members() const& noexcept { return members_; }
    std::vector<Index> members() && { return std::move(members_); }
    Index size() const noexcept { return static_cast<Index>(members_.size()); }
    bool empty() const noexcept { return members_.empty(); }
    bool is_full() const noexcept { return size() == graph_size_; }
    bool contains(Index v) const;

    VertexSet complement() const;

    std::vector<std::string> names(const Graph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    VertexSet(std::uint64_t graph_id, Index graph_size, std::vector<Index> members)
        : graph_id_(graph_id), graph_size_(graph_size), members_(std::move(members)) {}

    std::uint64_t graph_id_ = 0;
    Index graph_size_ = 0;
    std::vector<Index> members_;
};

void require_same_graph(const Graph& g, const Signal& f);
void require_same_graph(const Graph& g, const VertexSet& s);

/// mu(v) = sum_u w(v,u).
double degree(const Graph& g, const std::string& vertex);

/// <f, g> in the graph's measure.
Complex inner_product(const Graph& g, const Signal& f, const Signal& h);
double norm(const Graph& g, const Signal& f);

/// Weighted inner product on raw coefficient vectors.
Complex weighted_inner(const Eigen::VectorXd& measure, const Eigen::VectorXcd& f,
                       const Eigen::VectorXcd& h);
double weighted_norm(const Eigen::VectorXd& measure, const Eigen::VectorXcd& f);

/// (Delta f)(v) = sum_u (f(v) - f(u)) w(v,u), divided by mu(v) in degree mode.
Signal apply_laplacian(const Graph& g, const Signal& f);

/// Dense matrix of Delta.
///   op:        matrix acting on signals, op * f == apply_laplacian(g, f).
///   symmetric: M^{1/2} op M^{-1/2} with M = diag(mu); equals op in counting mode.
struct LaplacianMatrix {
    Eigen::MatrixXd op;
    Eigen::MatrixXd symmetric;
    Eigen::VectorXd sqrt_measure;
};

LaplacianMatrix laplacian_matrix(const Graph& g);

}  // namespace pwg
