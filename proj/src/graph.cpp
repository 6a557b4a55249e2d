#include "pwgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <queue>
#include <set>

namespace pwg {

namespace {

bool is_integer_id(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
    auto pos = s.find_first_not_of('0');
    return pos == std::string_view::npos ? std::string_view("0") : s.substr(pos);
}

void validate_id(const std::string& s) {
    if (s.empty())
        throw Error(ErrorKind::Parse, "empty vertex identifier");
    if (std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }))
        throw Error(ErrorKind::Parse, "vertex identifier contains whitespace: '" + s + "'");
}

// FNV-1a over the canonical content; graphs with identical content share an id.
class Fingerprint {
public:
    void bytes(const void* data, std::size_t n) {
        auto p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < n; ++i) {
            h_ ^= p[i];
            h_ *= 1099511628211ULL;
        }
    }
    void str(const std::string& s) {
        bytes(s.data(), s.size());
        bytes("\0", 1);
    }
    template <class T>
    void pod(T v) { bytes(&v, sizeof v); }
    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 14695981039346656037ULL;
};

}  // namespace

std::string_view to_string(MeasureMode mode) noexcept {
    return mode == MeasureMode::Counting ? "counting" : "degree";
}

MeasureMode parse_measure_mode(std::string_view text) {
    if (text == "counting") return MeasureMode::Counting;
    if (text == "degree") return MeasureMode::Degree;
    throw Error(ErrorKind::Parse, "unknown measure mode '" + std::string(text) + "'");
}

bool vertex_id_less(const std::string& a, const std::string& b) {
    const bool ia = is_integer_id(a), ib = is_integer_id(b);
    if (ia != ib) return ia;
    if (ia) {
        auto sa = strip_leading_zeros(a), sb = strip_leading_zeros(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

Graph Graph::build(std::span<const EdgeSpec> edges, MeasureMode mode,
                   std::span<const std::string> extra_vertices) {
    // keyed on the unordered pair; value keeps the first orientation seen
    struct Seen {
        std::string u, v;
        double weight;
    };
    std::map<std::pair<std::string, std::string>, Seen> pairs;
    std::set<std::string, decltype(&vertex_id_less)> names(&vertex_id_less);

    for (const auto& e : edges) {
        validate_id(e.u);
        validate_id(e.v);
        if (!std::isfinite(e.weight))
            throw Error(ErrorKind::NegativeWeight, "non-finite weight on edge (" + e.u + ", " + e.v + ")");
        if (e.weight < 0.0)
            throw Error(ErrorKind::NegativeWeight, "edge (" + e.u + ", " + e.v + ")");
        if (e.u == e.v)
            throw Error(ErrorKind::SelfLoop, "vertex " + e.u);
        names.insert(e.u);
        names.insert(e.v);

        auto key = e.u < e.v ? std::pair(e.u, e.v) : std::pair(e.v, e.u);
        auto [it, inserted] = pairs.emplace(key, Seen{e.u, e.v, e.weight});
        if (inserted) continue;
        const Seen& prev = it->second;
        if (prev.u == e.u)
            throw Error(ErrorKind::DuplicateEdge, "(" + e.u + ", " + e.v + ")");
        // reverse orientation: accepted only as a symmetric restatement
        if (prev.weight != e.weight)
            throw Error(ErrorKind::AsymmetricWeight, "(" + e.u + ", " + e.v + ")");
    }
    for (const auto& v : extra_vertices) {
        validate_id(v);
        names.insert(v);
    }

    Graph g;
    g.mode_ = mode;
    g.vertices_.assign(names.begin(), names.end());
    for (std::size_t i = 0; i < g.vertices_.size(); ++i)
        g.index_.emplace(g.vertices_[i], static_cast<Index>(i));

    const Index n = g.size();
    g.weights_ = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [key, seen] : pairs) {
        if (seen.weight == 0.0) continue;
        Index a = g.index_.at(key.first), b = g.index_.at(key.second);
        if (b < a) std::swap(a, b);
        g.weights_(a, b) = g.weights_(b, a) = seen.weight;
    }
    for (Index a = 0; a < n; ++a)
        for (Index b = a + 1; b < n; ++b)
            if (g.weights_(a, b) != 0.0) g.edges_.push_back({a, b, g.weights_(a, b)});

    g.finalize();
    return g;
}

void Graph::finalize() {
    degrees_ = weights_.rowwise().sum();
    measure_ = mode_ == MeasureMode::Counting ? Eigen::VectorXd::Ones(size()) : degrees_;

    Fingerprint fp;
    fp.pod(static_cast<int>(mode_));
    fp.pod(static_cast<std::uint64_t>(vertices_.size()));
    for (const auto& v : vertices_) fp.str(v);
    for (const auto& e : edges_) {
        fp.pod(static_cast<std::int64_t>(e.u));
        fp.pod(static_cast<std::int64_t>(e.v));
        fp.pod(std::bit_cast<std::uint64_t>(e.weight));
    }
    id_ = fp.value();
}

Graph Graph::with_mode(MeasureMode mode) const {
    Graph g = *this;
    g.mode_ = mode;
    g.finalize();
    return g;
}

Index Graph::index_of(const std::string& vertex) const {
    auto it = index_.find(vertex);
    if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, "'" + vertex + "'");
    return it->second;
}

bool Graph::has_isolated_vertex() const noexcept {
    return (degrees_.array() == 0.0).any();
}

bool Graph::is_connected() const {
    const Index n = size();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<Index> q;
    q.push(0);
    seen[0] = 1;
    Index count = 1;
    while (!q.empty()) {
        Index u = q.front();
        q.pop();
        for (Index v = 0; v < n; ++v) {
            if (weights_(u, v) != 0.0 && !seen[static_cast<std::size_t>(v)]) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

Signal make_signal(const Graph& g, Eigen::VectorXcd values) {
    if (values.size() != g.size())
        throw Error(ErrorKind::LengthMismatch,
                    "signal has " + std::to_string(values.size()) + " values, graph has " +
                        std::to_string(g.size()) + " vertices");
    return Signal{g.id(), std::move(values)};
}

Signal constant_signal(const Graph& g, Complex value) {
    return Signal{g.id(), Eigen::VectorXcd::Constant(g.size(), value)};
}

Signal delta_signal(const Graph& g, Index v) {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(g.size());
    x(v) = 1.0;
    return Signal{g.id(), std::move(x)};
}

VertexSet::VertexSet(const Graph& g, std::vector<Index> members)
    : graph_id_(g.id()), graph_size_(g.size()), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Index m : members_)
        if (m < 0 || m >= graph_size_)
            throw Error(ErrorKind::UnknownVertex, "vertex index " + std::to_string(m));
}

VertexSet VertexSet::from_names(const Graph& g, std::span<const std::string> names) {
    std::vector<Index> idx;
    idx.reserve(names.size());
    for (const auto& n : names) idx.push_back(g.index_of(n));
    return VertexSet(g, std::move(idx));
}

VertexSet VertexSet::all(const Graph& g) {
    std::vector<Index> idx(static_cast<std::size_t>(g.size()));
    for (Index i = 0; i < g.size(); ++i) idx[static_cast<std::size_t>(i)] = i;
    return VertexSet(g, std::move(idx));
}

bool VertexSet::contains(Index v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement() const {
    std::vector<Index> rest;
    rest.reserve(static_cast<std::size_t>(graph_size_ - size()));
    for (Index v = 0; v < graph_size_; ++v)
        if (!contains(v)) rest.push_back(v);
    return VertexSet(graph_id_, graph_size_, std::move(rest));
}

std::vector<std::string> VertexSet::names(const Graph& g) const {
    require_same_graph(g, *this);
    std::vector<std::string> out;
    for (Index m : members_) out.push_back(g.name(m));
    return out;
}

void require_same_graph(const Graph& g, const Signal& f) {
    if (f.graph_id != g.id()) throw Error(ErrorKind::GraphMismatch, "signal belongs to another graph");
    if (f.size() != g.size()) throw Error(ErrorKind::LengthMismatch, "signal length differs from |V|");
}

void require_same_graph(const Graph& g, const VertexSet& s) {
    if (s.graph_id() != g.id()) throw Error(ErrorKind::GraphMismatch, "vertex set belongs to another graph");
}

double degree(const Graph& g, const std::string& vertex) { return g.degree(vertex); }

Complex weighted_inner(const Eigen::VectorXd& measure, const Eigen::VectorXcd& f,
                       const Eigen::VectorXcd& h) {
    Complex acc = 0.0;
    for (Index i = 0; i < f.size(); ++i) acc += f(i) * std::conj(h(i)) * measure(i);
    return acc;
}

double weighted_norm(const Eigen::VectorXd& measure, const Eigen::VectorXcd& f) {
    return std::sqrt((f.cwiseAbs2().array() * measure.array()).sum());
}

Complex inner_product(const Graph& g, const Signal& f, const Signal& h) {
    require_same_graph(g, f);
    require_same_graph(g, h);
    return weighted_inner(g.measure(), f.values, h.values);
}

double norm(const Graph& g, const Signal& f) {
    require_same_graph(g, f);
    return weighted_norm(g.measure(), f.values);
}

Signal apply_laplacian(const Graph& g, const Signal& f) {
    require_same_graph(g, f);
    if (g.mode() == MeasureMode::Degree && g.has_isolated_vertex())
        throw Error(ErrorKind::IsolatedVertex, "degree measure undefined on a vertex of degree 0");
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(g.size());
    for (const auto& e : g.edges()) {
        Complex diff = (f.values(e.u) - f.values(e.v)) * e.weight;
        out(e.u) += diff;
        out(e.v) -= diff;
    }
    if (g.mode() == MeasureMode::Degree) out.array() /= g.degrees().array().cast<Complex>();
    return Signal{g.id(), std::move(out)};
}

LaplacianMatrix laplacian_matrix(const Graph& g) {
    if (g.mode() == MeasureMode::Degree && g.has_isolated_vertex())
        throw Error(ErrorKind::IsolatedVertex, "degree measure undefined on a vertex of degree 0");
    Eigen::MatrixXd combinatorial = -g.adjacency();
    combinatorial.diagonal() = g.degrees();

    LaplacianMatrix m;
    m.sqrt_measure = g.measure().cwiseSqrt();
    if (g.mode() == MeasureMode::Counting) {
        m.op = combinatorial;
        m.symmetric = combinatorial;
    } else {
        const Eigen::VectorXd inv_mu = g.degrees().cwiseInverse();
        const Eigen::VectorXd inv_sqrt = inv_mu.cwiseSqrt();
        m.op = inv_mu.asDiagonal() * combinatorial;
        m.symmetric = inv_sqrt.asDiagonal() * combinatorial * inv_sqrt.asDiagonal();
    }
    return m;
}

}  // namespace pwg
