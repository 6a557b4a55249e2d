#include "pwgraph/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace pwg {

namespace {

using json = nlohmann::json;

std::string where(const std::string& source, std::size_t line) {
    return source + ":" + std::to_string(line);
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

bool is_comment_or_blank(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

double parse_real(const std::string& tok, const std::string& what, const std::string& loc) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const double x = std::strtod(begin, &end);
    if (end == begin || *end != '\0' || errno == ERANGE)
        throw Error(ErrorKind::Parse, loc + ": malformed " + what + " '" + tok + "'");
    return x;
}

long parse_int(const std::string& tok, const std::string& loc) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const long x = std::strtol(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE)
        throw Error(ErrorKind::Parse, loc + ": malformed integer '" + tok + "'");
    return x;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path.string() + "'");
    return in;
}

json generator_to_json(const GeneratorSpec& g) {
    return json{{"family", to_string(g.family)}, {"N", g.N}, {"M", g.M}, {"n", g.n}, {"p", g.p},
                {"w_min", g.w_min}, {"w_max", g.w_max}, {"seed", g.seed}};
}

GeneratorSpec generator_from_json(const json& j) {
    GeneratorSpec g;
    g.family = parse_family(j.at("family").get<std::string>());
    g.N = j.value("N", 0);
    g.M = j.value("M", 0);
    g.n = j.value("n", 0);
    g.p = j.value("p", 0.0);
    g.w_min = j.value("w_min", 0.5);
    g.w_max = j.value("w_max", 2.0);
    g.seed = j.value("seed", std::uint64_t{0});
    return g;
}

}  // namespace

EdgeListData parse_edge_list(std::istream& in, const std::string& source) {
    EdgeListData data;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        const auto tok = tokens_of(line);
        const std::string loc = where(source, lineno);
        if (tok.size() == 1) {
            data.vertices.push_back(tok[0]);
        } else if (tok.size() == 2 || tok.size() == 3) {
            const double w = tok.size() == 3 ? parse_real(tok[2], "weight", loc) : 1.0;
            data.edges.push_back({tok[0], tok[1], w});
        } else {
            throw Error(ErrorKind::Parse, loc + ": expected 'u v [w]', got " + std::to_string(tok.size()) + " fields");
        }
    }
    if (data.edges.empty() && data.vertices.empty())
        throw Error(ErrorKind::Parse, source + ": graph has no vertices");
    return data;
}

Graph read_graph(const std::filesystem::path& path, MeasureMode mode) {
    auto in = open_input(path);
    const EdgeListData data = parse_edge_list(in, path.string());
    return Graph::build(data.edges, mode, data.vertices);
}

Signal parse_signal(std::istream& in, const Graph& g, const std::string& source) {
    Eigen::VectorXcd values = Eigen::VectorXcd::Zero(g.size());
    std::vector<char> seen(static_cast<std::size_t>(g.size()), 0);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        const auto tok = tokens_of(line);
        const std::string loc = where(source, lineno);
        if (tok.size() != 2 && tok.size() != 3)
            throw Error(ErrorKind::Parse, loc + ": expected 'v re [im]'");
        if (!g.contains(tok[0])) throw Error(ErrorKind::UnknownVertex, loc + ": '" + tok[0] + "'");
        const Index v = g.index_of(tok[0]);
        if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::Parse, loc + ": vertex '" + tok[0] + "' repeated");
        seen[static_cast<std::size_t>(v)] = 1;
        const double re = parse_real(tok[1], "real part", loc);
        const double im = tok.size() == 3 ? parse_real(tok[2], "imaginary part", loc) : 0.0;
        values(v) = Complex(re, im);
    }
    for (Index v = 0; v < g.size(); ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw Error(ErrorKind::LengthMismatch, source + ": no value for vertex '" + g.name(v) + "'");
    return Signal{g.id(), std::move(values)};
}

Signal read_signal(const std::filesystem::path& path, const Graph& g) {
    auto in = open_input(path);
    return parse_signal(in, g, path.string());
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream ss(text);
    while (std::getline(ss, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<double> parse_time_grid(const std::string& text) {
    const auto parts = split_list(text, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Parse, "time grid must be start:stop:step, got '" + text + "'");
    const double start = parse_real(parts[0], "grid start", "--t-grid");
    const double stop = parse_real(parts[1], "grid stop", "--t-grid");
    const double step = parse_real(parts[2], "grid step", "--t-grid");
    if (!(step > 0.0)) throw Error(ErrorKind::Parse, "--t-grid: step must be positive");
    std::vector<double> out;
    if (stop < start) return out;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
}

std::vector<double> RunConfig::all_times() const {
    std::vector<double> out = times;
    if (!t_grid.empty()) {
        const auto grid = parse_time_grid(t_grid);
        out.insert(out.end(), grid.begin(), grid.end());
    }
    return out;
}

std::string config_to_json(const RunConfig& cfg) {
    json j;
    j["command"] = cfg.command;
    j["graph"] = cfg.graph_path;
    j["signal"] = cfg.signal_path;
    j["samples"] = cfg.samples_path;
    j["generator"] = cfg.generator ? generator_to_json(*cfg.generator) : json(nullptr);
    j["set"] = cfg.set;
    j["omega"] = cfg.omega ? json(*cfg.omega) : json(nullptr);
    j["K"] = cfg.K;
    j["t"] = cfg.times;
    j["t_grid"] = cfg.t_grid;
    j["measure"] = to_string(cfg.measure);
    j["seed"] = cfg.seed;
    j["out"] = cfg.out;
    j["dual_out"] = cfg.dual_out;
    j["samples_out"] = cfg.samples_out;
    j["derive_laplacian"] = cfg.derive_laplacian;
    return j.dump();
}

RunConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("config header: ") + e.what());
    }
    RunConfig cfg;
    cfg.command = j.value("command", "");
    cfg.graph_path = j.value("graph", "");
    cfg.signal_path = j.value("signal", "");
    cfg.samples_path = j.value("samples", "");
    if (j.contains("generator") && !j["generator"].is_null()) cfg.generator = generator_from_json(j["generator"]);
    cfg.set = j.value("set", std::vector<std::string>{});
    if (j.contains("omega") && !j["omega"].is_null()) cfg.omega = j["omega"].get<double>();
    cfg.K = j.value("K", 0);
    cfg.times = j.value("t", std::vector<double>{});
    cfg.t_grid = j.value("t_grid", "");
    cfg.measure = parse_measure_mode(j.value("measure", "counting"));
    if (cfg.generator) cfg.generator->mode = cfg.measure;
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.out = j.value("out", "");
    cfg.dual_out = j.value("dual_out", "");
    cfg.samples_out = j.value("samples_out", "");
    cfg.derive_laplacian = j.value("derive_laplacian", true);
    return cfg;
}

std::string output_header(const RunConfig& cfg) {
    return std::string("# pwgraph ") + kVersion + "\n# config: " + config_to_json(cfg) + "\n";
}

RunConfig read_config_header(const std::filesystem::path& path) {
    auto in = open_input(path);
    const std::string prefix = "# config: ";
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) return config_from_json(line.substr(prefix.size()));
        if (!line.empty() && line[0] != '#') break;
    }
    throw Error(ErrorKind::Parse, "'" + path.string() + "' has no config header");
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::Parse, "cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw Error(ErrorKind::Parse, "write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorKind::Parse, "cannot rename into '" + path.string() + "': " + ec.message());
}

std::string spectrum_csv(const Graph& g, const Spectrum& spec) {
    std::ostringstream os;
    os << "j,lambda";
    for (const auto& v : g.vertices()) os << ',' << v;
    os << '\n';
    for (Index j = 0; j < spec.size(); ++j) {
        os << j << ',' << format_real(spec.eigenvalues(j));
        for (Index i = 0; i < spec.size(); ++i) os << ',' << format_real(spec.eigenvectors(i, j));
        os << '\n';
    }
    return os.str();
}

std::string certificate_csv(const Graph& g, const SamplingCertificate& cert) {
    std::ostringstream os;
    os << "set,omega,K_S,D_S,sigma,poincare_complement,c,C\n";
    const auto names = cert.set.names(g);
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ";" : "") << names[i];
    os << ',' << format_real(cert.omega) << ',' << format_real(cert.K) << ',' << format_real(cert.D) << ','
       << format_real(cert.sigma) << ',' << format_real(cert.poincare_complement) << ','
       << format_real(cert.frame.lower) << ',' << format_real(cert.frame.upper) << '\n';
    return os.str();
}

std::string dual_frame_csv(const Graph& g, const DualFrame& dual) {
    std::ostringstream os;
    os << "s,v,re,im\n";
    for (Index k = 0; k < dual.phi.cols(); ++k) {
        const std::string& s = g.name(dual.set.members()[static_cast<std::size_t>(k)]);
        for (Index v = 0; v < dual.phi.rows(); ++v)
            os << s << ',' << g.name(v) << ',' << format_real(dual.phi(v, k)) << ',' << format_real(0.0) << '\n';
    }
    return os.str();
}

std::string edge_list_text(const Graph& g) {
    std::ostringstream os;
    for (const auto& v : g.vertices())
        if (g.degree(v) == 0.0) os << v << '\n';
    for (const auto& e : g.edges()) os << g.name(e.u) << ' ' << g.name(e.v) << ' ' << format_real(e.weight) << '\n';
    return os.str();
}

std::string spacetime_samples_csv(const Graph& g, const SpaceTimeSamples& st) {
    std::ostringstream os;
    os << "kind,k,v,re,im\n";
    for (int k = -st.K; k <= st.K; ++k) {
        for (Index p = 0; p < st.set.size(); ++p) {
            const Complex z = st.at(k, p);
            os << "sample," << k << ',' << g.name(st.set.members()[static_cast<std::size_t>(p)]) << ','
               << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
        }
    }
    if (st.laplacian_on_set) {
        for (Index p = 0; p < st.set.size(); ++p) {
            const Complex z = (*st.laplacian_on_set)(p);
            os << "laplacian,0," << g.name(st.set.members()[static_cast<std::size_t>(p)]) << ','
               << format_real(z.real()) << ',' << format_real(z.imag()) << '\n';
        }
    }
    return os.str();
}

SpaceTimeSamples parse_spacetime_samples(std::istream& in, const Graph& g, double omega,
                                         const std::string& source) {
    std::map<std::pair<long, Index>, Complex> samples;
    std::map<Index, Complex> laplacian;
    std::set<Index> members;
    long K = 0;
    bool header_seen = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (is_comment_or_blank(line)) continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!header_seen) {
            if (line != "kind,k,v,re,im")
                throw Error(ErrorKind::Parse, where(source, lineno) + ": expected header 'kind,k,v,re,im'");
            header_seen = true;
            continue;
        }
        const auto f = split_list(line, ',');
        const std::string loc = where(source, lineno);
        if (f.size() != 5) throw Error(ErrorKind::Parse, loc + ": expected 5 fields");
        if (!g.contains(f[2])) throw Error(ErrorKind::UnknownVertex, loc + ": '" + f[2] + "'");
        const Index v = g.index_of(f[2]);
        const Complex z(parse_real(f[3], "real part", loc), parse_real(f[4], "imaginary part", loc));
        if (f[0] == "sample") {
            const long k = parse_int(f[1], loc);
            if (!samples.emplace(std::pair(k, v), z).second)
                throw Error(ErrorKind::Parse, loc + ": duplicate sample");
            members.insert(v);
            K = std::max(K, std::labs(k));
        } else if (f[0] == "laplacian") {
            if (!laplacian.emplace(v, z).second) throw Error(ErrorKind::Parse, loc + ": duplicate laplacian value");
        } else {
            throw Error(ErrorKind::Parse, loc + ": unknown row kind '" + f[0] + "'");
        }
    }
    if (members.empty()) throw Error(ErrorKind::Parse, source + ": no samples");

    SpaceTimeSamples st;
    st.graph_id = g.id();
    st.set = VertexSet(g, std::vector<Index>(members.begin(), members.end()));
    st.omega = omega;
    st.K = static_cast<int>(K);
    st.values.resize(2 * K + 1, st.set.size());
    for (long k = -K; k <= K; ++k) {
        for (Index p = 0; p < st.set.size(); ++p) {
            const Index v = st.set.members()[static_cast<std::size_t>(p)];
            auto it = samples.find({k, v});
            if (it == samples.end())
                throw Error(ErrorKind::Parse, source + ": missing sample k=" + std::to_string(k) + " v=" + g.name(v));
            st.values(k + K, p) = it->second;
        }
    }
    if (!laplacian.empty()) {
        Eigen::VectorXcd lap(st.set.size());
        for (Index p = 0; p < st.set.size(); ++p) {
            const Index v = st.set.members()[static_cast<std::size_t>(p)];
            auto it = laplacian.find(v);
            if (it == laplacian.end())
                throw Error(ErrorKind::Parse, source + ": missing laplacian value for " + g.name(v));
            lap(p) = it->second;
        }
        st.laplacian_on_set = std::move(lap);
    }
    return st;
}

}  // namespace pwg
