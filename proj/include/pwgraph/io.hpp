#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pwgraph/generators.hpp"
#include "pwgraph/graph.hpp"
#include "pwgraph/sampling.hpp"
#include "pwgraph/spacetime.hpp"
#include "pwgraph/spectral.hpp"

namespace pwg {

inline constexpr const char* kVersion = "1.0.0";

/// Edge list: one `u v [w]` per line, `#` comment lines; a line holding a
/// single identifier declares a vertex without edges.
struct EdgeListData {
    std::vector<EdgeSpec> edges;
    std::vector<std::string> vertices;
};

/// Throws Parse errors naming `source` and the 1-based line number.
EdgeListData parse_edge_list(std::istream& in, const std::string& source = "<input>");
Graph read_graph(const std::filesystem::path& path, MeasureMode mode);

/// Signal file: one `v re [im]` per line; every vertex exactly once.
Signal parse_signal(std::istream& in, const Graph& g, const std::string& source = "<input>");
Signal read_signal(const std::filesystem::path& path, const Graph& g);

/// 17 significant digits.
std::string format_real(double x);

/// Splits "a,b,c".
std::vector<std::string> split_list(const std::string& text, char sep = ',');

/// "start:stop:step", stop inclusive; empty when stop < start.
std::vector<double> parse_time_grid(const std::string& text);

/// Everything needed to re-run a command; serialized into every output header.
struct RunConfig {
    std::string command;
    std::string graph_path;
    std::string signal_path;
    std::string samples_path;
    std::optional<GeneratorSpec> generator;
    std::vector<std::string> set;
    std::optional<double> omega;
    int K = 0;
    std::vector<double> times;
    std::string t_grid;
    MeasureMode measure = MeasureMode::Counting;
    std::uint64_t seed = 0;
    std::string out;
    std::string dual_out;
    std::string samples_out;
    bool derive_laplacian = true;

    /// Explicit times followed by the grid.
    std::vector<double> all_times() const;
};

std::string config_to_json(const RunConfig& cfg);
RunConfig config_from_json(const std::string& text);

/// `# pwgraph <version>` and `# config: <json>` lines.
std::string output_header(const RunConfig& cfg);

/// Reads the config back out of a file written with output_header.
RunConfig read_config_header(const std::filesystem::path& path);

/// Writes through a temporary sibling file and renames it into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string spectrum_csv(const Graph& g, const Spectrum& spec);
std::string certificate_csv(const Graph& g, const SamplingCertificate& cert);
std::string dual_frame_csv(const Graph& g, const DualFrame& dual);
std::string edge_list_text(const Graph& g);

/// Long-format space-time samples: `kind,k,v,re,im` with kind in {sample, laplacian}.
std::string spacetime_samples_csv(const Graph& g, const SpaceTimeSamples& st);
SpaceTimeSamples parse_spacetime_samples(std::istream& in, const Graph& g, double omega,
                                         const std::string& source = "<input>");

}  // namespace pwg
