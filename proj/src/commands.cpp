#include "pwgraph/commands.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "pwgraph/evolution.hpp"

namespace pwg {

namespace {

struct GeneratorArgs {
    std::string family;
    int N = 0, M = 0, n = 0;
    double p = 0.3, w_min = 0.5, w_max = 2.0;
};

void add_graph_options(CLI::App* sub, RunConfig& cfg, GeneratorArgs& gen, std::string& measure) {
    sub->add_option("--graph", cfg.graph_path, "edge-list file");
    sub->add_option("--family", gen.family, "generator: bipartite, path, cycle, erdos-renyi");
    sub->add_option("--N", gen.N, "complete bipartite: larger side");
    sub->add_option("--M", gen.M, "complete bipartite: smaller side");
    sub->add_option("--n", gen.n, "vertex count for path / cycle / erdos-renyi");
    sub->add_option("--p", gen.p, "erdos-renyi edge probability");
    sub->add_option("--w-min", gen.w_min, "erdos-renyi minimum weight");
    sub->add_option("--w-max", gen.w_max, "erdos-renyi maximum weight");
    sub->add_option("--measure", measure, "counting or degree")->check(CLI::IsMember({"counting", "degree"}));
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--out", cfg.out, "output file (stdout if omitted)");
}

void add_time_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--t", cfg.times, "evaluation time (repeatable)");
    sub->add_option("--t-grid", cfg.t_grid, "start:stop:step, stop inclusive");
}

struct LoadedGraph {
    Graph graph;
    std::optional<VertexSet> default_set;
};

LoadedGraph load_graph(const RunConfig& cfg) {
    if (!cfg.graph_path.empty()) return {read_graph(cfg.graph_path, cfg.measure), std::nullopt};
    if (cfg.generator) {
        GeneratorSpec spec = *cfg.generator;
        spec.mode = cfg.measure;
        auto gen = generate(spec);
        return {std::move(gen.graph), std::move(gen.set)};
    }
    throw Error(ErrorKind::Parse, "no graph: pass --graph FILE or --family ...");
}

VertexSet resolve_set(const RunConfig& cfg, const LoadedGraph& lg) {
    if (!cfg.set.empty()) return VertexSet::from_names(lg.graph, cfg.set);
    if (lg.default_set) return *lg.default_set;
    throw Error(ErrorKind::EmptySet, "no sampling set: pass --set v1,v2,...");
}

double require_omega(const RunConfig& cfg) {
    if (!cfg.omega) throw Error(ErrorKind::Parse, "--omega is required");
    return *cfg.omega;
}

void emit(const RunConfig& cfg, const std::string& body, std::ostream& out) {
    const std::string content = output_header(cfg) + body;
    if (cfg.out.empty() || cfg.out == "-")
        out << content;
    else
        write_atomic(cfg.out, content);
}

void emit_to(const RunConfig& cfg, const std::string& path, const std::string& body) {
    write_atomic(path, output_header(cfg) + body);
}

void run_gen(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.generator) throw Error(ErrorKind::Parse, "gen needs --family");
    const LoadedGraph lg = load_graph(cfg);
    std::string body = edge_list_text(lg.graph);
    if (lg.default_set) {
        std::string set = "# set: ";
        const auto names = lg.default_set->names(lg.graph);
        for (std::size_t i = 0; i < names.size(); ++i) set += (i ? "," : "") + names[i];
        body = set + "\n" + body;
    }
    emit(cfg, body, out);
}

void run_spectrum(const RunConfig& cfg, std::ostream& out) {
    const LoadedGraph lg = load_graph(cfg);
    emit(cfg, spectrum_csv(lg.graph, eigendecompose(lg.graph)), out);
}

void run_certify(const RunConfig& cfg, std::ostream& out) {
    const LoadedGraph lg = load_graph(cfg);
    const VertexSet s = resolve_set(cfg, lg);
    const double omega = require_omega(cfg);
    const Spectrum spec = eigendecompose(lg.graph);
    const SamplingCertificate cert = certify(lg.graph, spec, s, omega);
    emit(cfg, certificate_csv(lg.graph, cert), out);
    if (!cfg.dual_out.empty()) {
        if (!cert.dual)
            throw Error(ErrorKind::NotSamplingSet, "no dual frame: c = " + format_real(cert.frame.lower));
        emit_to(cfg, cfg.dual_out, dual_frame_csv(lg.graph, *cert.dual));
    }
}

void run_evolve(const RunConfig& cfg, std::ostream& out) {
    const LoadedGraph lg = load_graph(cfg);
    const Spectrum spec = eigendecompose(lg.graph);
    Signal f;
    if (!cfg.signal_path.empty()) {
        f = read_signal(cfg.signal_path, lg.graph);
    } else {
        std::mt19937_64 rng(cfg.seed);
        f = random_signal(lg.graph, rng);
    }
    std::ostringstream os;
    os << "t,v,re,im,norm\n";
    for (double t : cfg.all_times()) {
        const Signal g = evolve(spec, f, t);
        const std::string n = format_real(norm(lg.graph, g));
        for (Index v = 0; v < g.size(); ++v)
            os << format_real(t) << ',' << lg.graph.name(v) << ',' << format_real(g(v).real()) << ','
               << format_real(g(v).imag()) << ',' << n << '\n';
    }
    emit(cfg, os.str(), out);
}

void run_reconstruct(const RunConfig& cfg, std::ostream& out) {
    const LoadedGraph lg = load_graph(cfg);
    const Graph& g = lg.graph;
    const double omega = require_omega(cfg);
    const Spectrum spec = eigendecompose(g);

    std::optional<Signal> truth;
    SpaceTimeSamples st;
    if (!cfg.samples_path.empty()) {
        std::ifstream in(cfg.samples_path);
        if (!in) throw Error(ErrorKind::Parse, "cannot open '" + cfg.samples_path + "'");
        st = parse_spacetime_samples(in, g, omega, cfg.samples_path);
        if (!cfg.set.empty() && !(VertexSet::from_names(g, cfg.set) == st.set))
            throw Error(ErrorKind::Parse, "--set differs from the vertices present in the samples file");
    } else {
        if (cfg.K < 1) throw Error(ErrorKind::Parse, "--K must be >= 1");
        const VertexSet s = resolve_set(cfg, lg);
        Signal f;
        if (!cfg.signal_path.empty()) {
            f = pw_project(spec, read_signal(cfg.signal_path, g), omega).signal;
        } else {
            std::mt19937_64 rng(cfg.seed);
            f = random_pw_signal(spec, omega, rng);
        }
        st = take_spacetime_samples(spec, f, s, omega, cfg.K);
        truth = f;
    }

    SamplingCertificate cert;
    cert.set = st.set;
    cert.omega = omega;
    cert.frame = frame_bounds(spec, st.set, omega);
    if (!cert.frame.is_sampling())
        throw Error(ErrorKind::NotSamplingSet, "lower frame bound c = " + format_real(cert.frame.lower) +
                                                   " (dim PW = " + std::to_string(cert.frame.dimension) +
                                                   ", |S| = " + std::to_string(st.set.size()) + ")");
    cert.dual = dual_frame(spec, st.set, omega);

    if (!cfg.samples_out.empty()) emit_to(cfg, cfg.samples_out, spacetime_samples_csv(g, st));

    const ReconstructOptions opts{cfg.derive_laplacian};
    std::ostringstream os;
    os << "t,v,re,im" << (truth ? ",abs_err" : "") << '\n';
    for (double t : cfg.all_times()) {
        const Signal rec = reconstruct_spacetime(spec, st, cert, t, opts);
        std::optional<Signal> exact;
        if (truth) exact = evolve(spec, *truth, t);
        for (Index v = 0; v < g.size(); ++v) {
            os << format_real(t) << ',' << g.name(v) << ',' << format_real(rec(v).real()) << ','
               << format_real(rec(v).imag());
            if (exact) os << ',' << format_real(std::abs(rec(v) - (*exact)(v)));
            os << '\n';
        }
    }
    emit(cfg, os.str(), out);
}

void run_demo_bipartite(const RunConfig& cfg, std::ostream& out) {
    if (!cfg.generator) throw Error(ErrorKind::Parse, "demo-bipartite needs --N and --M");
    const LemmaReport r = lemma_sharpness_report(cfg.generator->N, cfg.generator->M);

    out << "complete bipartite K_{" << r.N << "," << r.M << "}, S = the " << r.N << "-side\n";
    std::ostringstream csv;
    csv << "item,description,pass,residual\n";
    int i = 1;
    for (const auto& it : r.items) {
        out << "  [" << (it.pass ? "PASS" : "FAIL") << "] " << i << ". " << it.name
            << "  (residual " << format_real(it.residual) << ")\n";
        csv << i << ',' << it.name << ',' << (it.pass ? 1 : 0) << ',' << format_real(it.residual) << '\n';
        ++i;
    }
    out << "  sharpness: c(omega = N - 1/2) = " << format_real(r.lower_bound_below_N)
        << ", c(omega = N) = " << format_real(r.lower_bound_at_N) << " with dim PW_N = " << r.dimension_at_N
        << " vs |S| = " << r.N << (r.sharpness_demonstrated ? "  [demonstrated]" : "  [not demonstrated]")
        << '\n';
    out << (r.all_pass() ? "all items pass\n" : "some items FAIL\n");
    csv << "sharpness,c below N," << (r.lower_bound_below_N > 0.0 ? 1 : 0) << ','
        << format_real(r.lower_bound_below_N) << '\n';
    csv << "sharpness,c at N," << (r.sharpness_demonstrated ? 1 : 0) << ',' << format_real(r.lower_bound_at_N)
        << '\n';
    if (!cfg.out.empty() && cfg.out != "-") write_atomic(cfg.out, output_header(cfg) + csv.str());
    out << "# replay config: " << config_to_json(cfg) << '\n';
}

}  // namespace

RunConfig parse_command_line(int argc, const char* const* argv, std::ostream& out) {
    CLI::App app{"Sampling and space-time reconstruction of band-limited graph signals", "pwgraph"};
    app.require_subcommand(1);

    RunConfig cfg;
    GeneratorArgs gen;
    std::string measure = "counting";
    std::string set_text;
    double omega = 0.0;
    std::string derive = "on";
    std::string replay_path;

    auto* gen_cmd = app.add_subcommand("gen", "write a generated graph as an edge list");
    add_graph_options(gen_cmd, cfg, gen, measure);

    auto* spectrum = app.add_subcommand("spectrum", "eigendecomposition of the Laplacian as CSV");
    add_graph_options(spectrum, cfg, gen, measure);

    auto* cert = app.add_subcommand("certify", "sampling certificate for a vertex set");
    add_graph_options(cert, cfg, gen, measure);
    cert->add_option("--set", set_text, "sampling set, comma-separated vertex ids");
    cert->add_option("--omega", omega, "bandwidth")->required();
    cert->add_option("--dual-out", cfg.dual_out, "write the dual frame CSV here");

    auto* evo = app.add_subcommand("evolve", "Schrodinger evolution e^{it Delta} f");
    add_graph_options(evo, cfg, gen, measure);
    evo->add_option("--signal", cfg.signal_path, "signal file (random with --seed if omitted)");
    add_time_options(evo, cfg);

    auto* rec = app.add_subcommand("reconstruct", "space-time reconstruction from samples on S");
    add_graph_options(rec, cfg, gen, measure);
    rec->add_option("--set", set_text, "sampling set, comma-separated vertex ids");
    rec->add_option("--omega", omega, "bandwidth")->required();
    rec->add_option("--K", cfg.K, "time truncation: samples at k pi / omega, |k| <= K")->default_val(100);
    rec->add_option("--samples", cfg.samples_path, "space-time samples CSV");
    rec->add_option("--signal", cfg.signal_path, "initial signal (projected onto PW_omega)");
    rec->add_option("--samples-out", cfg.samples_out, "write the generated samples here");
    rec->add_option("--derive-laplacian", derive, "derive (Delta f)|_S when absent")
        ->check(CLI::IsMember({"on", "off"}));
    add_time_options(rec, cfg);

    auto* demo = app.add_subcommand("demo-bipartite", "sharpness report on K_{N,M}");
    demo->add_option("--N", gen.N, "larger side")->required();
    demo->add_option("--M", gen.M, "smaller side")->required();
    demo->add_option("--out", cfg.out, "CSV report file");

    auto* replay = app.add_subcommand("replay", "re-run the command recorded in an output header");
    replay->add_option("file", replay_path, "output file with a config header")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return RunConfig{};
    } catch (const CLI::ParseError& e) {
        throw Error(ErrorKind::Parse, e.what());
    }

    if (replay->parsed()) return read_config_header(replay_path);

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    cfg.measure = parse_measure_mode(measure);
    cfg.set = split_list(set_text);
    cfg.derive_laplacian = derive == "on";
    if (cert->parsed() || rec->parsed()) cfg.omega = omega;

    if (demo->parsed()) {
        cfg.generator = GeneratorSpec{Family::CompleteBipartite, gen.N, gen.M};
    } else if (!gen.family.empty()) {
        GeneratorSpec spec;
        spec.family = parse_family(gen.family);
        spec.N = gen.N;
        spec.M = gen.M;
        spec.n = gen.n;
        spec.p = gen.p;
        spec.w_min = gen.w_min;
        spec.w_max = gen.w_max;
        spec.seed = cfg.seed;
        spec.mode = cfg.measure;
        cfg.generator = spec;
    }
    return cfg;
}

void execute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "gen") return run_gen(cfg, out);
    if (cfg.command == "spectrum") return run_spectrum(cfg, out);
    if (cfg.command == "certify") return run_certify(cfg, out);
    if (cfg.command == "evolve") return run_evolve(cfg, out);
    if (cfg.command == "reconstruct") return run_reconstruct(cfg, out);
    if (cfg.command == "demo-bipartite") return run_demo_bipartite(cfg, out);
    throw Error(ErrorKind::Parse, "unknown command '" + cfg.command + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig cfg = parse_command_line(argc, argv, out);
        if (cfg.command.empty()) return 0;
        execute(cfg, out);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.category());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 4;
    }
}

}  // namespace pwg
