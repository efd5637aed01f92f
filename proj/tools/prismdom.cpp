// prismdom: construct graphs, compute exact parameters, verify the
// prism counterexample, run property suites and check certificates.

#include "prismdom/constructions.hpp"
#include "prismdom/edge_list.hpp"
#include "prismdom/eternal.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/pipeline.hpp"
#include "prismdom/report.hpp"
#include "prismdom/suites.hpp"
#include "prismdom/text_util.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace prismdom;

namespace {

enum ExitCode : int {
    exit_ok = 0,
    exit_claim_failed = 1,
    exit_inconclusive = 2,
    exit_usage = 64,
    exit_data = 65,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::uint64_t budget_nodes = SearchBudget{}.nodes;
    std::uint64_t rank_cap = GameLimits{}.rank_cap;
    std::uint64_t work_cap = GameLimits{}.work_cap;
    std::uint64_t sweep_cap = GameLimits{}.sweep_cap;
    unsigned threads = 1;
    std::uint64_t seed = 1;
    int samples = 100;
    int max_n = 0;
    bool all_w = false;
    bool with_gamma = false;
    int w = 0;
    std::string out;

    SearchBudget search() const { return {budget_nodes}; }
    GameLimits game() const { return {rank_cap, sweep_cap, work_cap, threads}; }
};

void add_budget_flags(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--budget-nodes", cfg.budget_nodes, "Node budget for clique/colouring search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--rank-cap", cfg.rank_cap, "Largest configuration space C(n,k) to allocate")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--work-cap", cfg.work_cap, "Configuration checks allowed per fixed point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--sweep-cap", cfg.sweep_cap, "Sweeps allowed per fixed point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", cfg.threads, "Worker threads for the fixed-point sweep")
        ->check(CLI::PositiveNumber);
}

Graph load(const std::string& path) { return read_edge_list_file(path); }

int to_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    }
    catch (const std::exception&) {
        throw UsageError(std::string(what) + " must be an integer, got \"" + s + "\"");
    }
}

void emit_graph(const Graph& g, const RunConfig& cfg)
{
    if (cfg.out.empty()) {
        std::cout << serialize_edge_list(g);
        return;
    }
    write_edge_list_file(cfg.out, g);
    std::cout << "n " << g.vertex_count() << " m " << g.edge_count() << '\n';
}

int cmd_construct(const std::string& kind, const std::vector<std::string>& args, const RunConfig& cfg)
{
    auto need = [&](std::size_t count) {
        if (args.size() != count)
            throw UsageError("construct " + kind + " takes " + std::to_string(count) + " argument(s)");
    };
    auto positive = [&](std::size_t i) {
        int v = to_int(args[i], "size");
        if (v < 1)
            throw UsageError("size must be positive");
        return v;
    };

    Graph g;
    if (kind == "complete") {
        need(1);
        g = complete_graph(positive(0));
    }
    else if (kind == "empty") {
        need(1);
        g = empty_graph(positive(0));
    }
    else if (kind == "cycle") {
        need(1);
        g = cycle_graph(positive(0));
    }
    else if (kind == "path") {
        need(1);
        g = path_graph(positive(0));
    }
    else if (kind == "complement") {
        need(1);
        g = complement(load(args[0]));
    }
    else if (kind == "join") {
        need(2);
        g = join(load(args[0]), load(args[1]));
    }
    else if (kind == "product") {
        need(2);
        g = cartesian_product(load(args[0]), load(args[1]));
    }
    else if (kind == "prism") {
        need(1);
        g = prism(load(args[0]));
    }
    else if (kind == "mycielskian") {
        need(1);
        g = mycielskian(load(args[0])).graph;
    }
    else if (kind == "tower") {
        need(2);
        g = build_tower(to_int(args[0], "k"), to_int(args[1], "l"));
    }
    else if (kind == "counterexample") {
        need(1);
        g = build_counterexample(to_int(args[0], "k"), cfg.w).G;
    }
    else {
        throw UsageError("unknown construction \"" + kind + "\"");
    }
    emit_graph(g, cfg);
    return exit_ok;
}

int cmd_params(const std::string& path, const RunConfig& cfg)
{
    const auto g = load(path);
    auto report = compute_params(g, cfg.search(), cfg.game(), cfg.with_gamma);
    std::cout << report.text;
    if (report.gamma && report.gamma->certificate && !cfg.out.empty()) {
        detail::write_file(cfg.out, format_certificate(*report.gamma->certificate));
        std::cout << "certificate " << cfg.out << '\n';
    }
    if (!report.consistent)
        return exit_claim_failed;
    return report.complete ? exit_ok : exit_inconclusive;
}

void write_artifacts(const fs::path& dir, const CounterexampleBundle& bundle,
                     const CounterexampleReport& report, const std::string& text)
{
    fs::create_directories(dir);
    detail::write_file((dir / "report.txt").string(), text);
    write_edge_list_file((dir / "G.txt").string(), bundle.G);
    write_edge_list_file((dir / "Hstar.txt").string(), bundle.Hstar);
    write_edge_list_file((dir / "GxK2.txt").string(), prism(bundle.G));
    auto cert = [&](const char* name, const std::optional<EternalCertificate>& c) {
        if (c)
            detail::write_file((dir / name).string(), format_certificate(*c));
    };
    cert("gamma-Hstar.cert", report.gamma_hstar);
    cert("gamma-G.cert", report.gamma_g);
    cert("GxK2-upper.cert", report.prism_upper);
    cert("gamma-GxK2.cert", report.gamma_prism);
    if (report.cover_g)
        detail::write_file((dir / "cover-G.txt").string(), format_cover(*report.cover_g));
    if (report.cover_prism)
        detail::write_file((dir / "cover-GxK2.txt").string(), format_cover(*report.cover_prism));
}

int cmd_refute(int k, const RunConfig& cfg)
{
    if (k < 2)
        throw UsageError("refute needs k >= 2");
    PipelineOptions options{cfg.search(), cfg.game()};

    std::vector<Vertex> ws;
    if (cfg.all_w) {
        const int h_size = tower_sizes(k, k * (k + 1) / 2 + 1).back();
        for (Vertex w = 0; w < h_size; ++w)
            ws.push_back(w);
    }
    else {
        ws.push_back(cfg.w);
    }

    int refuted = 0, failed = 0;
    for (Vertex w : ws) {
        const auto bundle = build_counterexample(k, w);
        const auto report = verify_counterexample(bundle, options);
        const auto text = format_counterexample_report(bundle, report, options);
        std::cout << text;
        if (!cfg.out.empty()) {
            fs::path dir = cfg.all_w ? fs::path(cfg.out) / ("w" + std::to_string(w)) : fs::path(cfg.out);
            write_artifacts(dir, bundle, report, text);
        }
        refuted += report.verdict == Verdict::conjecture_refuted;
        failed += report.verdict == Verdict::claim_failed;
    }
    if (cfg.all_w)
        std::cout << "all-w runs " << ws.size() << " refuted " << refuted << " failed " << failed
                  << '\n';
    if (failed)
        return exit_claim_failed;
    return refuted == static_cast<int>(ws.size()) ? exit_ok : exit_inconclusive;
}

int cmd_suite(const std::string& name, const RunConfig& cfg)
{
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown suite \"" + name + "\"");
    SuiteOptions options;
    options.seed = cfg.seed;
    options.samples = cfg.samples;
    options.max_n = cfg.max_n;
    options.search = cfg.search();
    options.game = cfg.game();
    auto report = run_suite(name, options);
    std::cout << report.text;
    if (report.failed)
        return exit_claim_failed;
    return report.inconclusive ? exit_inconclusive : exit_ok;
}

int cmd_verify_cert(const std::string& graph_path, const std::string& cert_path)
{
    const auto g = load(graph_path);
    const auto cert = parse_certificate(detail::read_file(cert_path));
    auto check = verify_certificate(g, cert);
    if (!check.accepted) {
        std::cout << "rejected: " << check.reason << '\n';
        return exit_claim_failed;
    }
    std::cout << "accepted: k " << cert.k << ' ' << (cert.guardable ? "guardable" : "not-guardable")
              << " configs " << cert.count() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact eternal domination and clique cover toolkit for graph prisms"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);
    RunConfig cfg;

    std::string kind;
    std::vector<std::string> construct_args;
    auto* construct = app.add_subcommand("construct", "Build a graph and write it as an edge list");
    construct->add_option("kind", kind,
                          "complete|empty|cycle|path|complement|join|product|prism|mycielskian|tower|counterexample")
        ->required();
    construct->add_option("args", construct_args, "Sizes or input edge-list files");
    construct->add_option("--out", cfg.out, "Output file (default: stdout)");
    construct->add_option("--w", cfg.w, "Pendant anchor for counterexample");

    std::string graph_file;
    auto* params = app.add_subcommand("params", "Exact alpha, omega, chi, theta (and gamma) of a graph");
    params->add_option("graph", graph_file, "Edge-list file")->required();
    params->add_flag("--gamma", cfg.with_gamma, "Also compute the eternal domination number");
    params->add_option("--out", cfg.out, "Where to write the gamma certificate");
    add_budget_flags(params, cfg);

    int k = 0;
    auto* refute = app.add_subcommand("refute", "Build and verify the prism counterexample for k");
    refute->add_option("k", k, "Clique number of the tower base (k >= 2)")->required();
    refute->add_flag("--all-w", cfg.all_w, "Repeat for every choice of the pendant anchor");
    refute->add_option("--w", cfg.w, "Pendant anchor (vertex of H)");
    refute->add_option("--out", cfg.out, "Directory for the report, certificates and witnesses");
    add_budget_flags(refute, cfg);

    std::string suite_name;
    auto* suite = app.add_subcommand("suite", "Run a seeded property suite");
    suite->add_option("name", suite_name, "Suite name")->required();
    suite->add_option("--seed", cfg.seed, "Random seed");
    suite->add_option("--samples", cfg.samples, "Number of random graphs")->check(CLI::NonNegativeNumber);
    suite->add_option("--max-n", cfg.max_n, "Largest random graph order")->check(CLI::PositiveNumber);
    add_budget_flags(suite, cfg);

    std::string cert_file;
    auto* verify = app.add_subcommand("verify-cert", "Independently check an eternal-domination certificate");
    verify->add_option("graph", graph_file, "Edge-list file")->required();
    verify->add_option("cert", cert_file, "Certificate file")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*construct)
            return cmd_construct(kind, construct_args, cfg);
        if (*params)
            return cmd_params(graph_file, cfg);
        if (*refute)
            return cmd_refute(k, cfg);
        if (*suite)
            return cmd_suite(suite_name, cfg);
        if (*verify)
            return cmd_verify_cert(graph_file, cert_file);
    }
    catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return exit_data;
    }
    catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_data;
    }
    return exit_usage;
}
