#include "prismdom/report.hpp"

#include "prismdom/constructions.hpp"
#include "prismdom/text_util.hpp"

#include <sstream>

namespace prismdom {

const char* tool_version() { return "prismdom " PRISMDOM_VERSION; }

std::string budget_line(const SearchBudget& search, const GameLimits& game)
{
    std::ostringstream out;
    out << "budget-nodes " << search.nodes << " rank-cap " << game.rank_cap << " work-cap "
        << game.work_cap << " sweep-cap ";
    if (game.sweep_cap == std::numeric_limits<std::uint64_t>::max())
        out << "none";
    else
        out << game.sweep_cap;
    return out.str();
}

std::string graph_line(const std::string& name, const Graph& g)
{
    return "graph " + name + " n " + std::to_string(g.vertex_count()) + " m " +
           std::to_string(g.edge_count()) + " edgehash " + detail::hex64(fingerprint(g).edge_hash);
}

std::string format_claim(const ClaimResult& claim)
{
    return "claim " + claim.name + " expected " + claim.expected + " computed " + claim.computed +
           " status " + to_string(claim.status) + (claim.side ? " side" : "");
}

std::string format_counterexample_report(const CounterexampleBundle& bundle,
                                         const CounterexampleReport& report,
                                         const PipelineOptions& options)
{
    std::ostringstream out;
    out << "refute-report v1\n";
    out << "tool " << tool_version() << '\n';
    out << budget_line(options.search, options.game) << '\n';
    out << "k " << bundle.k << " t " << bundle.t << " w " << bundle.w << " pendant "
        << bundle.x_pendant << '\n';
    out << graph_line("M", bundle.M) << '\n';
    out << graph_line("H", bundle.H) << '\n';
    out << graph_line("H*", bundle.Hstar) << '\n';
    out << graph_line("G", bundle.G) << '\n';
    out << graph_line("GxK2", prism(bundle.G)) << '\n';
    for (const auto& claim : report.claims)
        out << format_claim(claim) << '\n';
    out << "verdict " << to_string(report.verdict) << '\n';
    return out.str();
}

namespace {

std::string join_ints(const std::vector<int>& xs, const char* sep = " ")
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? sep : "") + std::to_string(xs[i]);
    return out;
}

template <typename F>
auto attempt(F&& f) -> std::optional<decltype(f())>
{
    try {
        return f();
    }
    catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

} // namespace

ParamsReport compute_params(const Graph& g, const SearchBudget& search, const GameLimits& game,
                            bool with_gamma)
{
    ParamsReport r;
    r.alpha = attempt([&] { return independence_number(g, search); });
    r.omega = attempt([&] { return max_clique(g, search); });
    r.chi = attempt([&] { return chromatic_number(g, search); });
    r.theta = attempt([&] { return clique_cover_number(g, search); });

    std::ostringstream out;
    std::ostringstream checks;
    auto check = [&](const std::string& name, bool holds) {
        checks << "check " << name << ' ' << (holds ? "ok" : "fail") << '\n';
        r.consistent = r.consistent && holds;
    };
    auto missing = [&](const char* name) {
        out << name << " budget-exceeded\n";
        r.complete = false;
    };

    out << "params v1\n";
    out << "tool " << tool_version() << '\n';
    out << budget_line(search, game) << '\n';
    out << graph_line("input", g) << '\n';

    if (r.alpha) {
        out << "alpha " << r.alpha->size << " witness " << join_ints(r.alpha->vertices) << '\n';
        check("alpha-witness-independent", is_independent_set(g, r.alpha->vertices));
    }
    else {
        missing("alpha");
    }
    if (r.omega) {
        out << "omega " << r.omega->size << " witness " << join_ints(r.omega->vertices) << '\n';
        check("omega-witness-clique", is_clique(g, r.omega->vertices));
    }
    else {
        missing("omega");
    }
    if (r.chi) {
        out << "chi " << r.chi->chi << " coloring " << join_ints(r.chi->witness.color) << '\n';
        check("chi-witness-proper",
              is_proper_coloring(g, r.chi->witness) && r.chi->witness.colors() == r.chi->chi);
    }
    else {
        missing("chi");
    }
    if (r.theta) {
        out << "theta " << r.theta->theta << " cover ";
        for (std::size_t i = 0; i < r.theta->witness.blocks.size(); ++i)
            out << (i ? " | " : "") << join_ints(r.theta->witness.blocks[i]);
        out << '\n';
        check("theta-witness-partition",
              is_clique_partition(g, r.theta->witness) && r.theta->witness.size() == r.theta->theta);
    }
    else {
        missing("theta");
    }
    if (r.omega && r.chi)
        check("omega<=chi", r.omega->size <= r.chi->chi);
    if (r.alpha && r.theta)
        check("alpha<=theta", r.alpha->size <= r.theta->theta);

    if (with_gamma && g.vertex_count() > 0) {
        GammaOptions gopt;
        gopt.game = game;
        gopt.search = search;
        if (r.alpha)
            gopt.alpha_hint = r.alpha->size;
        gopt.upper_hint = r.theta ? r.theta->theta : g.vertex_count();
        r.gamma = gamma_infinity(g, gopt);
        const auto& gamma = *r.gamma;
        if (gamma.status == GammaStatus::exact) {
            out << "gamma " << gamma.value << " family " << gamma.certificate->count() << '\n';
            if (r.alpha && r.theta)
                check("alpha<=gamma<=theta",
                      r.alpha->size <= gamma.value && gamma.value <= r.theta->theta);
            if (r.alpha)
                check("gamma<=C(alpha+1,2)", gamma.value <= r.alpha->size * (r.alpha->size + 1) / 2);
            check("certificate", verify_certificate(g, *gamma.certificate).accepted);
        }
        else if (gamma.status == GammaStatus::bracketed) {
            out << "gamma [" << gamma.lower << "," << gamma.upper << "] budget-exceeded\n";
            r.complete = false;
        }
        else {
            out << "gamma bound-violated\n";
            check("gamma-upper-bounds", false);
        }
    }

    out << checks.str();
    r.text = out.str();
    return r;
}

} // namespace prismdom
