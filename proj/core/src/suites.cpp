#include "prismdom/suites.hpp"

#include "prismdom/constructions.hpp"
#include "prismdom/edge_list.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/pipeline.hpp"
#include "prismdom/report.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace prismdom {

Graph RandomGraphSource::next(int max_n)
{
    static constexpr double densities[] = {0.2, 0.5, 0.8};
    const int n = 1 + static_cast<int>(below(static_cast<std::uint64_t>(max_n)));
    const double p = densities[below(3)];
    return next_with(n, p);
}

Graph RandomGraphSource::next_with(int n, double p)
{
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit() < p)
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph labelled_graph(int n, std::uint64_t edge_bits)
{
    GraphBuilder b(n);
    int bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if ((edge_bits >> bit) & 1U)
                b.add_edge(u, v);
    return std::move(b).build();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{
        "mycielski-chi", "mycielski-omega", "mycielski-critical", "mycielski",
        "prism-theta",   "bound-chain",     "join-lemma",
    };
    return names;
}

int default_max_n(std::string_view suite)
{
    if (suite.starts_with("mycielski"))
        return 8;
    if (suite == "join-lemma")
        return 7;
    return 9;
}

namespace {

enum class Outcome { pass, fail, inconclusive };

struct SampleResult {
    Outcome outcome = Outcome::pass;
    std::string detail;
};

SampleResult fail(std::string detail) { return {Outcome::fail, std::move(detail)}; }

using Check = std::function<SampleResult(const Graph&)>;

SampleResult check_mycielski(const Graph& g, const SuiteOptions& o, bool chi, bool omega, bool critical)
{
    const auto m = mycielskian(g).graph;
    if (chi) {
        const int before = chromatic_number(g, o.search).chi;
        const int after = chromatic_number(m, o.search).chi;
        if (after != before + 1)
            return fail("chi(M(G)) = " + std::to_string(after) + ", chi(G) = " + std::to_string(before));
    }
    if (omega && g.vertex_count() >= 2 && g.is_connected()) {
        const int before = max_clique(g, o.search).size;
        const int after = max_clique(m, o.search).size;
        if (after != before)
            return fail("omega(M(G)) = " + std::to_string(after) + ", omega(G) = " + std::to_string(before));
    }
    if (critical && is_vertex_critical(g, o.search).critical) {
        auto r = is_vertex_critical(m, o.search);
        if (!r.critical)
            return fail("G is vertex-critical but M(G) is not (vertex " +
                        std::to_string(*r.failing_vertex) + ")");
    }
    return {};
}

SampleResult check_prism_theta(const Graph& g, const SuiteOptions& o)
{
    auto r = verify_prism_theta(g, o.search);
    if (!r.direct)
        return {Outcome::inconclusive, "direct theta(G x K2) exceeded the budget"};
    if (!is_clique_partition(prism(g), r.constructive) || r.constructive.size() != r.formula)
        return fail("constructive prism cover is invalid");
    if (*r.direct != r.formula)
        return fail("theta(G x K2) = " + std::to_string(*r.direct) + " but 2*" +
                    std::to_string(r.theta) + " - " + std::to_string(r.q) + " = " +
                    std::to_string(r.formula));
    return {};
}

SampleResult check_bound_chain(const Graph& g, const SuiteOptions& o)
{
    const int alpha = independence_number(g, o.search).size;
    const int theta = clique_cover_number(g, o.search).theta;
    GammaOptions gopt;
    gopt.game = o.game;
    gopt.search = o.search;
    gopt.alpha_hint = alpha;
    gopt.upper_hint = theta;
    const auto gamma = gamma_infinity(g, gopt);
    if (gamma.status == GammaStatus::bracketed)
        return {Outcome::inconclusive, gamma.note};
    if (gamma.status == GammaStatus::bound_violated)
        return fail(gamma.note);
    if (alpha > gamma.value || gamma.value > theta)
        return fail("alpha " + std::to_string(alpha) + " gamma " + std::to_string(gamma.value) +
                    " theta " + std::to_string(theta));
    if (gamma.value > alpha * (alpha + 1) / 2)
        return fail("gamma " + std::to_string(gamma.value) + " exceeds C(alpha+1,2)");
    return {};
}

SampleResult check_join_lemma(const Graph& g, const SuiteOptions& o)
{
    PipelineOptions po{o.search, o.game};
    const int theta = clique_cover_number(g, o.search).theta;
    const int alpha = independence_number(g, o.search).size;
    for (int p = alpha; p <= theta; ++p) {
        auto r = verify_join_lemma(g, p, po);
        if (r.status == JoinLemmaStatus::hypothesis_violated)
            continue;
        if (r.status == JoinLemmaStatus::inconclusive)
            return {Outcome::inconclusive, r.note};
        if (r.status == JoinLemmaStatus::failed)
            return fail("p " + std::to_string(p) + ": alpha " + std::to_string(r.join_alpha) +
                        " gamma " + std::to_string(r.join_gamma) + " theta " +
                        std::to_string(r.join_theta) + " (theta(G) " + std::to_string(r.theta) + ")");
    }
    return {};
}

Check make_check(std::string_view name, const SuiteOptions& o)
{
    if (name == "mycielski-chi")
        return [&o](const Graph& g) { return check_mycielski(g, o, true, false, false); };
    if (name == "mycielski-omega")
        return [&o](const Graph& g) { return check_mycielski(g, o, false, true, false); };
    if (name == "mycielski-critical")
        return [&o](const Graph& g) { return check_mycielski(g, o, false, false, true); };
    if (name == "mycielski")
        return [&o](const Graph& g) { return check_mycielski(g, o, true, true, true); };
    if (name == "prism-theta")
        return [&o](const Graph& g) { return check_prism_theta(g, o); };
    if (name == "bound-chain")
        return [&o](const Graph& g) { return check_bound_chain(g, o); };
    if (name == "join-lemma")
        return [&o](const Graph& g) { return check_join_lemma(g, o); };
    throw std::invalid_argument("unknown suite \"" + std::string(name) + "\"");
}

} // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& options)
{
    const auto check = make_check(name, options);
    const int max_n = options.max_n > 0 ? options.max_n : default_max_n(name);

    SuiteReport report;
    report.name = std::string(name);
    std::ostringstream out;
    out << "suite " << name << " seed " << options.seed << " samples " << options.samples
        << " max-n " << max_n << '\n';
    out << "tool " << tool_version() << '\n';
    out << budget_line(options.search, options.game) << '\n';

    auto run_one = [&](const std::string& label, const Graph& g) {
        ++report.checked;
        SampleResult r;
        try {
            r = check(g);
        }
        catch (const BudgetExceeded& e) {
            r = {Outcome::inconclusive, e.what()};
        }
        switch (r.outcome) {
        case Outcome::pass:
            ++report.passed;
            return;
        case Outcome::fail:
            ++report.failed;
            out << label << " fail " << r.detail << '\n';
            break;
        case Outcome::inconclusive:
            ++report.inconclusive;
            out << label << " inconclusive " << r.detail << '\n';
            break;
        }
        std::istringstream lines(serialize_edge_list(g));
        for (std::string line; std::getline(lines, line);)
            out << "  " << line << '\n';
    };

    if (name == "bound-chain") {
        for (std::uint64_t bits = 0; bits < 64; ++bits)
            run_one("labelled-4 " + std::to_string(bits), labelled_graph(4, bits));
    }
    RandomGraphSource source(options.seed);
    for (int i = 0; i < options.samples; ++i)
        run_one("sample " + std::to_string(i), source.next(max_n));

    out << "result checked " << report.checked << " pass " << report.passed << " fail "
        << report.failed << " inconclusive " << report.inconclusive << '\n';
    report.text = out.str();
    return report;
}

} // namespace prismdom
