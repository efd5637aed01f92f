#include "prismdom/pipeline.hpp"

#include "prismdom/constructions.hpp"

#include <functional>
#include <stdexcept>

namespace prismdom {

Graph build_tower(int k, int l)
{
    if (k < 2)
        throw std::invalid_argument("tower base k must be at least 2");
    if (l < k)
        throw std::invalid_argument("tower height l must be at least k");
    Graph g = complete_graph(k);
    for (int level = k; level < l; ++level)
        g = mycielskian(g).graph;
    return g;
}

std::vector<int> tower_sizes(int k, int l)
{
    if (k < 2 || l < k)
        throw std::invalid_argument("tower needs 2 <= k <= l");
    std::vector<int> sizes{k};
    for (int level = k; level < l; ++level)
        sizes.push_back(2 * sizes.back() + 1);
    return sizes;
}

CounterexampleBundle build_counterexample(int k, Vertex w)
{
    if (k < 2)
        throw std::invalid_argument("counterexample needs k >= 2");
    CounterexampleBundle b;
    b.k = k;
    b.t = k * (k + 1) / 2 + 1;
    b.M = build_tower(k, b.t);
    if (w < 0 || w >= b.M.vertex_count())
        throw std::out_of_range("w = " + std::to_string(w) + " is not a vertex of H");
    b.H = complement(b.M);
    b.Hstar = join(b.H, empty_graph(b.t - 1));
    b.w = w;
    b.G = add_pendant(b.Hstar, w);
    b.x_pendant = b.Hstar.vertex_count();

    const auto t = std::to_string(b.t);
    const auto s = std::to_string(b.t - 1);
    b.claims = {
        {"alpha(H)", std::to_string(k)},
        {"theta(H)", t},
        {"alpha(H*)", s},
        {"gamma(H*)", s},
        {"theta(H*)", t},
        {"alpha(G)", t},
        {"gamma(G)", t},
        {"theta(G)", t},
        {"theta(GxK2)", std::to_string(2 * b.t)},
        {"gamma(GxK2)", "<=" + std::to_string(2 * b.t - 1)},
    };
    return b;
}

const char* to_string(ClaimStatus s)
{
    switch (s) {
    case ClaimStatus::ok: return "ok";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::conjecture_refuted: return "conjecture-refuted";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::claim_failed: return "claim-failed";
    }
    return "?";
}

const char* to_string(JoinLemmaStatus s)
{
    switch (s) {
    case JoinLemmaStatus::verified: return "verified";
    case JoinLemmaStatus::failed: return "failed";
    case JoinLemmaStatus::hypothesis_violated: return "hypothesis-violated";
    case JoinLemmaStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

const ClaimResult* CounterexampleReport::find(const std::string& name) const
{
    for (const auto& c : claims)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

constexpr const char* budget_exceeded = "budget-exceeded";

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

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string bracket(const GammaResult& g)
{
    return "[" + std::to_string(g.lower) + "," + std::to_string(g.upper) + "]";
}

class ClaimLog {
public:
    explicit ClaimLog(std::vector<ClaimResult>& out) : out_(out) {}

    void value(std::string name, int expected, std::optional<int> computed)
    {
        if (!computed)
            add(std::move(name), std::to_string(expected), budget_exceeded, ClaimStatus::inconclusive);
        else
            add(std::move(name), std::to_string(expected), std::to_string(*computed),
                *computed == expected ? ClaimStatus::ok : ClaimStatus::fail);
    }

    void flag(std::string name, std::optional<bool> computed)
    {
        if (!computed)
            add(std::move(name), "yes", budget_exceeded, ClaimStatus::inconclusive);
        else
            add(std::move(name), "yes", yes_no(*computed), *computed ? ClaimStatus::ok : ClaimStatus::fail);
    }

    void add(std::string name, std::string expected, std::string computed, ClaimStatus status,
             bool required = false)
    {
        out_.push_back({std::move(name), std::move(expected), std::move(computed), status, required});
    }

    void side(std::string name, std::string expected, std::string computed, ClaimStatus status)
    {
        add(std::move(name), std::move(expected), std::move(computed), status);
        out_.back().side = true;
    }

private:
    std::vector<ClaimResult>& out_;
};

} // namespace

CounterexampleReport verify_counterexample(const CounterexampleBundle& b, const PipelineOptions& options)
{
    const auto& search = options.search;
    const int t = b.t;
    CounterexampleReport report;
    report.k = b.k;
    report.t = t;
    report.w = b.w;
    ClaimLog log(report.claims);

    // Tower M = M_k^t.
    log.value("chi(M)", t, attempt([&] { return chromatic_number(b.M, search).chi; }));
    log.value("omega(M)", b.k, attempt([&] { return max_clique(b.M, search).size; }));
    log.flag("vertex-critical(M)", attempt([&] { return is_vertex_critical(b.M, search).critical; }));

    // H = complement(M).
    log.value("alpha(H)", b.k, attempt([&] { return independence_number(b.H, search).size; }));
    const auto theta_h = attempt([&] { return clique_cover_number(b.H, search).theta; });
    log.value("theta(H)", t, theta_h);
    log.flag("singleton-cover(H,every-w)", attempt([&]() -> std::optional<bool> {
                 if (!theta_h)
                     return std::nullopt;
                 for (Vertex v = 0; v < b.H.vertex_count(); ++v)
                     if (!cover_with_singleton(b.H, v, search, theta_h))
                         return false;
                 return true;
             }).value_or(std::nullopt));

    // H* = H v complement(K_{t-1}).
    const auto alpha_hs = attempt([&] { return independence_number(b.Hstar, search).size; });
    const auto theta_hs = attempt([&] { return clique_cover_number(b.Hstar, search).theta; });
    GammaOptions gopt;
    gopt.game = options.game;
    gopt.search = search;
    gopt.alpha_hint = alpha_hs;
    gopt.upper_hint = theta_hs.value_or(b.Hstar.vertex_count());
    const auto gamma_hs = gamma_infinity(b.Hstar, gopt);
    log.value("alpha(H*)", t - 1, alpha_hs);
    if (gamma_hs.status == GammaStatus::exact) {
        log.value("gamma(H*)", t - 1, gamma_hs.value);
        report.gamma_hstar = gamma_hs.certificate;
    }
    else {
        log.add("gamma(H*)", std::to_string(t - 1), bracket(gamma_hs),
                gamma_hs.status == GammaStatus::bracketed ? ClaimStatus::inconclusive : ClaimStatus::fail);
    }
    log.value("theta(H*)", t, theta_hs);
    log.flag("singleton-cover(H*,w)", attempt([&]() -> std::optional<bool> {
                 if (!theta_hs)
                     return std::nullopt;
                 return cover_with_singleton(b.Hstar, b.w, search, theta_hs).has_value();
             }).value_or(std::nullopt));
    log.flag("max-independent-avoiding-w(H*)", attempt([&]() -> std::optional<bool> {
                 if (!alpha_hs)
                     return std::nullopt;
                 return independence_number(b.Hstar.without_vertex(b.w), search).size == *alpha_hs;
             }).value_or(std::nullopt));

    // G = H* plus a pendant at w.
    const auto alpha_g = attempt([&] { return independence_number(b.G, search).size; });
    const auto theta_g = attempt([&] { return clique_cover_number(b.G, search).theta; });
    gopt.alpha_hint = alpha_g;
    gopt.upper_hint = theta_g.value_or(b.G.vertex_count());
    const auto gamma_g = gamma_infinity(b.G, gopt);
    log.value("alpha(G)", t, alpha_g);
    std::optional<int> gamma_g_value;
    if (gamma_g.status == GammaStatus::exact) {
        gamma_g_value = gamma_g.value;
        log.value("gamma(G)", t, gamma_g.value);
        report.gamma_g = gamma_g.certificate;
    }
    else {
        log.add("gamma(G)", std::to_string(t), bracket(gamma_g),
                gamma_g.status == GammaStatus::bracketed ? ClaimStatus::inconclusive : ClaimStatus::fail);
    }
    log.value("theta(G)", t, theta_g);

    // theta(G x K2) from the singleton parameter, cross-checked directly.
    const auto prism_graph = prism(b.G);
    const auto q = attempt([&] { return max_singletons_q(b.G, search); });
    log.value("q(G)", 0, q ? std::optional<int>(q->q) : std::nullopt);
    std::optional<int> theta_prism_formula;
    if (q && theta_g) {
        theta_prism_formula = 2 * *theta_g - q->q;
        report.cover_g = q->witness;
        report.cover_prism = lift_cover_to_prism(q->witness, b.G.vertex_count());
    }
    log.value("theta(GxK2)", 2 * t, theta_prism_formula);
    const auto theta_prism_direct = attempt([&] { return clique_cover_number(prism_graph, search).theta; });
    log.value("theta(GxK2)-direct", 2 * t, theta_prism_direct);
    const auto theta_prism = theta_prism_formula ? theta_prism_formula : theta_prism_direct;

    // gamma(G x K2): exact by ascending k, plus the explicit 2t - 1 family.
    const auto alpha_prism = attempt([&] { return independence_number(prism_graph, search).size; });
    gopt.alpha_hint = alpha_prism;
    gopt.upper_hint = theta_prism.value_or(prism_graph.vertex_count());
    const auto gamma_prism = gamma_infinity(prism_graph, gopt);
    if (gamma_prism.status == GammaStatus::exact)
        report.gamma_prism = gamma_prism.certificate;

    const int upper_k = 2 * t - 1;
    std::optional<bool> guardable_upper;
    if (gamma_prism.status == GammaStatus::exact && gamma_prism.value == upper_k) {
        guardable_upper = true;
        report.prism_upper = gamma_prism.certificate;
    }
    else {
        try {
            auto cert = is_eternally_k_guardable(prism_graph, upper_k, options.game);
            guardable_upper = cert.guardable;
            if (cert.guardable)
                report.prism_upper = std::move(cert);
        }
        catch (const BudgetExceeded&) {
        }
    }
    log.flag("guardable(GxK2," + std::to_string(upper_k) + ")", guardable_upper);

    if (!alpha_prism)
        log.side("alpha(GxK2)", "=gamma(GxK2)", budget_exceeded, ClaimStatus::inconclusive);
    else if (gamma_prism.status != GammaStatus::exact)
        log.side("alpha(GxK2)", "=gamma(GxK2)", std::to_string(*alpha_prism), ClaimStatus::inconclusive);
    else
        log.side("alpha(GxK2)", "=gamma(GxK2)", std::to_string(*alpha_prism),
                *alpha_prism == gamma_prism.value ? ClaimStatus::ok : ClaimStatus::fail);

    const std::string below = "<" + std::to_string(2 * t);
    if (gamma_prism.status == GammaStatus::exact)
        log.add("gamma(GxK2)", below, std::to_string(gamma_prism.value),
                gamma_prism.value < 2 * t ? ClaimStatus::ok : ClaimStatus::fail);
    else
        log.add("gamma(GxK2)", below, bracket(gamma_prism),
                gamma_prism.status == GammaStatus::bracketed ? ClaimStatus::inconclusive : ClaimStatus::fail);

    // The two facts that together contradict the conjecture.
    if (gamma_g_value && theta_g)
        log.add("gamma(G)=theta(G)", "yes", yes_no(*gamma_g_value == *theta_g),
                *gamma_g_value == *theta_g ? ClaimStatus::ok : ClaimStatus::fail, true);
    else
        log.add("gamma(G)=theta(G)", "yes", budget_exceeded, ClaimStatus::inconclusive, true);

    std::optional<int> prism_gamma_upper;
    if (gamma_prism.status == GammaStatus::exact)
        prism_gamma_upper = gamma_prism.value;
    else if (guardable_upper == true)
        prism_gamma_upper = upper_k;
    if (prism_gamma_upper && theta_prism)
        log.add("gamma(GxK2)<theta(GxK2)", "yes", yes_no(*prism_gamma_upper < *theta_prism),
                *prism_gamma_upper < *theta_prism ? ClaimStatus::ok : ClaimStatus::fail, true);
    else
        log.add("gamma(GxK2)<theta(GxK2)", "yes", budget_exceeded, ClaimStatus::inconclusive, true);

    bool any_fail = false;
    bool required_ok = true;
    for (const auto& c : report.claims) {
        if (c.side)
            continue;
        any_fail = any_fail || c.status == ClaimStatus::fail;
        if (c.required)
            required_ok = required_ok && c.status == ClaimStatus::ok;
    }
    report.verdict = any_fail      ? Verdict::claim_failed
                     : required_ok ? Verdict::conjecture_refuted
                                   : Verdict::inconclusive;
    return report;
}

CliqueCoverWitness lift_cover_to_prism(const CliqueCoverWitness& cover, int n)
{
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& block : cover.blocks) {
        if (block.size() == 1) {
            blocks.push_back({block[0], n + block[0]});
            continue;
        }
        blocks.push_back(block);
        std::vector<Vertex> upper;
        for (Vertex v : block)
            upper.push_back(n + v);
        blocks.push_back(std::move(upper));
    }
    return canonical_cover(std::move(blocks));
}

PrismThetaResult verify_prism_theta(const Graph& g, SearchBudget budget)
{
    PrismThetaResult r;
    auto q = max_singletons_q(g, budget);
    r.theta = q.witness.size();
    r.q = q.q;
    r.formula = 2 * r.theta - r.q;
    r.constructive = lift_cover_to_prism(q.witness, g.vertex_count());
    r.singleton_cover = std::move(q.witness);
    r.direct = attempt([&] { return clique_cover_number(prism(g), budget).theta; });
    return r;
}

JoinLemmaReport verify_join_lemma(const Graph& g, int p, const PipelineOptions& options)
{
    JoinLemmaReport r;
    r.p = p;
    try {
        r.alpha = independence_number(g, options.search).size;
        r.theta = clique_cover_number(g, options.search).theta;
        GammaOptions gopt;
        gopt.game = options.game;
        gopt.search = options.search;
        gopt.alpha_hint = r.alpha;
        gopt.upper_hint = r.theta;
        auto gamma = gamma_infinity(g, gopt);
        if (gamma.status != GammaStatus::exact) {
            r.note = "gamma(G): " + gamma.note;
            return r;
        }
        r.gamma = gamma.value;
        if (p < r.gamma || p > r.theta) {
            r.status = JoinLemmaStatus::hypothesis_violated;
            r.note = "need " + std::to_string(r.gamma) + " <= p <= " + std::to_string(r.theta);
            return r;
        }

        const auto joined = join(g, empty_graph(p));
        r.join_alpha = independence_number(joined, options.search).size;
        r.join_theta = clique_cover_number(joined, options.search).theta;
        gopt.alpha_hint = r.join_alpha;
        gopt.upper_hint = r.join_theta;
        auto join_gamma = gamma_infinity(joined, gopt);
        if (join_gamma.status != GammaStatus::exact) {
            r.note = "gamma(join): " + join_gamma.note;
            return r;
        }
        r.join_gamma = join_gamma.value;
        const bool holds = r.join_alpha == p && r.join_gamma == p && r.join_theta == r.theta;
        r.status = holds ? JoinLemmaStatus::verified : JoinLemmaStatus::failed;
    }
    catch (const BudgetExceeded& e) {
        r.status = JoinLemmaStatus::inconclusive;
        r.note = e.what();
    }
    return r;
}

} // namespace prismdom
