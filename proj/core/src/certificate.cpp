#include "prismdom/eternal.hpp"

#include "prismdom/edge_list.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/text_util.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace prismdom {

GraphFingerprint fingerprint(const Graph& g)
{
    std::string bytes;
    const auto edges = g.edges();
    bytes.reserve(edges.size() * 8);
    auto put = [&](std::uint32_t x) {
        for (int i = 0; i < 4; ++i)
            bytes.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
    };
    for (auto e : edges) {
        put(static_cast<std::uint32_t>(e.u));
        put(static_cast<std::uint32_t>(e.v));
    }
    return {g.vertex_count(), g.edge_count(), detail::fnv1a64(bytes)};
}

EternalCertificate is_eternally_k_guardable(const Graph& g, int k, const GameLimits& limits)
{
    auto family = safe_family(g, k, limits);
    EternalCertificate cert;
    cert.graph = fingerprint(g);
    cert.k = k;
    cert.guardable = !family.empty();
    cert.sweeps = family.sweeps();
    cert.configs.reserve(family.count() * static_cast<std::size_t>(k));
    family.for_each([&](std::span<const Vertex> c) { cert.configs.insert(cert.configs.end(), c.begin(), c.end()); });
    return cert;
}

GammaResult gamma_infinity(const Graph& g, const GammaOptions& options)
{
    GammaResult result;
    const int n = g.vertex_count();
    if (n == 0)
        return result;

    std::optional<int> alpha = options.alpha_hint;
    if (!alpha) {
        try {
            alpha = independence_number(g, options.search).size;
        }
        catch (const BudgetExceeded& e) {
            result.note = std::string("alpha: ") + e.what();
        }
    }
    int upper = n;
    if (options.upper_hint) {
        upper = std::min(upper, *options.upper_hint);
    }
    else {
        try {
            upper = clique_cover_number(g, options.search).theta;
        }
        catch (const BudgetExceeded&) {
        }
    }
    result.alpha = alpha.value_or(0);
    result.lower = alpha.value_or(1);
    result.upper = upper;

    // Every graph is eternally guardable with alpha(alpha+1)/2 guards.
    const int choose_bound = alpha ? (*alpha) * (*alpha + 1) / 2 : n;

    for (int k = result.lower; k <= n; ++k) {
        if (k > choose_bound || k > upper) {
            result.status = GammaStatus::bound_violated;
            result.note = "no safe family with " + std::to_string(k - 1) +
                          " guards, contradicting an upper bound of " +
                          std::to_string(std::min(choose_bound, upper));
            return result;
        }
        try {
            auto cert = is_eternally_k_guardable(g, k, options.game);
            if (cert.guardable) {
                result.status = GammaStatus::exact;
                result.value = result.lower = result.upper = k;
                result.certificate = std::move(cert);
                return result;
            }
            result.lower = k + 1;
        }
        catch (const BudgetExceeded& e) {
            result.status = GammaStatus::bracketed;
            result.note = e.what();
            return result;
        }
    }
    result.status = GammaStatus::bound_violated;
    result.note = "no safe family for any guard count";
    return result;
}

namespace {

std::string config_text(std::span<const Vertex> c)
{
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i)
        out += (i ? " " : "") + std::to_string(c[i]);
    return out + "}";
}

// Bit mask of a configuration, as a hashable byte string.
std::string mask_key(std::span<const Vertex> c, int n)
{
    std::string key(static_cast<std::size_t>((n + 7) / 8), '\0');
    for (Vertex v : c)
        key[static_cast<std::size_t>(v >> 3)] |= static_cast<char>(1 << (v & 7));
    return key;
}

bool dominates(const Graph& g, std::span<const Vertex> c)
{
    VertexSet covered(g.vertex_count());
    for (Vertex v : c) {
        covered.insert(v);
        covered |= g.neighbors(v);
    }
    return covered.count() == g.vertex_count();
}

// First attack vertex the configuration cannot answer with a move into the
// family, or -1.
Vertex unanswered_attack(const Graph& g, std::span<const Vertex> c,
                         const std::unordered_set<std::string>& family)
{
    const int n = g.vertex_count();
    std::vector<Vertex> moved(c.begin(), c.end());
    for (Vertex v = 0; v < n; ++v) {
        if (std::find(c.begin(), c.end(), v) != c.end())
            continue;
        bool answered = false;
        for (std::size_t j = 0; j < c.size() && !answered; ++j) {
            if (!g.adjacent(v, c[j]))
                continue;
            moved.assign(c.begin(), c.end());
            moved[j] = v;
            answered = family.count(mask_key(moved, n)) > 0;
        }
        if (!answered)
            return v;
    }
    return -1;
}

void all_subsets(int n, int k, std::vector<Vertex>& pick, int from,
                 const std::function<void(const std::vector<Vertex>&)>& visit)
{
    if (static_cast<int>(pick.size()) == k) {
        visit(pick);
        return;
    }
    for (int v = from; v <= n - (k - static_cast<int>(pick.size())); ++v) {
        pick.push_back(v);
        all_subsets(n, k, pick, v + 1, visit);
        pick.pop_back();
    }
}

} // namespace

CertificateCheck verify_certificate(const Graph& g, const EternalCertificate& cert, std::uint64_t rank_cap)
{
    const int n = g.vertex_count();
    if (!(cert.graph == fingerprint(g)))
        return {false, "fingerprint mismatch"};
    if (cert.k < 1 || cert.k > n)
        return {false, "guard count " + std::to_string(cert.k) + " out of range"};
    if (cert.configs.size() % static_cast<std::size_t>(cert.k) != 0)
        return {false, "malformed config list"};

    std::unordered_set<std::string> family;
    for (std::size_t i = 0; i < cert.count(); ++i) {
        auto c = cert.config(i);
        for (std::size_t j = 0; j < c.size(); ++j)
            if (c[j] < 0 || c[j] >= n || (j && c[j - 1] >= c[j]))
                return {false, "malformed config " + config_text(c)};
        if (!family.insert(mask_key(c, n)).second)
            return {false, "duplicate config " + config_text(c)};
    }

    if (cert.guardable) {
        if (family.empty())
            return {false, "guardable verdict with an empty family"};
        for (std::size_t i = 0; i < cert.count(); ++i) {
            auto c = cert.config(i);
            if (!dominates(g, c))
                return {false, "config " + config_text(c) + " does not dominate"};
            if (Vertex v = unanswered_attack(g, c, family); v >= 0)
                return {false, "closure violated at attack vertex " + std::to_string(v) +
                                   " for config " + config_text(c)};
        }
        return {true, "ok"};
    }

    if (!family.empty())
        return {false, "not-guardable verdict lists configurations"};
    if (configuration_space_size(n, cert.k) > rank_cap)
        return {false, "configuration space too large to re-derive the negative verdict"};

    // Independent elimination, in place and in enumeration order.
    std::vector<std::vector<Vertex>> members;
    std::vector<Vertex> pick;
    all_subsets(n, cert.k, pick, 0, [&](const std::vector<Vertex>& c) {
        if (dominates(g, c)) {
            members.push_back(c);
            family.insert(mask_key(c, n));
        }
    });
    bool changed = true;
    while (changed && !family.empty()) {
        changed = false;
        std::erase_if(members, [&](const std::vector<Vertex>& c) {
            if (unanswered_attack(g, c, family) < 0)
                return false;
            family.erase(mask_key(c, n));
            changed = true;
            return true;
        });
    }
    if (!family.empty())
        return {false, "graph is eternally " + std::to_string(cert.k) + "-guardable, e.g. from " +
                           config_text(members.front())};
    return {true, "ok"};
}

std::string format_certificate(const EternalCertificate& cert)
{
    std::ostringstream out;
    out << "eternal-cert v1\n";
    out << cert.graph.n << ' ' << cert.graph.m << ' ' << detail::hex64(cert.graph.edge_hash) << ' '
        << cert.k << ' ' << (cert.guardable ? "guardable" : "not-guardable") << ' ' << cert.count()
        << '\n';
    for (std::size_t i = 0; i < cert.count(); ++i) {
        auto c = cert.config(i);
        for (std::size_t j = 0; j < c.size(); ++j)
            out << (j ? " " : "") << c[j];
        out << '\n';
    }
    if (!cert.guardable)
        out << "sweeps " << cert.sweeps << '\n';
    return out.str();
}

EternalCertificate parse_certificate(std::string_view text)
{
    detail::LineReader reader(text);
    auto magic = reader.next_line();
    if (!magic || *magic != "eternal-cert v1")
        throw FormatError(1, "expected \"eternal-cert v1\"");
    auto header = reader.next_line();
    if (!header)
        throw FormatError(2, "missing header");
    auto words = detail::split_words(*header);
    if (words.size() != 6)
        throw FormatError(2, "header must be \"n m edgehash k verdict count\"");

    EternalCertificate cert;
    auto number = [&](std::string_view w) {
        auto v = detail::parse_ints(w);
        if (!v || v->size() != 1 || (*v)[0] < 0)
            throw FormatError(2, "bad number \"" + std::string(w) + "\"");
        return (*v)[0];
    };
    cert.graph.n = static_cast<int>(number(words[0]));
    cert.graph.m = static_cast<int>(number(words[1]));
    if (words[2].size() != 16)
        throw FormatError(2, "edge hash must be 16 hex digits");
    cert.graph.edge_hash = 0;
    for (char ch : words[2]) {
        int d;
        if (ch >= '0' && ch <= '9')
            d = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            d = ch - 'a' + 10;
        else
            throw FormatError(2, "edge hash must be lowercase hex");
        cert.graph.edge_hash = (cert.graph.edge_hash << 4) | static_cast<std::uint64_t>(d);
    }
    cert.k = static_cast<int>(number(words[3]));
    if (cert.k < 1)
        throw FormatError(2, "guard count must be positive");
    if (words[4] == "guardable")
        cert.guardable = true;
    else if (words[4] != "not-guardable")
        throw FormatError(2, "verdict must be guardable or not-guardable");
    const long long count = number(words[5]);

    for (long long i = 0; i < count; ++i) {
        auto line = reader.next_line();
        if (!line)
            throw FormatError(reader.line_number() + 1, "missing config line");
        auto values = detail::parse_ints(*line);
        if (!values || static_cast<int>(values->size()) != cert.k)
            throw FormatError(reader.line_number(), "config line must hold " + std::to_string(cert.k) + " vertices");
        for (auto v : *values)
            cert.configs.push_back(static_cast<Vertex>(v));
    }
    while (auto line = reader.next_line()) {
        if (line->empty())
            continue;
        auto extra = detail::split_words(*line);
        if (!cert.guardable && extra.size() == 2 && extra[0] == "sweeps") {
            cert.sweeps = static_cast<std::uint64_t>(number(extra[1]));
            continue;
        }
        throw FormatError(reader.line_number(), "unexpected line after the configurations");
    }
    return cert;
}

} // namespace prismdom
