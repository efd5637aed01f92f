#include "prismdom/constructions.hpp"
#include "prismdom/edge_list.hpp"
#include "prismdom/eternal.hpp"
#include "prismdom/invariants.hpp"
#include "prismdom/pipeline.hpp"
#include "prismdom/suites.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace prismdom;

namespace {

int gamma_of(const Graph& g)
{
    auto r = gamma_infinity(g);
    REQUIRE(r.status == GammaStatus::exact);
    return r.value;
}

EternalCertificate forged(const Graph& g, int k, bool guardable, std::vector<Vertex> configs)
{
    EternalCertificate c;
    c.graph = fingerprint(g);
    c.k = k;
    c.guardable = guardable;
    c.configs = std::move(configs);
    return c;
}

} // namespace

TEST_SUITE("eternal")
{
    TEST_CASE("named graphs")
    {
        CHECK(gamma_of(complete_graph(1)) == 1);
        CHECK(gamma_of(complete_graph(5)) == 1);
        CHECK(gamma_of(path_graph(3)) == 2);
        CHECK(gamma_of(cycle_graph(4)) == 2);
        CHECK(gamma_of(cycle_graph(5)) == 3);
        CHECK(gamma_of(cycle_graph(6)) == 3);
        CHECK(gamma_of(empty_graph(4)) == 4);
        CHECK(gamma_of(join(empty_graph(3), complete_graph(1))) == 3); // star K_{1,3}
    }

    TEST_CASE("Grotzsch graph needs six guards")
    {
        auto g = build_tower(2, 4);
        const int gamma = gamma_of(g);
        CHECK(gamma == oracle::gamma_infinity(oracle::from(g)));
        CHECK(gamma == 6);
    }

    TEST_CASE("dominating configurations of the 4-cycle")
    {
        auto configs = dominating_configs(cycle_graph(4), 2);
        CHECK(configs.size() == 6);
        CHECK(dominating_configs(cycle_graph(4), 1).empty());
        CHECK(configuration_space_size(30, 7) == 2'035'800);
    }

    TEST_CASE("safe family of P3 with two guards is every dominating pair")
    {
        auto f = safe_family(path_graph(3), 2);
        CHECK(f.count() == 3);
        const Vertex ends[] = {0, 2};
        CHECK(f.contains(ends));
        auto members = f.members();
        REQUIRE(members.size() == 3);
        CHECK(members[0].guards == std::vector<Vertex>{0, 1});
        CHECK(safe_family(path_graph(3), 1).empty());
    }

    TEST_CASE("guard count outside 1..n is rejected")
    {
        CHECK_THROWS_AS(safe_family(path_graph(3), 0), std::invalid_argument);
        CHECK_THROWS_AS(safe_family(path_graph(3), 4), std::invalid_argument);
        CHECK(safe_family(path_graph(3), 3).count() == 1);
    }

    TEST_CASE("agreement with the game-tree oracle on random graphs")
    {
        RandomGraphSource source(17);
        for (int i = 0; i < 120; ++i) {
            auto g = source.next(8);
            auto s = oracle::from(g);
            for (int k = 1; k <= std::min(4, g.vertex_count()); ++k)
                CHECK(is_eternally_k_guardable(g, k).guardable == oracle::guardable(s, k));
        }
    }

    TEST_CASE("guardability is monotone in k and sandwiched by alpha and theta")
    {
        RandomGraphSource source(23);
        for (int i = 0; i < 60; ++i) {
            auto g = source.next(9);
            const int alpha = independence_number(g).size;
            const int theta = clique_cover_number(g).theta;
            const int gamma = gamma_of(g);
            CHECK(alpha <= gamma);
            CHECK(gamma <= theta);
            CHECK(gamma <= alpha * (alpha + 1) / 2);
            for (int k = gamma; k <= g.vertex_count(); ++k)
                CHECK(is_eternally_k_guardable(g, k).guardable);
        }
    }

    TEST_CASE("thread count does not change the family")
    {
        RandomGraphSource source(29);
        for (int i = 0; i < 20; ++i) {
            auto g = source.next_with(14, 0.5);
            const int k = std::max(1, independence_number(g).size);
            GameLimits one, many;
            many.threads = 4;
            auto a = safe_family(g, k, one);
            auto b = safe_family(g, k, many);
            CHECK(a.count() == b.count());
            CHECK(a.sweeps() == b.sweeps());
            CHECK(std::equal(a.bitmap().begin(), a.bitmap().end(), b.bitmap().begin(), b.bitmap().end()));
        }
    }

    TEST_CASE("limits raise the documented exceptions")
    {
        auto g = cycle_graph(12);
        GameLimits tight;
        tight.rank_cap = 100;
        CHECK_THROWS_AS(safe_family(g, 6, tight), RankCapExceeded);
        GameLimits short_work;
        short_work.work_cap = 10;
        CHECK_THROWS_AS(safe_family(g, 6, short_work), BudgetExceeded);
        // A cap equal to the sweeps actually needed is enough; one fewer is not.
        RandomGraphSource source(37);
        int multi_sweep = 0;
        for (int i = 0; i < 40; ++i) {
            auto h = source.next_with(9, 0.5);
            const int k = independence_number(h).size;
            auto f = safe_family(h, k);
            if (f.sweeps() < 2)
                continue;
            ++multi_sweep;
            GameLimits exact;
            exact.sweep_cap = f.sweeps();
            CHECK(safe_family(h, k, exact).count() == f.count());
            GameLimits fewer;
            fewer.sweep_cap = f.sweeps() - 1;
            CHECK_THROWS_AS(safe_family(h, k, fewer), BudgetExceeded);
        }
        CHECK(multi_sweep > 0);

        GammaOptions opts;
        opts.game = tight;
        auto r = gamma_infinity(g, opts);
        CHECK(r.status == GammaStatus::bracketed);
        CHECK(r.lower == 6);
        CHECK(r.upper == 6);
    }

    TEST_CASE("certificates round trip through text and verify")
    {
        RandomGraphSource source(31);
        for (int i = 0; i < 40; ++i) {
            auto g = source.next(8);
            for (int k = 1; k <= std::min(3, g.vertex_count()); ++k) {
                auto cert = is_eternally_k_guardable(g, k);
                auto text = format_certificate(cert);
                auto back = parse_certificate(text);
                CHECK(format_certificate(back) == text);
                auto check = verify_certificate(g, back);
                CHECK_MESSAGE(check.accepted, check.reason);
            }
        }
    }

    TEST_CASE("forged and mutated certificates are rejected with a reason")
    {
        auto p3 = path_graph(3);
        auto check = verify_certificate(p3, forged(p3, 1, true, {1}));
        CHECK_FALSE(check.accepted);
        CHECK(check.reason.starts_with("closure violated at attack vertex 0"));

        // Dropping {0,2} from P3's two-guard family breaks closure; dropping
        // {0,1} leaves {0,2},{1,2}, which still defend each other.
        auto good = is_eternally_k_guardable(p3, 2);
        REQUIRE(verify_certificate(p3, good).accepted);
        auto without = [&](std::vector<Vertex> gone) {
            auto mutated = good;
            for (std::size_t i = 0; i < mutated.count(); ++i) {
                auto c = mutated.config(i);
                if (std::equal(c.begin(), c.end(), gone.begin(), gone.end())) {
                    mutated.configs.erase(mutated.configs.begin() + static_cast<long>(i * 2),
                                          mutated.configs.begin() + static_cast<long>(i * 2 + 2));
                    break;
                }
            }
            REQUIRE(mutated.count() == good.count() - 1);
            return verify_certificate(p3, mutated);
        };
        auto broken = without({0, 2});
        CHECK_FALSE(broken.accepted);
        CHECK(broken.reason.starts_with("closure violated at attack vertex"));
        CHECK(without({0, 1}).accepted);

        auto k3 = is_eternally_k_guardable(complete_graph(3), 1);
        k3.configs.pop_back();
        CHECK(verify_certificate(complete_graph(3), k3).reason ==
              "closure violated at attack vertex 2 for config {0}");

        CHECK(verify_certificate(cycle_graph(4), good).reason == "fingerprint mismatch");
        CHECK(verify_certificate(p3, forged(p3, 2, true, {0, 2})).reason.starts_with("closure violated"));
        CHECK(verify_certificate(p3, forged(p3, 2, true, {0, 1, 0, 1})).reason.starts_with("duplicate"));
        CHECK(verify_certificate(p3, forged(p3, 2, true, {1, 0})).reason.starts_with("malformed"));
        CHECK(verify_certificate(p3, forged(p3, 1, true, {0})).reason == "config {0} does not dominate");
        CHECK(verify_certificate(p3, forged(p3, 2, false, {})).reason.starts_with("graph is eternally 2-guardable"));
        CHECK(verify_certificate(p3, forged(p3, 1, false, {})).accepted);
        CHECK_FALSE(verify_certificate(p3, forged(p3, 2, true, {})).accepted);
    }

    TEST_CASE("one-config deletions are rejected exactly when closure breaks")
    {
        RandomGraphSource source(43);
        int rejected = 0;
        for (int i = 0; i < 40; ++i) {
            auto g = source.next(7);
            auto s = oracle::from(g);
            for (int k = 1; k <= std::min(3, g.vertex_count()); ++k) {
                auto cert = is_eternally_k_guardable(g, k);
                for (std::size_t drop = 0; drop < cert.count(); ++drop) {
                    auto mutated = cert;
                    const auto at = mutated.configs.begin() + static_cast<long>(drop) * k;
                    mutated.configs.erase(at, at + k);
                    std::set<oracle::Mask> family;
                    for (std::size_t j = 0; j < mutated.count(); ++j) {
                        oracle::Mask m = 0;
                        for (Vertex v : mutated.config(j))
                            m |= oracle::Mask{1} << v;
                        family.insert(m);
                    }
                    const bool closed = !family.empty() && oracle::closed_family(s, family);
                    auto check = verify_certificate(g, mutated);
                    CHECK(check.accepted == closed);
                    if (!closed && !family.empty()) {
                        CHECK(check.reason.starts_with("closure violated at attack vertex"));
                        ++rejected;
                    }
                }
            }
        }
        CHECK(rejected > 0);
    }

    TEST_CASE("certificate parser rejects malformed text")
    {
        CHECK_THROWS_AS(parse_certificate(""), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v2\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123 1 guardable 1\n1\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123456789abcdeF 1 guardable 1\n1\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123456789abcdef 1 maybe 1\n1\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123456789abcdef 1 guardable 2\n1\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123456789abcdef 2 guardable 1\n1\n"), FormatError);
        CHECK_THROWS_AS(parse_certificate("eternal-cert v1\n3 2 0123456789abcdef 1 guardable 1\n1\nextra\n"),
                        FormatError);
        auto ok = parse_certificate("eternal-cert v1\n3 2 0123456789abcdef 1 not-guardable 0\nsweeps 2\n");
        CHECK(ok.sweeps == 2);
        CHECK_FALSE(ok.guardable);
    }

    TEST_CASE("fingerprint depends on the edge set only")
    {
        auto a = fingerprint(parse_edge_list("3 2\n0 1\n1 2\n"));
        auto b = fingerprint(parse_edge_list("3 2\n2 1\n1 0\n"));
        auto c = fingerprint(parse_edge_list("3 2\n0 1\n0 2\n"));
        CHECK(a == b);
        CHECK_FALSE(a == c);
        CHECK(fingerprint(Graph{}).edge_hash == 0xcbf29ce484222325ULL);
    }
}
