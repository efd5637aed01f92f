#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library solvers: graphs are plain adjacency masks and
// every quantity comes from direct enumeration.

#include "prismdom/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;

struct SmallGraph {
    int n = 0;
    std::vector<Mask> adj;

    bool edge(int u, int v) const { return (adj[u] >> v) & 1U; }
};

inline SmallGraph from(const prismdom::Graph& g)
{
    SmallGraph s{g.vertex_count(), std::vector<Mask>(static_cast<std::size_t>(g.vertex_count()), 0)};
    for (const auto& e : g.edges()) {
        s.adj[e.u] |= Mask{1} << e.v;
        s.adj[e.v] |= Mask{1} << e.u;
    }
    return s;
}

inline prismdom::Graph to_graph(const SmallGraph& s)
{
    prismdom::GraphBuilder b(s.n);
    for (int u = 0; u < s.n; ++u)
        for (int v = u + 1; v < s.n; ++v)
            if (s.edge(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline bool is_clique(const SmallGraph& g, Mask set)
{
    for (int v = 0; v < g.n; ++v)
        if ((set >> v) & 1U)
            if ((set & ~(Mask{1} << v) & ~g.adj[v]) != 0)
                return false;
    return true;
}

inline bool is_independent(const SmallGraph& g, Mask set)
{
    for (int v = 0; v < g.n; ++v)
        if (((set >> v) & 1U) && (g.adj[v] & set))
            return false;
    return true;
}

inline int omega(const SmallGraph& g)
{
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << g.n); ++s)
        if (is_clique(g, s))
            best = std::max(best, std::popcount(s));
    return best;
}

inline int alpha(const SmallGraph& g)
{
    int best = 0;
    for (Mask s = 0; s < (Mask{1} << g.n); ++s)
        if (is_independent(g, s))
            best = std::max(best, std::popcount(s));
    return best;
}

// Plain backtracking in vertex order.
inline bool colourable(const SmallGraph& g, int k)
{
    std::vector<int> c(static_cast<std::size_t>(g.n), -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == g.n)
            return true;
        for (int x = 0; x < k; ++x) {
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                ok = !(g.edge(u, v) && c[u] == x);
            if (ok) {
                c[v] = x;
                if (go(v + 1))
                    return true;
            }
        }
        c[v] = -1;
        return false;
    };
    return go(0);
}

inline int chi(const SmallGraph& g)
{
    int k = 0;
    while (!colourable(g, k))
        ++k;
    return k;
}

// Minimum clique partition size and, over all minimum partitions, the
// largest number of singleton blocks. Enumerates set partitions.
struct CoverOracle {
    int theta = 0;
    int q = 0;
};

inline CoverOracle cover_oracle(const SmallGraph& g)
{
    CoverOracle best{g.n + 1, 0};
    std::vector<Mask> blocks;
    std::function<void(int)> go = [&](int v) {
        if (static_cast<int>(blocks.size()) > best.theta)
            return;
        if (v == g.n) {
            const int size = static_cast<int>(blocks.size());
            int singles = 0;
            for (Mask b : blocks)
                singles += std::popcount(b) == 1;
            if (size < best.theta)
                best = {size, singles};
            else if (size == best.theta)
                best.q = std::max(best.q, singles);
            return;
        }
        const Mask bit = Mask{1} << v;
        // Indexing, not references: the recursion grows `blocks`.
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            if ((blocks[i] & ~g.adj[v]) == 0) {
                blocks[i] |= bit;
                go(v + 1);
                blocks[i] &= ~bit;
            }
        }
        blocks.push_back(bit);
        go(v + 1);
        blocks.pop_back();
    };
    go(0);
    return best;
}

inline bool is_vertex_critical(const SmallGraph& g)
{
    const int c = chi(g);
    for (int v = 0; v < g.n; ++v) {
        SmallGraph h{g.n - 1, {}};
        for (int u = 0; u < g.n; ++u) {
            if (u == v)
                continue;
            Mask row = 0;
            int j = 0;
            for (int x = 0; x < g.n; ++x) {
                if (x == v)
                    continue;
                if (g.edge(u, x))
                    row |= Mask{1} << j;
                ++j;
            }
            h.adj.push_back(row);
        }
        if (chi(h) != c - 1)
            return false;
    }
    return true;
}

// Eternal guarding by game-tree search. lose(S, d) says the attacker can
// force a non-dominating position within d attacks from guard set S. The
// answer for every d is memoised; the graph is k-guardable iff some
// dominating S is never losing, which is decided once the losing sets stop
// growing with d.
class GameOracle {
public:
    GameOracle(const SmallGraph& g, int k) : g_(g), k_(k) {}

    bool guardable()
    {
        std::vector<Mask> starts;
        for (Mask s = 0; s < (Mask{1} << g_.n); ++s)
            if (std::popcount(s) == k_ && dominates(s))
                starts.push_back(s);
        if (starts.empty())
            return false;
        // A position that survives d attacks for every d up to the number of
        // states survives forever: the losing sets grow monotonically in d
        // and are stable after that many steps at most.
        const int horizon = static_cast<int>(starts.size()) + 1;
        std::size_t previous = 0;
        for (int d = 0; d <= horizon; ++d) {
            std::size_t losing = 0;
            for (Mask s : starts)
                losing += lose(s, d);
            if (losing == starts.size())
                return false;
            if (d > 0 && losing == previous)
                return true;
            previous = losing;
        }
        return true;
    }

private:
    bool dominates(Mask s) const
    {
        Mask seen = s;
        for (int v = 0; v < g_.n; ++v)
            if ((s >> v) & 1U)
                seen |= g_.adj[v];
        return seen == (Mask{1} << g_.n) - 1;
    }

    bool lose(Mask s, int d)
    {
        if (!dominates(s))
            return true;
        if (d == 0)
            return false;
        auto key = std::pair{s, d};
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        bool attacker_wins = false;
        for (int v = 0; v < g_.n && !attacker_wins; ++v) {
            if ((s >> v) & 1U)
                continue;
            bool every_reply_loses = true;
            for (int u = 0; u < g_.n && every_reply_loses; ++u)
                if (((s >> u) & 1U) && g_.edge(u, v))
                    every_reply_loses = lose((s & ~(Mask{1} << u)) | (Mask{1} << v), d - 1);
            attacker_wins = every_reply_loses;
        }
        memo_[key] = attacker_wins;
        return attacker_wins;
    }

    const SmallGraph& g_;
    int k_;
    std::map<std::pair<Mask, int>, bool> memo_;
};

// Whether a family of guard sets is closed: every member dominates and every
// attack on a member can be answered by a move that lands in the family.
inline bool closed_family(const SmallGraph& g, const std::set<Mask>& family)
{
    const Mask all = (Mask{1} << g.n) - 1;
    for (Mask s : family) {
        Mask seen = s;
        for (int v = 0; v < g.n; ++v)
            if ((s >> v) & 1U)
                seen |= g.adj[v];
        if (seen != all)
            return false;
        for (int v = 0; v < g.n; ++v) {
            if ((s >> v) & 1U)
                continue;
            bool answered = false;
            for (int u = 0; u < g.n && !answered; ++u)
                if (((s >> u) & 1U) && g.edge(u, v))
                    answered = family.count((s & ~(Mask{1} << u)) | (Mask{1} << v)) > 0;
            if (!answered)
                return false;
        }
    }
    return true;
}

inline bool guardable(const SmallGraph& g, int k) { return GameOracle(g, k).guardable(); }

inline int gamma_infinity(const SmallGraph& g)
{
    for (int k = 1;; ++k)
        if (guardable(g, k))
            return k;
}

// One representative per isomorphism class of graphs on n vertices. The
// canonical form is the lexicographically smallest upper-triangle bit
// string over all relabellings; classes are grown by adding a vertex to
// every representative on n - 1 vertices.
class IsoClasses {
public:
    static std::vector<SmallGraph> of_order(int n)
    {
        std::vector<SmallGraph> reps{SmallGraph{0, {}}};
        for (int order = 1; order <= n; ++order) {
            std::set<std::uint64_t> seen;
            std::vector<SmallGraph> next;
            for (const auto& base : reps) {
                for (Mask nb = 0; nb < (Mask{1} << (order - 1)); ++nb) {
                    SmallGraph g{order, base.adj};
                    g.adj.push_back(nb);
                    for (int u = 0; u < order - 1; ++u)
                        if ((nb >> u) & 1U)
                            g.adj[u] |= Mask{1} << (order - 1);
                    if (seen.insert(canonical(g)).second)
                        next.push_back(std::move(g));
                }
            }
            reps = std::move(next);
        }
        return reps;
    }

    static std::uint64_t canonical(const SmallGraph& g)
    {
        // Only orderings sorted by degree are tried; relabelled graphs that
        // are isomorphic have the same degree classes, so the minimum over
        // these orderings is still an invariant.
        std::vector<int> perm(static_cast<std::size_t>(g.n));
        std::iota(perm.begin(), perm.end(), 0);
        auto deg = [&](int v) { return std::popcount(g.adj[v]); };
        std::sort(perm.begin(), perm.end(), [&](int a, int b) {
            return deg(a) != deg(b) ? deg(a) < deg(b) : a < b;
        });
        std::vector<std::pair<int, int>> runs;
        for (int i = 0; i < g.n;) {
            int j = i;
            while (j < g.n && deg(perm[j]) == deg(perm[i]))
                ++j;
            runs.emplace_back(i, j);
            i = j;
        }
        std::uint64_t best = ~std::uint64_t{0};
        std::function<void(std::size_t)> go = [&](std::size_t r) {
            if (r == runs.size()) {
                best = std::min(best, encode(g, perm));
                return;
            }
            auto [lo, hi] = runs[r];
            std::sort(perm.begin() + lo, perm.begin() + hi);
            do {
                go(r + 1);
            } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
        };
        go(0);
        return best;
    }

private:
    static std::uint64_t encode(const SmallGraph& g, const std::vector<int>& perm)
    {
        std::uint64_t code = 0;
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                code = (code << 1) | (g.edge(perm[i], perm[j]) ? 1U : 0U);
        return code;
    }
};

} // namespace oracle
