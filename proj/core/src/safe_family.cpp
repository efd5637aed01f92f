#include "prismdom/eternal.hpp"

#include "prismdom/combinations.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <thread>

namespace prismdom {

std::uint64_t configuration_space_size(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    return BinomialTable(n, k)(n, k);
}

SafeFamily::SafeFamily(int n, int k, std::vector<std::uint64_t> bitmap, std::uint64_t count,
                       std::uint64_t sweeps)
    : n_(n), k_(k), binom_(n, k), bitmap_(std::move(bitmap)), count_(count), sweeps_(sweeps)
{
}

bool SafeFamily::contains(std::span<const Vertex> sorted_guards) const
{
    if (static_cast<int>(sorted_guards.size()) != k_)
        return false;
    for (std::size_t i = 0; i < sorted_guards.size(); ++i) {
        if (sorted_guards[i] < 0 || sorted_guards[i] >= n_)
            return false;
        if (i && sorted_guards[i - 1] >= sorted_guards[i])
            return false;
    }
    auto r = colex_rank(sorted_guards, binom_);
    return (bitmap_[r >> 6] >> (r & 63)) & 1U;
}

void SafeFamily::for_each(const std::function<void(std::span<const Vertex>)>& visit) const
{
    if (count_ == 0)
        return;
    std::vector<int> c(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i)
        c[i] = i;
    std::uint64_t rank = 0;
    do {
        if ((bitmap_[rank >> 6] >> (rank & 63)) & 1U)
            visit(c);
        ++rank;
    } while (next_colex(c, n_));
}

std::vector<GuardConfig> SafeFamily::members() const
{
    std::vector<GuardConfig> out;
    out.reserve(count_);
    for_each([&](std::span<const Vertex> c) { out.push_back({{c.begin(), c.end()}}); });
    return out;
}

namespace {

class GameTables {
public:
    GameTables(const Graph& g, int k)
        : n_(g.vertex_count()), k_(k), words_((g.vertex_count() + 63) / 64), binom_(n_, k),
          closed_(static_cast<std::size_t>(n_ * words_), 0),
          adj_(static_cast<std::size_t>(n_ * words_), 0)
    {
        for (Vertex v = 0; v < n_; ++v) {
            auto row = g.neighbors(v).words();
            std::copy(row.begin(), row.end(), adj_.begin() + v * words_);
            std::copy(row.begin(), row.end(), closed_.begin() + v * words_);
            closed_[static_cast<std::size_t>(v * words_ + (v >> 6))] |= std::uint64_t{1} << (v & 63);
        }
        const auto all = VertexSet::full(n_);
        full_.assign(all.words().begin(), all.words().end());
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const BinomialTable& binom() const { return binom_; }

    bool adjacent(Vertex u, Vertex v) const
    {
        return (adj_[static_cast<std::size_t>(u * words_ + (v >> 6))] >> (v & 63)) & 1U;
    }

    bool dominates(std::span<const int> c, std::vector<std::uint64_t>& scratch) const
    {
        std::fill(scratch.begin(), scratch.end(), 0);
        for (int v : c)
            for (int w = 0; w < words_; ++w)
                scratch[w] |= closed_[static_cast<std::size_t>(v * words_ + w)];
        return std::equal(scratch.begin(), scratch.end(), full_.begin());
    }

    int words() const { return words_; }

private:
    int n_;
    int k_;
    int words_;
    BinomialTable binom_;
    std::vector<std::uint64_t> closed_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> full_;
};

inline bool test_bit(const std::vector<std::uint64_t>& bits, std::uint64_t r)
{
    return (bits[r >> 6] >> (r & 63)) & 1U;
}

// Runs body(first_word, last_word) over a word-aligned partition of the
// bitmap; each worker writes only its own words.
template <typename Body>
std::uint64_t parallel_over_words(std::size_t words, unsigned threads, Body body)
{
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(words, 1))));
    if (threads == 1)
        return body(std::size_t{0}, words);
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::thread> pool;
    const std::size_t step = (words + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::size_t first = std::min(words, t * step);
        const std::size_t last = std::min(words, first + step);
        pool.emplace_back([&, t, first, last] { partial[t] = body(first, last); });
    }
    for (auto& th : pool)
        th.join();
    std::uint64_t total = 0;
    for (auto p : partial)
        total += p;
    return total;
}

class Sweeper {
public:
    Sweeper(const GameTables& tables, std::uint64_t total) : t_(tables), total_(total) {}

    // Marks every dominating configuration; returns how many there are.
    std::uint64_t seed(std::vector<std::uint64_t>& out, unsigned threads) const
    {
        return parallel_over_words(out.size(), threads, [&](std::size_t first, std::size_t last) {
            std::uint64_t marked = 0;
            std::vector<std::uint64_t> scratch(static_cast<std::size_t>(t_.words()));
            visit_range(first, last, [&](std::uint64_t rank, std::span<const int> c) {
                if (t_.dominates(c, scratch)) {
                    out[rank >> 6] |= std::uint64_t{1} << (rank & 63);
                    ++marked;
                }
            });
            return marked;
        });
    }

    // One synchronous round: next keeps the members of cur that can answer
    // every attack with a move into cur. Returns the number removed.
    std::uint64_t sweep(const std::vector<std::uint64_t>& cur, std::vector<std::uint64_t>& next,
                        unsigned threads) const
    {
        return parallel_over_words(cur.size(), threads, [&](std::size_t first, std::size_t last) {
            std::uint64_t removed = 0;
            Scratch s(t_.k());
            visit_range(first, last, [&](std::uint64_t rank, std::span<const int> c) {
                if (!test_bit(cur, rank))
                    return;
                if (defended(c, cur, s))
                    next[rank >> 6] |= std::uint64_t{1} << (rank & 63);
                else
                    ++removed;
            });
            return removed;
        });
    }

private:
    struct Scratch {
        explicit Scratch(int k)
            : keep(static_cast<std::size_t>(k) + 1), down(static_cast<std::size_t>(k) + 1),
              up(static_cast<std::size_t>(k) + 1)
        {
        }
        // Prefix sums of binom(c_i, i + 1), binom(c_i, i), binom(c_i, i + 2).
        std::vector<std::uint64_t> keep, down, up;
    };

    template <typename F>
    void visit_range(std::size_t first_word, std::size_t last_word, F&& f) const
    {
        const std::uint64_t begin = first_word * 64;
        const std::uint64_t end = std::min<std::uint64_t>(last_word * 64, total_);
        if (begin >= end)
            return;
        std::vector<int> c(static_cast<std::size_t>(t_.k()));
        colex_unrank(begin, c, t_.binom());
        for (std::uint64_t rank = begin; rank < end; ++rank) {
            f(rank, std::span<const int>(c));
            next_colex(c, t_.n());
        }
    }

    bool defended(std::span<const int> c, const std::vector<std::uint64_t>& cur, Scratch& s) const
    {
        const auto& binom = t_.binom();
        const int k = t_.k();
        s.keep[0] = s.down[0] = s.up[0] = 0;
        for (int i = 0; i < k; ++i) {
            s.keep[i + 1] = s.keep[i] + binom(c[i], i + 1);
            s.down[i + 1] = s.down[i] + binom(c[i], i);
            s.up[i + 1] = s.up[i] + binom(c[i], i + 2);
        }
        const std::uint64_t tail = s.keep[k];

        int pos = 0; // guards below v
        for (Vertex v = 0; v < t_.n(); ++v) {
            if (pos < k && c[pos] == v) {
                ++pos;
                continue;
            }
            bool answered = false;
            for (int j = 0; j < k && !answered; ++j) {
                if (!t_.adjacent(v, c[j]))
                    continue;
                std::uint64_t r;
                if (j < pos)
                    r = s.keep[j] + (s.down[pos] - s.down[j + 1]) + binom(v, pos) + (tail - s.keep[pos]);
                else
                    r = s.keep[pos] + binom(v, pos + 1) + (s.up[j] - s.up[pos]) + (tail - s.keep[j + 1]);
                answered = test_bit(cur, r);
            }
            if (!answered)
                return false;
        }
        return true;
    }

    const GameTables& t_;
    std::uint64_t total_;
};

std::uint64_t popcount(const std::vector<std::uint64_t>& bits)
{
    std::uint64_t c = 0;
    for (auto w : bits)
        c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

void check_guard_count(const Graph& g, int k)
{
    if (k < 1 || k > g.vertex_count())
        throw std::invalid_argument("guard count " + std::to_string(k) + " outside 1.." +
                                    std::to_string(g.vertex_count()));
}

} // namespace

void for_each_dominating_config(const Graph& g, int k,
                                const std::function<void(std::span<const Vertex>)>& visit)
{
    check_guard_count(g, k);
    GameTables tables(g, k);
    std::vector<std::uint64_t> scratch(static_cast<std::size_t>(tables.words()));
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i)
        c[i] = i;
    do {
        if (tables.dominates(c, scratch))
            visit(c);
    } while (next_colex(c, g.vertex_count()));
}

std::vector<GuardConfig> dominating_configs(const Graph& g, int k)
{
    std::vector<GuardConfig> out;
    for_each_dominating_config(g, k, [&](std::span<const Vertex> c) { out.push_back({{c.begin(), c.end()}}); });
    return out;
}

SafeFamily safe_family(const Graph& g, int k, const GameLimits& limits)
{
    check_guard_count(g, k);
    const int n = g.vertex_count();
    const std::uint64_t total = configuration_space_size(n, k);
    if (total == BinomialTable::saturated || total > limits.rank_cap)
        throw RankCapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) +
                              ") configurations exceed the rank cap of " +
                              std::to_string(limits.rank_cap));

    GameTables tables(g, k);
    Sweeper sweeper(tables, total);
    const std::size_t words = static_cast<std::size_t>((total + 63) / 64);

    std::vector<std::uint64_t> cur(words, 0);
    std::uint64_t live = sweeper.seed(cur, limits.threads);
    std::uint64_t sweeps = 0;
    std::uint64_t work = 0;
    while (live > 0) {
        if (sweeps >= limits.sweep_cap)
            throw BudgetExceeded("sweep cap of " + std::to_string(limits.sweep_cap) + " reached");
        if (work + live > limits.work_cap)
            throw BudgetExceeded("work cap of " + std::to_string(limits.work_cap) +
                                 " configuration checks exceeded");
        std::vector<std::uint64_t> next(words, 0);
        const std::uint64_t removed = sweeper.sweep(cur, next, limits.threads);
        work += live;
        ++sweeps;
        cur.swap(next);
        if (removed == 0)
            break;
        live -= removed;
    }
    const std::uint64_t count = popcount(cur);
    return SafeFamily(n, k, std::move(cur), count, sweeps);
}

} // namespace prismdom
