#pragma once

#include "prismdom/budget.hpp"
#include "prismdom/eternal.hpp"
#include "prismdom/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace prismdom {

// Labelled Erdos-Renyi graphs: n uniform in [1, max_n], edge probability
// drawn per sample from {0.2, 0.5, 0.8}. Draws use raw generator output only,
// so a seed gives the same graphs on every platform.
class RandomGraphSource {
public:
    explicit RandomGraphSource(std::uint64_t seed) : rng_(seed) {}

    Graph next(int max_n);
    Graph next_with(int n, double p);

private:
    std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
    double unit() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 rng_;
};

// All 2^(n(n-1)/2) labelled graphs on n vertices, edges ordered (0,1), (0,2), ...
Graph labelled_graph(int n, std::uint64_t edge_bits);

struct SuiteOptions {
    std::uint64_t seed = 1;
    int samples = 100;
    int max_n = 0; // 0 selects the suite's default
    SearchBudget search;
    GameLimits game;
};

struct SuiteReport {
    std::string name;
    int checked = 0;
    int passed = 0;
    int failed = 0;
    int inconclusive = 0;
    std::string text;

    bool ok() const { return failed == 0 && inconclusive == 0; }
};

// mycielski-chi, mycielski-omega, mycielski-critical, mycielski (all three),
// prism-theta, bound-chain, join-lemma.
const std::vector<std::string>& suite_names();
int default_max_n(std::string_view suite);

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

} // namespace prismdom
