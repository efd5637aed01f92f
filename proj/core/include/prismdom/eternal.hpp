#pragma once

#include "prismdom/budget.hpp"
#include "prismdom/combinations.hpp"
#include "prismdom/graph.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace prismdom {

// Game model: guards sit on distinct vertices, the attacker picks an
// unoccupied vertex, and exactly one guard adjacent to it moves onto it.

struct GuardConfig {
    std::vector<Vertex> guards; // sorted, distinct
    friend bool operator==(const GuardConfig&, const GuardConfig&) = default;
};

struct GameLimits {
    std::uint64_t rank_cap = std::uint64_t{1} << 28;
    std::uint64_t sweep_cap = std::numeric_limits<std::uint64_t>::max();
    // Total configuration evaluations across all sweeps of one fixed point.
    std::uint64_t work_cap = std::uint64_t{1} << 27;
    unsigned threads = 1;
};

// Greatest fixed point of the defensible-configuration operator, stored as a
// membership bitmap over colexicographic ranks of k-subsets.
class SafeFamily {
public:
    SafeFamily(int n, int k, std::vector<std::uint64_t> bitmap, std::uint64_t count,
               std::uint64_t sweeps);

    int vertex_count() const { return n_; }
    int guard_count() const { return k_; }
    std::uint64_t count() const { return count_; }
    std::uint64_t sweeps() const { return sweeps_; }
    bool empty() const { return count_ == 0; }
    std::span<const std::uint64_t> bitmap() const { return bitmap_; }

    bool contains(std::span<const Vertex> sorted_guards) const;

    // Members in rank order.
    void for_each(const std::function<void(std::span<const Vertex>)>& visit) const;
    std::vector<GuardConfig> members() const;

private:
    int n_;
    int k_;
    BinomialTable binom_;
    std::vector<std::uint64_t> bitmap_;
    std::uint64_t count_;
    std::uint64_t sweeps_;
};

std::uint64_t configuration_space_size(int n, int k);

// The k-subsets D with N[D] = V(G), in colex rank order.
void for_each_dominating_config(const Graph& g, int k,
                                const std::function<void(std::span<const Vertex>)>& visit);
std::vector<GuardConfig> dominating_configs(const Graph& g, int k);

// Throws RankCapExceeded when C(n, k) exceeds limits.rank_cap and
// BudgetExceeded when the sweep or work cap is hit.
SafeFamily safe_family(const Graph& g, int k, const GameLimits& limits = {});

struct GraphFingerprint {
    int n = 0;
    int m = 0;
    std::uint64_t edge_hash = 0;
    friend bool operator==(const GraphFingerprint&, const GraphFingerprint&) = default;
};

// FNV-1a over the sorted edge list, each edge as two little-endian uint32.
GraphFingerprint fingerprint(const Graph& g);

struct EternalCertificate {
    GraphFingerprint graph;
    int k = 0;
    bool guardable = false;
    std::uint64_t sweeps = 0;
    // Members of the safe family, k vertices each, concatenated in rank order.
    std::vector<Vertex> configs;

    std::uint64_t count() const { return k ? configs.size() / static_cast<std::size_t>(k) : 0; }
    std::span<const Vertex> config(std::size_t i) const
    {
        return std::span<const Vertex>(configs).subspan(i * static_cast<std::size_t>(k),
                                                        static_cast<std::size_t>(k));
    }
};

EternalCertificate is_eternally_k_guardable(const Graph& g, int k, const GameLimits& limits = {});

enum class GammaStatus { exact, bracketed, bound_violated };

struct GammaResult {
    GammaStatus status = GammaStatus::exact;
    int value = 0; // valid when exact
    int lower = 0; // always a sound lower bound
    int upper = 0; // always a sound upper bound
    int alpha = 0;
    std::optional<EternalCertificate> certificate; // for k = value
    std::string note;
};

struct GammaOptions {
    GameLimits game;
    SearchBudget search;
    // Known upper bound (e.g. theta); computed if absent and within budget.
    std::optional<int> upper_hint;
    // Skip the alpha computation when it is already known.
    std::optional<int> alpha_hint;
};

// Ascends k from alpha(G) until the safe family is nonempty. On budget
// exhaustion returns [first undecided k, upper bound].
GammaResult gamma_infinity(const Graph& g, const GammaOptions& options = {});

struct CertificateCheck {
    bool accepted = false;
    std::string reason;
};

// Re-checks a certificate without the rank/bitmap machinery: members are
// held in a hash set and every condition is tested directly. A negative
// verdict is re-derived by an independent in-place elimination.
CertificateCheck verify_certificate(const Graph& g, const EternalCertificate& cert,
                                    std::uint64_t rank_cap = std::uint64_t{1} << 28);

std::string format_certificate(const EternalCertificate& cert);
EternalCertificate parse_certificate(std::string_view text);

} // namespace prismdom
