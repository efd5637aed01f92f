#pragma once

#include "prismdom/budget.hpp"
#include "prismdom/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prismdom {

struct CliqueResult {
    int size = 0;
    std::vector<Vertex> vertices; // sorted
};

struct ColoringWitness {
    std::vector<int> color; // color[v] in 0..colors()-1

    int colors() const;
};

struct ChromaticResult {
    int chi = 0;
    ColoringWitness witness;
};

// A partition of V(G) into cliques. Blocks are sorted internally and ordered
// by their smallest vertex.
struct CliqueCoverWitness {
    std::vector<std::vector<Vertex>> blocks;

    int size() const { return static_cast<int>(blocks.size()); }
    int singleton_count() const;
};

struct CoverResult {
    int theta = 0;
    CliqueCoverWitness witness;
};

struct CriticalityResult {
    bool critical = false;
    std::optional<Vertex> failing_vertex;
};

struct SingletonResult {
    int q = 0;
    CliqueCoverWitness witness;
};

// Branch and bound with greedy-coloring bounds over bit rows.
CliqueResult max_clique(const Graph& g, SearchBudget budget = {});

// Maximum clique of the complement; the witness is independent in g.
CliqueResult independence_number(const Graph& g, SearchBudget budget = {});

// Decides k-colourability by DSATUR backtracking. A clique, when given, is
// pre-coloured 0..|clique|-1. Returns a canonical witness or nullopt.
std::optional<ColoringWitness> find_coloring(const Graph& g, int k,
                                             const std::vector<Vertex>& clique,
                                             SearchBudget budget = {});

// Tries k = omega, omega+1, ... until colourable.
ChromaticResult chromatic_number(const Graph& g, SearchBudget budget = {});

// theta(G) = chi(complement(G)); the witness is the complement's colour classes.
CoverResult clique_cover_number(const Graph& g, SearchBudget budget = {});

CriticalityResult is_vertex_critical(const Graph& g, SearchBudget budget = {});

// Maximum number of singleton blocks over all minimum clique covers, computed
// as the largest D with theta(G - D) = theta(G) - |D|.
SingletonResult max_singletons_q(const Graph& g, SearchBudget budget = {});

// A minimum clique cover in which w is a block by itself, if one exists.
// Pass theta when it is already known.
std::optional<CliqueCoverWitness> cover_with_singleton(const Graph& g, Vertex w,
                                                       SearchBudget budget = {},
                                                       std::optional<int> theta = std::nullopt);

// Renumber colours by first appearance in vertex order.
ColoringWitness canonical_coloring(std::vector<int> color);
CliqueCoverWitness cover_from_classes(const ColoringWitness& coloring);
CliqueCoverWitness canonical_cover(std::vector<std::vector<Vertex>> blocks);

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool is_independent_set(const Graph& g, const std::vector<Vertex>& vertices);
bool is_proper_coloring(const Graph& g, const ColoringWitness& coloring);
bool is_clique_partition(const Graph& g, const CliqueCoverWitness& cover);

// "theta <k>" then one block per line; "chi <k>" then "vertex color" lines.
std::string format_cover(const CliqueCoverWitness& cover);
std::string format_coloring(const ColoringWitness& coloring);
CliqueCoverWitness parse_cover(std::string_view text);
ColoringWitness parse_coloring(std::string_view text);

} // namespace prismdom
