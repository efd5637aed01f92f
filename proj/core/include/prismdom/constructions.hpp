#pragma once

#include "prismdom/graph.hpp"

#include <string>
#include <vector>

namespace prismdom {

enum class VertexRole {
    original, // v_i of the input graph
    shadow,   // v'_i added by the Mycielskian
    apex,     // the vertex adjacent to every shadow
    join_added,
    pendant,
};

const char* to_string(VertexRole role);

struct RoleEntry {
    VertexRole role;
    int index; // i for original/shadow/join_added, 0 otherwise
    friend bool operator==(const RoleEntry&, const RoleEntry&) = default;
};

// One role per vertex of a constructed graph, plus the name of the
// construction that produced it.
struct VertexLabeling {
    std::string provenance;
    std::vector<RoleEntry> roles;

    int count(VertexRole role) const;
};

struct MycielskianResult {
    Graph graph;
    VertexLabeling labeling;
};

// Each of these throws std::invalid_argument when its size argument is zero.
Graph complete_graph(int k);
Graph empty_graph(int p);
Graph cycle_graph(int n);
Graph path_graph(int n);

Graph complement(const Graph& g);

// G's vertices keep their indices; H's vertex j becomes n_G + j.
Graph join(const Graph& g, const Graph& h);

// (u, v) is vertex u * n_H + v.
Graph cartesian_product(const Graph& g, const Graph& h);

// Copy 1 of vertex v is v, copy 2 is n + v.
Graph prism(const Graph& g);

// Originals 0..n-1, shadow of v_i at n + i, apex at 2n. Edge set is
// E(G), plus v_i v'_j for every v_i v_j in E(G), plus v'_i x for all i.
MycielskianResult mycielskian(const Graph& g);

// New vertex n adjacent only to w. Throws std::out_of_range if w >= n.
Graph add_pendant(const Graph& g, Vertex w);

VertexLabeling join_labeling(int left, int right);
VertexLabeling pendant_labeling(int base);

} // namespace prismdom
