#pragma once

#include "prismdom/vertex_set.hpp"

#include <span>
#include <utility>
#include <vector>

namespace prismdom {

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..n-1, one adjacency bit row
// per vertex. Build through GraphBuilder or the constructions in
// constructions.hpp.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return static_cast<int>(rows_.size()); }
    int edge_count() const { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
    int degree(Vertex v) const { return rows_[v].count(); }

    VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }

    // Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    // Subgraph induced by keep, relabelled to 0..|keep|-1 in increasing order.
    Graph induced(const VertexSet& keep) const;
    Graph without_vertex(Vertex v) const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    std::vector<VertexSet> rows_;
    int edge_count_ = 0;
};

class GraphBuilder {
public:
    explicit GraphBuilder(int n);

    int vertex_count() const { return static_cast<int>(rows_.size()); }
    bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }

    // Throws std::invalid_argument on out-of-range endpoints or self-loops.
    // Adding an existing edge is a no-op.
    GraphBuilder& add_edge(Vertex u, Vertex v);

    Graph build() &&;

private:
    std::vector<VertexSet> rows_;
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

} // namespace prismdom
