#include "prismdom/graph.hpp"

#include <stdexcept>
#include <string>

namespace prismdom {

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (Vertex u = 0; u < vertex_count(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (u < v)
                out.push_back({u, v});
        });
    return out;
}

Graph Graph::induced(const VertexSet& keep) const
{
    std::vector<Vertex> index(rows_.size(), -1);
    int next = 0;
    keep.for_each([&](Vertex v) { index[v] = next++; });

    GraphBuilder b(next);
    keep.for_each([&](Vertex u) {
        (rows_[u] & keep).for_each([&](Vertex v) {
            if (u < v)
                b.add_edge(index[u], index[v]);
        });
    });
    return std::move(b).build();
}

Graph Graph::without_vertex(Vertex v) const
{
    auto keep = all_vertices();
    keep.erase(v);
    return induced(keep);
}

bool Graph::is_connected() const
{
    if (rows_.empty())
        return true;
    VertexSet seen(vertex_count());
    VertexSet frontier(vertex_count());
    frontier.insert(0);
    seen.insert(0);
    while (!frontier.empty()) {
        VertexSet next(vertex_count());
        frontier.for_each([&](Vertex v) { next |= rows_[v]; });
        next.subtract(seen);
        seen |= next;
        frontier = std::move(next);
    }
    return seen.count() == vertex_count();
}

GraphBuilder::GraphBuilder(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v)
{
    const int n = vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n)
        throw std::invalid_argument("edge " + std::to_string(u) + " " + std::to_string(v) +
                                    " out of range for " + std::to_string(n) + " vertices");
    if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
    return *this;
}

Graph GraphBuilder::build() &&
{
    Graph g;
    int degree_sum = 0;
    for (const auto& r : rows_)
        degree_sum += r.count();
    g.rows_ = std::move(rows_);
    g.edge_count_ = degree_sum / 2;
    return g;
}

Graph graph_from_edges(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto e : edges)
        b.add_edge(e.u, e.v);
    return std::move(b).build();
}

} // namespace prismdom
