#include "prismdom/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismdom {

const char* to_string(VertexRole role)
{
    switch (role) {
    case VertexRole::original: return "original";
    case VertexRole::shadow: return "shadow";
    case VertexRole::apex: return "apex";
    case VertexRole::join_added: return "join-added";
    case VertexRole::pendant: return "pendant";
    }
    return "?";
}

int VertexLabeling::count(VertexRole role) const
{
    return static_cast<int>(std::count_if(roles.begin(), roles.end(),
                                          [&](const RoleEntry& r) { return r.role == role; }));
}

namespace {

void require_positive(int value, const char* what)
{
    if (value < 1)
        throw std::invalid_argument(std::string(what) + " needs at least one vertex");
}

} // namespace

Graph complete_graph(int k)
{
    require_positive(k, "complete_graph");
    GraphBuilder b(k);
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

Graph empty_graph(int p)
{
    require_positive(p, "empty_graph");
    return GraphBuilder(p).build();
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw std::invalid_argument("cycle_graph needs at least three vertices");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

Graph path_graph(int n)
{
    require_positive(n, "path_graph");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

Graph complement(const Graph& g)
{
    const int n = g.vertex_count();
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return std::move(b).build();
}

Graph join(const Graph& g, const Graph& h)
{
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    GraphBuilder b(ng + nh);
    for (auto e : g.edges())
        b.add_edge(e.u, e.v);
    for (auto e : h.edges())
        b.add_edge(ng + e.u, ng + e.v);
    for (Vertex u = 0; u < ng; ++u)
        for (Vertex v = 0; v < nh; ++v)
            b.add_edge(u, ng + v);
    return std::move(b).build();
}

Graph cartesian_product(const Graph& g, const Graph& h)
{
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    GraphBuilder b(ng * nh);
    for (Vertex u = 0; u < ng; ++u)
        for (auto e : h.edges())
            b.add_edge(u * nh + e.u, u * nh + e.v);
    for (Vertex v = 0; v < nh; ++v)
        for (auto e : g.edges())
            b.add_edge(e.u * nh + v, e.v * nh + v);
    return std::move(b).build();
}

Graph prism(const Graph& g)
{
    // K_2 as the left factor gives copy-major indexing: (c, v) -> c * n + v.
    return cartesian_product(complete_graph(2), g);
}

MycielskianResult mycielskian(const Graph& g)
{
    const int n = g.vertex_count();
    require_positive(n, "mycielskian");
    const Vertex apex = 2 * n;
    GraphBuilder b(2 * n + 1);
    for (auto e : g.edges()) {
        b.add_edge(e.u, e.v);
        b.add_edge(e.u, n + e.v);
        b.add_edge(e.v, n + e.u);
    }
    for (Vertex i = 0; i < n; ++i)
        b.add_edge(n + i, apex);

    VertexLabeling labels;
    labels.provenance = "mycielskian";
    labels.roles.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int i = 0; i < n; ++i)
        labels.roles.push_back({VertexRole::original, i});
    for (int i = 0; i < n; ++i)
        labels.roles.push_back({VertexRole::shadow, i});
    labels.roles.push_back({VertexRole::apex, 0});
    return {std::move(b).build(), std::move(labels)};
}

Graph add_pendant(const Graph& g, Vertex w)
{
    const int n = g.vertex_count();
    if (w < 0 || w >= n)
        throw std::out_of_range("pendant anchor " + std::to_string(w) + " is not a vertex");
    GraphBuilder b(n + 1);
    for (auto e : g.edges())
        b.add_edge(e.u, e.v);
    b.add_edge(w, n);
    return std::move(b).build();
}

VertexLabeling join_labeling(int left, int right)
{
    VertexLabeling labels;
    labels.provenance = "join";
    for (int i = 0; i < left; ++i)
        labels.roles.push_back({VertexRole::original, i});
    for (int i = 0; i < right; ++i)
        labels.roles.push_back({VertexRole::join_added, i});
    return labels;
}

VertexLabeling pendant_labeling(int base)
{
    VertexLabeling labels;
    labels.provenance = "pendant";
    for (int i = 0; i < base; ++i)
        labels.roles.push_back({VertexRole::original, i});
    labels.roles.push_back({VertexRole::pendant, 0});
    return labels;
}

} // namespace prismdom
