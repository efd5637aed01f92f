#include "prismdom/edge_list.hpp"

#include "prismdom/text_util.hpp"

#include <fstream>
#include <sstream>

namespace prismdom {

Graph parse_edge_list(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next_line();
    if (!header)
        throw FormatError(1, "missing header line \"n m\"");
    auto head = detail::parse_ints(*header);
    if (!head || head->size() != 2)
        throw FormatError(reader.line_number(), "header must be two integers \"n m\"");
    const long long n = (*head)[0];
    const long long m = (*head)[1];
    if (n < 0 || m < 0)
        throw FormatError(reader.line_number(), "negative count in header");
    if (n > (1 << 20))
        throw FormatError(reader.line_number(), "vertex count too large");
    if (m > n * (n - 1) / 2)
        throw FormatError(reader.line_number(), "more edges than a simple graph allows");

    GraphBuilder b(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        auto line = reader.next_line();
        if (!line)
            throw FormatError(reader.line_number() + 1,
                              "expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        auto pair = detail::parse_ints(*line);
        if (!pair || pair->size() != 2)
            throw FormatError(reader.line_number(), "malformed edge line");
        const long long u = (*pair)[0];
        const long long v = (*pair)[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw FormatError(reader.line_number(), "vertex index out of range");
        if (u == v)
            throw FormatError(reader.line_number(), "self-loop");
        if (b.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)))
            throw FormatError(reader.line_number(), "duplicate edge");
        b.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    while (auto extra = reader.next_line())
        if (!detail::split_words(*extra).empty())
            throw FormatError(reader.line_number(), "unexpected content after the last edge");
    return std::move(b).build();
}

std::string serialize_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto e : g.edges())
        out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph read_edge_list_file(const std::string& path)
{
    return parse_edge_list(detail::read_file(path));
}

void write_edge_list_file(const std::string& path, const Graph& g)
{
    detail::write_file(path, serialize_edge_list(g));
}

} // namespace prismdom
