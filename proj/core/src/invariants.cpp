#include "prismdom/invariants.hpp"

#include "prismdom/constructions.hpp"
#include "prismdom/edge_list.hpp"
#include "prismdom/text_util.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace prismdom {

int ColoringWitness::colors() const
{
    int top = -1;
    for (int c : color)
        top = std::max(top, c);
    return top + 1;
}

int CliqueCoverWitness::singleton_count() const
{
    return static_cast<int>(
        std::count_if(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; }));
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(std::vector<VertexSet> adj, NodeCounter& counter)
        : adj_(std::move(adj)), counter_(counter)
    {
    }

    std::vector<Vertex> run(VertexSet candidates)
    {
        if (!candidates.empty())
            expand(std::move(candidates));
        return best_;
    }

private:
    void colour_sort(const VertexSet& candidates, std::vector<Vertex>& order,
                     std::vector<int>& bound) const
    {
        VertexSet uncoloured = candidates;
        int colour = 0;
        while (!uncoloured.empty()) {
            ++colour;
            VertexSet available = uncoloured;
            while (!available.empty()) {
                Vertex v = available.first();
                available.erase(v);
                uncoloured.erase(v);
                available.subtract(adj_[v]);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
    }

    void expand(VertexSet candidates)
    {
        counter_.tick();
        std::vector<Vertex> order;
        std::vector<int> bound;
        colour_sort(candidates, order, bound);
        for (auto i = order.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(bound[i]) <= best_.size())
                return;
            Vertex v = order[i];
            current_.push_back(v);
            VertexSet next = candidates & adj_[v];
            if (next.empty()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            }
            else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.erase(v);
        }
    }

    std::vector<VertexSet> adj_;
    NodeCounter& counter_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
};

CliqueResult max_clique_counted(const Graph& g, NodeCounter& counter)
{
    const int n = g.vertex_count();
    // Search over vertices relabelled by non-increasing degree.
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    std::vector<Vertex> position(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        position[order[i]] = i;

    std::vector<VertexSet> adj(static_cast<std::size_t>(n), VertexSet(n));
    for (int i = 0; i < n; ++i)
        g.neighbors(order[i]).for_each([&](Vertex u) { adj[i].insert(position[u]); });

    CliqueSearch search(std::move(adj), counter);
    auto found = search.run(VertexSet::full(n));

    CliqueResult result;
    for (Vertex v : found)
        result.vertices.push_back(order[v]);
    std::sort(result.vertices.begin(), result.vertices.end());
    result.size = static_cast<int>(result.vertices.size());
    return result;
}

std::vector<VertexSet> components(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<VertexSet> parts;
    VertexSet unseen = VertexSet::full(n);
    while (!unseen.empty()) {
        VertexSet part(n);
        VertexSet frontier(n);
        frontier.insert(unseen.first());
        while (!frontier.empty()) {
            part |= frontier;
            VertexSet next(n);
            frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
            next.subtract(part);
            frontier = std::move(next);
        }
        unseen.subtract(part);
        parts.push_back(std::move(part));
    }
    return parts;
}

class ColoringSearch {
public:
    ColoringSearch(const Graph& g, int k, NodeCounter& counter)
        : g_(g), n_(g.vertex_count()), k_(k), counter_(counter),
          colour_(static_cast<std::size_t>(n_), -1),
          blocked_(static_cast<std::size_t>(n_) * static_cast<std::size_t>(k), 0),
          saturation_(static_cast<std::size_t>(n_), 0)
    {
    }

    std::optional<std::vector<int>> run(const std::vector<Vertex>& clique)
    {
        if (static_cast<int>(clique.size()) > k_)
            return std::nullopt;
        for (std::size_t i = 0; i < clique.size(); ++i)
            assign(clique[i], static_cast<int>(i));
        used_ = static_cast<int>(clique.size());
        if (dead_ > 0)
            return std::nullopt;
        if (!solve(n_ - static_cast<int>(clique.size())))
            return std::nullopt;
        return colour_;
    }

private:
    int& blocked(Vertex v, int c) { return blocked_[static_cast<std::size_t>(v) * k_ + c]; }

    void assign(Vertex v, int c)
    {
        colour_[v] = c;
        g_.neighbors(v).for_each([&](Vertex u) {
            if (blocked(u, c)++ == 0) {
                if (++saturation_[u] == k_ && colour_[u] < 0)
                    ++dead_;
            }
        });
    }

    void unassign(Vertex v, int c)
    {
        g_.neighbors(v).for_each([&](Vertex u) {
            if (--blocked(u, c) == 0) {
                if (saturation_[u]-- == k_ && colour_[u] < 0)
                    --dead_;
            }
        });
        colour_[v] = -1;
    }

    Vertex select() const
    {
        Vertex best = -1;
        for (Vertex v = 0; v < n_; ++v) {
            if (colour_[v] >= 0)
                continue;
            if (best < 0 || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    bool solve(int remaining)
    {
        if (remaining == 0)
            return true;
        counter_.tick();
        const Vertex v = select();
        const int limit = std::min(used_ + 1, k_);
        for (int c = 0; c < limit; ++c) {
            if (blocked(v, c) != 0)
                continue;
            const int saved_used = used_;
            used_ = std::max(used_, c + 1);
            assign(v, c);
            if (dead_ == 0 && solve(remaining - 1))
                return true;
            unassign(v, c);
            used_ = saved_used;
        }
        return false;
    }

    const Graph& g_;
    int n_;
    int k_;
    NodeCounter& counter_;
    std::vector<int> colour_;
    std::vector<int> blocked_;
    std::vector<int> saturation_;
    int used_ = 0;
    int dead_ = 0;
};

std::optional<ColoringWitness> find_coloring_counted(const Graph& g, int k,
                                                     const std::vector<Vertex>& clique,
                                                     NodeCounter& counter)
{
    if (g.vertex_count() == 0)
        return ColoringWitness{};
    if (k <= 0)
        return std::nullopt;

    // Components are coloured independently, otherwise a refutation inside
    // one component is repeated for every colouring of the others.
    const auto parts = components(g);
    if (parts.size() == 1) {
        ColoringSearch search(g, k, counter);
        auto colours = search.run(clique);
        if (!colours)
            return std::nullopt;
        return canonical_coloring(std::move(*colours));
    }
    std::vector<int> colours(static_cast<std::size_t>(g.vertex_count()), -1);
    for (const auto& part : parts) {
        const auto members = part.to_vector();
        std::vector<Vertex> local_clique;
        for (Vertex v : clique)
            if (part.contains(v))
                local_clique.push_back(static_cast<Vertex>(
                    std::lower_bound(members.begin(), members.end(), v) - members.begin()));
        const auto sub = g.induced(part);
        ColoringSearch search(sub, k, counter);
        auto local = search.run(local_clique);
        if (!local)
            return std::nullopt;
        for (std::size_t i = 0; i < members.size(); ++i)
            colours[static_cast<std::size_t>(members[i])] = (*local)[i];
    }
    return canonical_coloring(std::move(colours));
}

ChromaticResult chromatic_counted(const Graph& g, NodeCounter& counter)
{
    if (g.vertex_count() == 0)
        return {};
    auto clique = max_clique_counted(g, counter);
    for (int k = clique.size;; ++k) {
        if (auto witness = find_coloring_counted(g, k, clique.vertices, counter))
            return {k, std::move(*witness)};
    }
}

// Blocks of a cover of g - removed, mapped back to g's vertex numbering.
CliqueCoverWitness lift_cover(const ColoringWitness& coloring, const VertexSet& kept)
{
    auto original = kept.to_vector();
    std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(coloring.colors()));
    for (std::size_t i = 0; i < coloring.color.size(); ++i)
        blocks[static_cast<std::size_t>(coloring.color[i])].push_back(original[i]);
    return canonical_cover(std::move(blocks));
}

// Covers g - removed with `blocks` cliques, if possible.
std::optional<CliqueCoverWitness> cover_without(const Graph& g, const VertexSet& removed,
                                                int blocks, NodeCounter& counter)
{
    auto kept = g.all_vertices();
    kept.subtract(removed);
    auto rest = complement(g.induced(kept));
    auto clique = max_clique_counted(rest, counter);
    auto coloring = find_coloring_counted(rest, blocks, clique.vertices, counter);
    if (!coloring)
        return std::nullopt;
    auto cover = lift_cover(*coloring, kept);
    removed.for_each([&](Vertex v) { cover.blocks.push_back({v}); });
    return canonical_cover(std::move(cover.blocks));
}

} // namespace

CliqueResult max_clique(const Graph& g, SearchBudget budget)
{
    NodeCounter counter(budget);
    return max_clique_counted(g, counter);
}

CliqueResult independence_number(const Graph& g, SearchBudget budget)
{
    return max_clique(complement(g), budget);
}

std::optional<ColoringWitness> find_coloring(const Graph& g, int k,
                                             const std::vector<Vertex>& clique,
                                             SearchBudget budget)
{
    NodeCounter counter(budget);
    return find_coloring_counted(g, k, clique, counter);
}

ChromaticResult chromatic_number(const Graph& g, SearchBudget budget)
{
    NodeCounter counter(budget);
    return chromatic_counted(g, counter);
}

CoverResult clique_cover_number(const Graph& g, SearchBudget budget)
{
    auto chi = chromatic_number(complement(g), budget);
    return {chi.chi, cover_from_classes(chi.witness)};
}

CriticalityResult is_vertex_critical(const Graph& g, SearchBudget budget)
{
    NodeCounter counter(budget);
    const int chi = chromatic_counted(g, counter).chi;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto rest = g.without_vertex(v);
        auto clique = max_clique_counted(rest, counter);
        if (!find_coloring_counted(rest, chi - 1, clique.vertices, counter))
            return {false, v};
    }
    return {true, std::nullopt};
}

SingletonResult max_singletons_q(const Graph& g, SearchBudget budget)
{
    NodeCounter counter(budget);
    const int n = g.vertex_count();
    const auto co = complement(g);
    const int theta = chromatic_counted(co, counter).chi;

    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < n; ++v) {
        VertexSet removed(n);
        removed.insert(v);
        if (cover_without(g, removed, theta - 1, counter))
            candidates.push_back(v);
    }

    const int c = static_cast<int>(candidates.size());
    for (int size = std::min(theta, c); size >= 1; --size) {
        // Singletons of one minimum cover are pairwise non-adjacent, so only
        // independent subsets of the candidates are tried.
        std::vector<int> pick;
        VertexSet chosen(n);
        std::optional<CliqueCoverWitness> found;
        auto search = [&](auto&& self, int from) -> void {
            if (found)
                return;
            if (static_cast<int>(pick.size()) == size) {
                found = cover_without(g, chosen, theta - size, counter);
                return;
            }
            for (int i = from; i <= c - (size - static_cast<int>(pick.size())); ++i) {
                Vertex v = candidates[i];
                if (g.neighbors(v).intersects(chosen))
                    continue;
                pick.push_back(v);
                chosen.insert(v);
                self(self, i + 1);
                chosen.erase(v);
                pick.pop_back();
                if (found)
                    return;
            }
        };
        search(search, 0);
        if (found) {
            if (found->singleton_count() != size)
                throw std::logic_error("singleton witness is not maximal");
            return {size, std::move(*found)};
        }
    }

    auto cover = cover_without(g, VertexSet(n), theta, counter);
    return {0, std::move(*cover)};
}

std::optional<CliqueCoverWitness> cover_with_singleton(const Graph& g, Vertex w, SearchBudget budget,
                                                       std::optional<int> known_theta)
{
    if (w < 0 || w >= g.vertex_count())
        throw std::out_of_range("vertex " + std::to_string(w) + " is not in the graph");
    NodeCounter counter(budget);
    const int theta = known_theta ? *known_theta : chromatic_counted(complement(g), counter).chi;
    VertexSet removed(g.vertex_count());
    removed.insert(w);
    return cover_without(g, removed, theta - 1, counter);
}

ColoringWitness canonical_coloring(std::vector<int> color)
{
    std::vector<int> rename;
    for (auto& c : color) {
        if (c >= static_cast<int>(rename.size()))
            rename.resize(static_cast<std::size_t>(c) + 1, -1);
        if (rename[c] < 0)
            rename[c] = static_cast<int>(std::count_if(rename.begin(), rename.end(),
                                                       [](int r) { return r >= 0; }));
        c = rename[c];
    }
    return {std::move(color)};
}

CliqueCoverWitness cover_from_classes(const ColoringWitness& coloring)
{
    std::vector<std::vector<Vertex>> blocks(static_cast<std::size_t>(coloring.colors()));
    for (std::size_t v = 0; v < coloring.color.size(); ++v)
        blocks[static_cast<std::size_t>(coloring.color[v])].push_back(static_cast<Vertex>(v));
    return canonical_cover(std::move(blocks));
}

CliqueCoverWitness canonical_cover(std::vector<std::vector<Vertex>> blocks)
{
    std::erase_if(blocks, [](const auto& b) { return b.empty(); });
    for (auto& b : blocks)
        std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return {std::move(blocks)};
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || !g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j] || g.adjacent(vertices[i], vertices[j]))
                return false;
    return true;
}

bool is_proper_coloring(const Graph& g, const ColoringWitness& coloring)
{
    if (static_cast<int>(coloring.color.size()) != g.vertex_count())
        return false;
    for (int c : coloring.color)
        if (c < 0)
            return false;
    for (auto e : g.edges())
        if (coloring.color[e.u] == coloring.color[e.v])
            return false;
    return true;
}

bool is_clique_partition(const Graph& g, const CliqueCoverWitness& cover)
{
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    for (const auto& block : cover.blocks) {
        if (block.empty() || !is_clique(g, block))
            return false;
        for (Vertex v : block) {
            if (v < 0 || v >= g.vertex_count() || seen[v]++)
                return false;
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

std::string format_cover(const CliqueCoverWitness& cover)
{
    std::ostringstream out;
    out << "theta " << cover.size() << '\n';
    for (const auto& block : cover.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i)
            out << (i ? " " : "") << block[i];
        out << '\n';
    }
    return out.str();
}

std::string format_coloring(const ColoringWitness& coloring)
{
    std::ostringstream out;
    out << "chi " << coloring.colors() << '\n';
    for (std::size_t v = 0; v < coloring.color.size(); ++v)
        out << v << ' ' << coloring.color[v] << '\n';
    return out.str();
}

CliqueCoverWitness parse_cover(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next_line();
    auto words = header ? detail::split_words(*header) : std::vector<std::string_view>{};
    if (words.size() != 2 || words[0] != "theta")
        throw FormatError(1, "expected \"theta <k>\"");
    auto count = detail::parse_ints(words[1]);
    if (!count || count->size() != 1 || (*count)[0] < 0)
        throw FormatError(1, "bad block count");
    std::vector<std::vector<Vertex>> blocks;
    while (auto line = reader.next_line()) {
        if (line->empty())
            continue;
        auto values = detail::parse_ints(*line);
        if (!values || values->empty())
            throw FormatError(reader.line_number(), "malformed block");
        std::vector<Vertex> block;
        for (auto v : *values) {
            if (v < 0)
                throw FormatError(reader.line_number(), "negative vertex");
            block.push_back(static_cast<Vertex>(v));
        }
        blocks.push_back(std::move(block));
    }
    if (static_cast<long long>(blocks.size()) != (*count)[0])
        throw FormatError(reader.line_number(), "block count does not match header");
    return {std::move(blocks)};
}

ColoringWitness parse_coloring(std::string_view text)
{
    detail::LineReader reader(text);
    auto header = reader.next_line();
    auto words = header ? detail::split_words(*header) : std::vector<std::string_view>{};
    if (words.size() != 2 || words[0] != "chi")
        throw FormatError(1, "expected \"chi <k>\"");
    auto count = detail::parse_ints(words[1]);
    if (!count || count->size() != 1)
        throw FormatError(1, "bad colour count");
    ColoringWitness coloring;
    while (auto line = reader.next_line()) {
        if (line->empty())
            continue;
        auto values = detail::parse_ints(*line);
        if (!values || values->size() != 2)
            throw FormatError(reader.line_number(), "expected \"vertex color\"");
        if ((*values)[0] != static_cast<long long>(coloring.color.size()))
            throw FormatError(reader.line_number(), "vertices must be listed in order");
        if ((*values)[1] < 0 || (*values)[1] >= (*count)[0])
            throw FormatError(reader.line_number(), "colour out of range");
        coloring.color.push_back(static_cast<int>((*values)[1]));
    }
    if (coloring.colors() != (*count)[0])
        throw FormatError(reader.line_number(), "colour count does not match header");
    return coloring;
}

} // namespace prismdom
