#include <pvoc/graph.hpp>

#include <pvoc/error.hpp>

#include <algorithm>
#include <charconv>

namespace pvoc {

VertexId VertexLabels::intern(std::string_view label) {
    auto [it, inserted] = index_.try_emplace(std::string(label), static_cast<VertexId>(labels_.size()));
    if (inserted)
        labels_.emplace_back(label);
    return it->second;
}

std::optional<VertexId> VertexLabels::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

VertexLabels VertexLabels::subset(std::span<const VertexId> ids) const {
    VertexLabels out;
    for (VertexId v : ids)
        out.intern(labels_[v]);
    return out;
}

namespace {

std::optional<long long> as_integer(std::string_view s) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        return std::nullopt;
    return value;
}

} // namespace

bool label_less(std::string_view a, std::string_view b) {
    auto ia = as_integer(a);
    auto ib = as_integer(b);
    if (ia && ib)
        return *ia != *ib ? *ia < *ib : a < b;
    if (ia.has_value() != ib.has_value())
        return ia.has_value();
    return a < b;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto adj = neighbors(u);
    return std::binary_search(adj.begin(), adj.end(), v);
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.offsets_ != b.offsets_ || a.neighbors_ != b.neighbors_)
        return false;
    for (VertexId v = 0; v < a.num_vertices(); ++v)
        if (a.label(v) != b.label(v))
            return false;
    return true;
}

Graph build_graph_internal(VertexLabels labels, std::vector<std::pair<VertexId, VertexId>> edges) {
    const std::size_t n = labels.size();
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    for (auto& e : edges)
        if (e.first > e.second)
            std::swap(e.first, e.second);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.labels_ = std::move(labels);
    g.offsets_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i)
        g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(2 * edges.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbors_[cursor[u]++] = v;
        g.neighbors_[cursor[v]++] = u;
    }
    for (VertexId v = 0; v < n; ++v)
        std::sort(g.neighbors_.begin() + g.offsets_[v], g.neighbors_.begin() + g.offsets_[v + 1]);
    return g;
}

Graph build_graph(std::span<const std::pair<std::string, std::string>> edges) {
    VertexLabels labels;
    std::vector<std::pair<VertexId, VertexId>> ids;
    ids.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b)
            continue;
        VertexId u = labels.intern(a);
        VertexId v = labels.intern(b);
        ids.emplace_back(u, v);
    }
    if (ids.empty())
        throw Error(ErrorKind::EmptyGraph, "edge list contains no non-loop edge");
    return build_graph_internal(std::move(labels), std::move(ids));
}

Graph build_graph(std::span<const std::pair<long long, long long>> edges) {
    std::vector<std::pair<std::string, std::string>> named;
    named.reserve(edges.size());
    for (const auto& [a, b] : edges)
        named.emplace_back(std::to_string(a), std::to_string(b));
    return build_graph(std::span<const std::pair<std::string, std::string>>(named));
}

Graph build_graph(std::initializer_list<std::pair<long long, long long>> edges) {
    return build_graph(std::span<const std::pair<long long, long long>>(edges.begin(), edges.size()));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
    if (vertices.empty())
        throw Error(ErrorKind::EmptyGraph, "induced subgraph on an empty vertex set");
    std::vector<VertexId> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    constexpr VertexId absent = static_cast<VertexId>(-1);
    std::vector<VertexId> remap(g.num_vertices(), absent);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.num_vertices())
            throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(keep[i]) + " out of range");
        remap[keep[i]] = static_cast<VertexId>(i);
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u : keep)
        for (VertexId w : g.neighbors(u))
            if (u < w && remap[w] != absent)
                edges.emplace_back(remap[u], remap[w]);
    return build_graph_internal(g.labels().subset(keep), std::move(edges));
}

} // namespace pvoc
