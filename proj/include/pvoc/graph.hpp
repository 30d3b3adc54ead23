#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pvoc {

using VertexId = std::uint32_t;
using CommunityId = std::uint32_t;

/**
 * Bidirectional map between contiguous internal vertex ids and the external
 * labels found in input files. Internal ids follow first-appearance order.
 */
class VertexLabels {
public:
    VertexLabels() = default;

    /// Returns the id of `label`, registering it if unseen.
    VertexId intern(std::string_view label);

    std::optional<VertexId> find(std::string_view label) const;
    const std::string& label(VertexId v) const { return labels_[v]; }
    std::size_t size() const noexcept { return labels_.size(); }

    /// Label subset in the given id order; the result is renumbered 0..k-1.
    VertexLabels subset(std::span<const VertexId> ids) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
};

/// Total order on labels: integer-looking labels numerically first, then the rest lexicographically.
bool label_less(std::string_view a, std::string_view b);

/**
 * Immutable undirected simple graph in compressed adjacency form. Neighbor
 * lists are sorted ascending; self-loops and parallel edges never occur.
 */
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool has_edge(VertexId u, VertexId v) const;

    const VertexLabels& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_.label(v); }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend Graph build_graph_internal(VertexLabels, std::vector<std::pair<VertexId, VertexId>>);

    VertexLabels labels_;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> neighbors_;
};

/// Builds a graph from labelled edges. Self-loops are dropped and duplicates collapsed.
/// Throws EmptyGraph when no edge survives.
Graph build_graph(std::span<const std::pair<std::string, std::string>> edges);
Graph build_graph(std::span<const std::pair<long long, long long>> edges);
Graph build_graph(std::initializer_list<std::pair<long long, long long>> edges);

/// Graph on an existing label set; edges given in internal ids. Vertices may be isolated.
Graph build_graph_internal(VertexLabels labels, std::vector<std::pair<VertexId, VertexId>> edges);

/// Subgraph induced by `vertices`, renumbered in ascending id order; labels preserved.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

} // namespace pvoc
