#pragma once

#include <pvoc/community.hpp>
#include <pvoc/graph.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pvoc {

/**
 * Read-only community lookup over a partition's assignment, optionally with a
 * single vertex placed in another community. Lets trial moves be evaluated
 * without copying or mutating the partition.
 */
class AssignmentView {
public:
    explicit AssignmentView(const Partition& p) : base_(p.assignment()) {}
    explicit AssignmentView(std::span<const CommunityId> base) : base_(base) {}

    AssignmentView with_move(VertexId v, CommunityId target) const {
        AssignmentView moved(*this);
        moved.moved_ = v;
        moved.target_ = target;
        moved.has_move_ = true;
        return moved;
    }

    CommunityId operator()(VertexId v) const { return has_move_ && v == moved_ ? target_ : base_[v]; }

private:
    std::span<const CommunityId> base_;
    VertexId moved_ = 0;
    CommunityId target_ = 0;
    bool has_move_ = false;
};

/// Edge counts from a vertex into each foreign community, ascending by community id.
struct ExternalPull {
    std::optional<std::size_t> e_max; // empty when the vertex has no external edge
    std::vector<std::pair<CommunityId, std::size_t>> per_community;
};

/// Everything permanence is built from, for one vertex under one assignment.
struct PermanenceView {
    std::size_t internal = 0;                  // I(v)
    std::size_t degree = 0;                    // D(v)
    std::optional<std::size_t> e_max;          // E_max(v)
    double c_in = 0.0;
    double perm = 0.0;
};

/// Fraction of linked pairs among v's same-community neighbors; 0 with fewer than two of them.
double internal_clustering(const Graph& g, const AssignmentView& a, VertexId v);
double internal_clustering(const Graph& g, const Partition& p, VertexId v);

ExternalPull external_pull(const Graph& g, const AssignmentView& a, VertexId v);
ExternalPull external_pull(const Graph& g, const Partition& p, VertexId v);

/**
 * Permanence of v:
 *
 *   perm(v) = I(v) / (E_max(v) * D(v)) - (1 - c_in(v))
 *
 * and perm(v) = c_in(v) when v has no external neighbor. Lies in [-1, 1];
 * -1 is reached when v has no same-community neighbor. Throws IsolatedVertex
 * for degree-0 vertices.
 */
PermanenceView permanence_view(const Graph& g, const AssignmentView& a, VertexId v);
double permanence(const Graph& g, const AssignmentView& a, VertexId v);
double permanence(const Graph& g, const Partition& p, VertexId v);

/// perm(v) plus the permanence of every neighbor of v. Terms are summed in
/// ascending order so that equal multisets of values give bit-identical sums.
double neighborhood_permanence_sum(const Graph& g, const AssignmentView& a, VertexId v);
double neighborhood_permanence_sum(const Graph& g, const Partition& p, VertexId v);

} // namespace pvoc
