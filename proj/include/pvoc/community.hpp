#pragma once

#include <pvoc/graph.hpp>

#include <span>
#include <vector>

namespace pvoc {

/**
 * Disjoint community assignment over vertices 0..n-1.
 *
 * Community ids are canonical: communities are numbered in order of their
 * smallest member, so two partitions compare equal exactly when they induce
 * the same set of vertex sets.
 */
class Partition {
public:
    Partition() = default;

    /// Any labelling (one entry per vertex) is accepted and renumbered.
    static Partition from_assignment(std::span<const CommunityId> labels);
    /// Throws IncompleteCover if a vertex is missing, NotDisjoint if one repeats,
    /// InvalidArgument on empty communities, EmptyCover when there are none.
    static Partition from_communities(std::size_t num_vertices, const std::vector<std::vector<VertexId>>& communities);

    std::size_t num_vertices() const noexcept { return assignment_.size(); }
    std::size_t num_communities() const noexcept { return members_.size(); }
    CommunityId community_of(VertexId v) const { return assignment_[v]; }
    std::span<const CommunityId> assignment() const noexcept { return assignment_; }
    std::span<const VertexId> members(CommunityId c) const { return members_[c]; }
    const std::vector<std::vector<VertexId>>& communities() const noexcept { return members_; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<CommunityId> assignment_;
    std::vector<std::vector<VertexId>> members_;
};

/**
 * Overlapping community structure. Each community is a sorted vertex list and
 * the inverse index holds each vertex's sorted community ids.
 *
 * A complete cover gives every vertex at least one community. Partial covers
 * (ground truth that leaves vertices out) must be requested explicitly and
 * report the missing vertices through uncovered().
 */
class Cover {
public:
    enum class Coverage { Complete, AllowPartial };

    Cover() = default;

    static Cover from_communities(std::size_t num_vertices, std::vector<std::vector<VertexId>> communities,
                                  Coverage coverage = Coverage::Complete);
    static Cover from_partition(const Partition& p);

    std::size_t num_vertices() const noexcept { return memberships_.size(); }
    std::size_t num_communities() const noexcept { return members_.size(); }
    std::span<const VertexId> members(CommunityId c) const { return members_[c]; }
    std::span<const CommunityId> memberships(VertexId v) const { return memberships_[v]; }
    const std::vector<std::vector<VertexId>>& communities() const noexcept { return members_; }

    bool is_complete() const;
    bool is_disjoint() const;
    std::vector<VertexId> uncovered() const;

    /// Communities as a sorted list of sorted vertex lists, independent of community ids.
    std::vector<std::vector<VertexId>> canonical() const;

    /// Collapses a complete cover with singleton memberships. Throws NotDisjoint / IncompleteCover.
    Partition to_partition() const;

    /// Cover on `vertices` (renumbered 0..k-1 in the given order); emptied communities are dropped.
    Cover restrict_to(std::span<const VertexId> vertices, Coverage coverage = Coverage::AllowPartial) const;

    friend bool operator==(const Cover&, const Cover&) = default;

private:
    std::vector<std::vector<VertexId>> members_;
    std::vector<std::vector<CommunityId>> memberships_;
};

inline Cover partition_to_cover(const Partition& p) { return Cover::from_partition(p); }

/// Same vertex sets regardless of community numbering.
bool same_communities(const Cover& a, const Cover& b);

struct GroundTruthStats {
    std::size_t num_communities = 0;
    double avg_size = 0.0;
    double avg_memberships = 0.0; // over covered vertices
};

GroundTruthStats ground_truth_stats(const Cover& c);

} // namespace pvoc
