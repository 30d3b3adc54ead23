#pragma once

#include <pvoc/community.hpp>
#include <pvoc/graph.hpp>

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace pvoc {

struct StripStudyResult {
    std::size_t removed_count = 0;   // vertices with two or more ground-truth communities
    std::size_t excluded_count = 0;  // vertices the ground truth leaves uncovered
    std::size_t kept_count = 0;
    double nmi = 0.0;
    std::size_t n_truth_comms = 0;   // after stripping
    std::size_t n_detected_comms = 0; // after stripping
};

/**
 * Drops every vertex with several ground-truth memberships from both the truth
 * and the detected partition, then compares what is left with disjoint NMI.
 * Vertices the truth does not cover are left out as well. Throws
 * DegenerateStudy when nothing remains.
 */
StripStudyResult strip_overlap_study(const Graph& g, const Cover& truth, const Partition& p);

struct Subnetwork {
    VertexId seed_vertex = 0; // id in the parent graph
    std::vector<VertexId> vertices; // parent ids, ascending; position = id in `graph`
    Graph graph;
    Cover truth; // ground truth restricted to `vertices`
};

/**
 * Picks a vertex with two or more ground-truth communities uniformly at random
 * and returns the subgraph induced by every vertex sharing a community with
 * it. The draw is mt19937_64(seed)() modulo the candidate count, over
 * candidates in ascending id order. Throws NoOverlapVertex.
 */
Subnetwork sample_subnetwork(const Graph& g, const Cover& truth, std::uint64_t seed);

struct ProfileRow {
    std::size_t memberships = 0;
    std::size_t vertices = 0;
    double mean_external = 0.0;
    double stddev_external = 0.0; // population standard deviation
};

/// External degree (w.r.t. p) aggregated by ground-truth membership count, ascending.
/// Uncovered vertices are skipped.
std::vector<ProfileRow> external_degree_membership_profile(const Graph& g, const Cover& truth, const Partition& p);

void write_profile(std::ostream& out, const std::vector<ProfileRow>& rows);
void write_strip_result(std::ostream& out, const StripStudyResult& r);

} // namespace pvoc
