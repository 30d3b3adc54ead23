#pragma once

#include <pvoc/community.hpp>
#include <pvoc/graph.hpp>

#include <cstdint>
#include <iosfwd>

namespace pvoc {

struct LouvainConfig {
    std::size_t max_passes = 100;       // cap on refine + aggregate rounds
    double min_modularity_gain = 1e-7;  // stop aggregating once a level gains no more than this
    std::uint64_t seed = 0;             // 0: ascending vertex order, else seeded shuffles
};

/// Throws InvalidArgument when max_passes is 0 or the gain tolerance is negative.
void validate(const LouvainConfig& cfg);

/// Newman-Girvan modularity, sum over communities of e_c/m - (d_c/2m)^2. 0 for edgeless graphs.
double modularity(const Graph& g, const Partition& p);

struct LouvainResult {
    Partition partition;
    double modularity = 0.0; // tracked incrementally from the move gains
    std::size_t rounds = 0;
    std::size_t levels = 0;
};

/**
 * Louvain modularity optimisation (resolution 1).
 *
 * Moves are scored with exact integer gains; among equal-gain targets the
 * lowest community id wins and a vertex only leaves its community for a
 * strictly better one. After the usual aggregate-until-stable phase the
 * projected partition is refined again at the vertex level, and the whole
 * cycle repeats until that refinement moves nothing. The returned partition
 * is therefore a local optimum under single-vertex moves on the input graph.
 */
LouvainResult louvain_detailed(const Graph& g, const LouvainConfig& cfg = {});
Partition louvain(const Graph& g, const LouvainConfig& cfg = {});

/// Partition from an LFR-style file with exactly one community per vertex.
/// Throws NotDisjoint for multi-community lines and IncompleteCover for missing vertices.
Partition import_partition(std::istream& in, const VertexLabels& labels);

} // namespace pvoc
