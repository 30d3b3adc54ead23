#pragma once

#include <pvoc/community.hpp>
#include <pvoc/graph.hpp>
#include <pvoc/louvain.hpp>

#include <functional>
#include <iosfwd>
#include <variant>
#include <vector>

namespace pvoc {

enum class ProcessingOrder { Forward, Reverse };

struct ReplicationConfig {
    double theta = 0.05;
    std::size_t threads = 1;
    ProcessingOrder order = ProcessingOrder::Forward;
};

/// Throws InvalidArgument for negative or NaN theta.
void validate(const ReplicationConfig& cfg);

/// One trial move of a boundary vertex into a neighboring community.
struct ReplicationDecision {
    VertexId vertex = 0;
    CommunityId source = 0;
    CommunityId target = 0;
    double sum_before = 0.0;
    double sum_after = 0.0;
    bool accepted = false;

    friend bool operator==(const ReplicationDecision&, const ReplicationDecision&) = default;
};

/// Vertices with at least one neighbor outside their own community, ascending.
std::vector<VertexId> boundary_vertices(const Graph& g, const Partition& p);

/// Distinct communities of v's external neighbors, ascending.
std::vector<CommunityId> external_communities(const Graph& g, const Partition& p, VertexId v);

/**
 * Neighborhood permanence sum of v after moving it (alone) into `target`,
 * evaluated on a hypothetical assignment; `p` is left untouched. Throws
 * InvalidTarget unless some neighbor of v sits in `target` and target differs
 * from v's own community.
 */
double trial_move_sum(const Graph& g, const Partition& p, VertexId v, CommunityId target);

/// Every trial for vertex v against the unmodified partition.
std::vector<ReplicationDecision> replication_trials(const Graph& g, const Partition& p, VertexId v, double theta);

struct ReplicationResult {
    Cover cover;
    std::vector<ReplicationDecision> decisions;
};

using DecisionSink = std::function<void(const ReplicationDecision&)>;

/**
 * Permanence-based vertex replication.
 *
 * Each boundary vertex is tentatively moved into each distinct neighboring
 * community. The move is accepted as a replica, on top of the original
 * membership, when the neighborhood permanence sum changes by at most theta.
 * All trials are judged against the input partition, so replicas never feed
 * back into later trials and the cover does not depend on processing order or
 * thread count. The cover keeps the partition's community ids.
 */
ReplicationResult vertex_replication(const Graph& g, const Partition& p, const ReplicationConfig& cfg = {});

/// Streaming variant: decisions go to `sink` in processing order instead of being kept.
Cover vertex_replication(const Graph& g, const Partition& p, const ReplicationConfig& cfg, const DecisionSink& sink);

/// Disjoint stage of the pipeline: run Louvain with a config, or take a given partition.
using Detector = std::variant<LouvainConfig, Partition>;

Partition run_detector(const Graph& g, const Detector& detector);
Cover detect(const Graph& g, const Detector& detector, const ReplicationConfig& cfg = {});

/// "vertex\tsource\ttarget\tsum_before\tsum_after\taccepted" with 12 significant digits.
void write_decision(std::ostream& out, const ReplicationDecision& d, const VertexLabels& labels);

} // namespace pvoc
