#include <pvoc/replication.hpp>

#include <pvoc/error.hpp>
#include <pvoc/permanence.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace pvoc {

namespace {

constexpr std::size_t block_size = 4096;

void check_domain(const Graph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices())
        throw Error(ErrorKind::DomainMismatch, "partition and graph have different vertex counts");
}

/// Runs trials for vertices[begin, end) into out[i], spread over up to `threads` workers.
void run_block(const Graph& g, const Partition& p, double theta, std::span<const VertexId> vertices,
               std::vector<std::vector<ReplicationDecision>>& out, std::size_t threads) {
    out.assign(vertices.size(), {});
    const std::size_t workers = std::max<std::size_t>(1, std::min(threads, vertices.size()));
    if (workers == 1) {
        for (std::size_t i = 0; i < vertices.size(); ++i)
            out[i] = replication_trials(g, p, vertices[i], theta);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (vertices.size() + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    const std::size_t lo = w * chunk;
                    const std::size_t hi = std::min(vertices.size(), lo + chunk);
                    for (std::size_t i = lo; i < hi; ++i)
                        out[i] = replication_trials(g, p, vertices[i], theta);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

} // namespace

void validate(const ReplicationConfig& cfg) {
    if (!(cfg.theta >= 0.0))
        throw Error(ErrorKind::InvalidArgument, "theta must be non-negative");
}

std::vector<VertexId> boundary_vertices(const Graph& g, const Partition& p) {
    check_domain(g, p);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const CommunityId own = p.community_of(v);
        auto adj = g.neighbors(v);
        if (std::any_of(adj.begin(), adj.end(), [&](VertexId u) { return p.community_of(u) != own; }))
            out.push_back(v);
    }
    return out;
}

std::vector<CommunityId> external_communities(const Graph& g, const Partition& p, VertexId v) {
    const CommunityId own = p.community_of(v);
    std::vector<CommunityId> out;
    for (VertexId u : g.neighbors(v))
        if (p.community_of(u) != own)
            out.push_back(p.community_of(u));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double trial_move_sum(const Graph& g, const Partition& p, VertexId v, CommunityId target) {
    check_domain(g, p);
    auto adj = g.neighbors(v);
    const bool adjacent = target != p.community_of(v) &&
                          std::any_of(adj.begin(), adj.end(), [&](VertexId u) { return p.community_of(u) == target; });
    if (!adjacent)
        throw Error(ErrorKind::InvalidTarget, "community " + std::to_string(target) +
                                                  " is not an external neighbor community of '" + g.label(v) + "'");
    return neighborhood_permanence_sum(g, AssignmentView(p).with_move(v, target), v);
}

std::vector<ReplicationDecision> replication_trials(const Graph& g, const Partition& p, VertexId v, double theta) {
    std::vector<ReplicationDecision> out;
    auto targets = external_communities(g, p, v);
    if (targets.empty())
        return out;
    const AssignmentView base(p);
    const double before = neighborhood_permanence_sum(g, base, v);
    for (CommunityId target : targets) {
        ReplicationDecision d;
        d.vertex = v;
        d.source = p.community_of(v);
        d.target = target;
        d.sum_before = before;
        d.sum_after = neighborhood_permanence_sum(g, base.with_move(v, target), v);
        d.accepted = std::fabs(d.sum_after - d.sum_before) <= theta;
        out.push_back(d);
    }
    return out;
}

Cover vertex_replication(const Graph& g, const Partition& p, const ReplicationConfig& cfg, const DecisionSink& sink) {
    validate(cfg);
    check_domain(g, p);
    auto boundary = boundary_vertices(g, p);
    if (cfg.order == ProcessingOrder::Reverse)
        std::reverse(boundary.begin(), boundary.end());

    std::vector<std::vector<VertexId>> communities = p.communities();
    std::vector<std::vector<ReplicationDecision>> block;
    for (std::size_t lo = 0; lo < boundary.size(); lo += block_size) {
        const std::size_t hi = std::min(boundary.size(), lo + block_size);
        run_block(g, p, cfg.theta, std::span<const VertexId>(boundary).subspan(lo, hi - lo), block, cfg.threads);
        for (const auto& trials : block) {
            for (const auto& d : trials) {
                if (d.accepted)
                    communities[d.target].push_back(d.vertex);
                if (sink)
                    sink(d);
            }
        }
    }
    return Cover::from_communities(g.num_vertices(), std::move(communities));
}

ReplicationResult vertex_replication(const Graph& g, const Partition& p, const ReplicationConfig& cfg) {
    ReplicationResult result;
    result.cover = vertex_replication(g, p, cfg, [&](const ReplicationDecision& d) { result.decisions.push_back(d); });
    return result;
}

Partition run_detector(const Graph& g, const Detector& detector) {
    if (const auto* cfg = std::get_if<LouvainConfig>(&detector))
        return louvain(g, *cfg);
    const auto& p = std::get<Partition>(detector);
    check_domain(g, p);
    return p;
}

Cover detect(const Graph& g, const Detector& detector, const ReplicationConfig& cfg) {
    validate(cfg);
    return vertex_replication(g, run_detector(g, detector), cfg, nullptr);
}

void write_decision(std::ostream& out, const ReplicationDecision& d, const VertexLabels& labels) {
    char before[40];
    char after[40];
    std::snprintf(before, sizeof before, "%.12g", d.sum_before);
    std::snprintf(after, sizeof after, "%.12g", d.sum_after);
    out << labels.label(d.vertex) << '\t' << d.source << '\t' << d.target << '\t' << before << '\t' << after << '\t'
        << (d.accepted ? 1 : 0) << '\n';
}

} // namespace pvoc
