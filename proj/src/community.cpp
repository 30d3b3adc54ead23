#include <pvoc/community.hpp>

#include <pvoc/error.hpp>

#include <algorithm>
#include <limits>
#include <string>

namespace pvoc {

namespace {
constexpr CommunityId unassigned = std::numeric_limits<CommunityId>::max();
}

Partition Partition::from_assignment(std::span<const CommunityId> labels) {
    if (labels.empty())
        throw Error(ErrorKind::EmptyCover, "partition over zero vertices");
    std::vector<CommunityId> remap;
    auto lookup = [&](CommunityId label) -> CommunityId& {
        if (label >= remap.size())
            remap.resize(static_cast<std::size_t>(label) + 1, unassigned);
        return remap[label];
    };
    Partition p;
    p.assignment_.resize(labels.size());
    for (VertexId v = 0; v < labels.size(); ++v) {
        CommunityId& slot = lookup(labels[v]);
        if (slot == unassigned) {
            slot = static_cast<CommunityId>(p.members_.size());
            p.members_.emplace_back();
        }
        p.assignment_[v] = slot;
        p.members_[slot].push_back(v);
    }
    return p;
}

Partition Partition::from_communities(std::size_t num_vertices, const std::vector<std::vector<VertexId>>& communities) {
    if (communities.empty())
        throw Error(ErrorKind::EmptyCover, "partition has no communities");
    std::vector<CommunityId> labels(num_vertices, unassigned);
    for (CommunityId c = 0; c < communities.size(); ++c) {
        if (communities[c].empty())
            throw Error(ErrorKind::InvalidArgument, "empty community " + std::to_string(c));
        for (VertexId v : communities[c]) {
            if (v >= num_vertices)
                throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v) + " out of range");
            if (labels[v] != unassigned)
                throw Error(ErrorKind::NotDisjoint, "vertex " + std::to_string(v) + " in two communities");
            labels[v] = c;
        }
    }
    for (VertexId v = 0; v < num_vertices; ++v)
        if (labels[v] == unassigned)
            throw Error(ErrorKind::IncompleteCover, "vertex " + std::to_string(v) + " has no community");
    return from_assignment(labels);
}

Cover Cover::from_communities(std::size_t num_vertices, std::vector<std::vector<VertexId>> communities,
                              Coverage coverage) {
    Cover c;
    c.memberships_.resize(num_vertices);
    c.members_ = std::move(communities);
    for (CommunityId id = 0; id < c.members_.size(); ++id) {
        auto& members = c.members_[id];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.empty())
            throw Error(ErrorKind::InvalidArgument, "empty community " + std::to_string(id));
        for (VertexId v : members) {
            if (v >= num_vertices)
                throw Error(ErrorKind::UnknownVertex, "vertex id " + std::to_string(v) + " out of range");
            c.memberships_[v].push_back(id);
        }
    }
    if (coverage == Coverage::Complete) {
        if (c.members_.empty())
            throw Error(ErrorKind::EmptyCover, "cover has no communities");
        for (VertexId v = 0; v < num_vertices; ++v)
            if (c.memberships_[v].empty())
                throw Error(ErrorKind::IncompleteCover, "vertex " + std::to_string(v) + " has no community");
    }
    return c;
}

Cover Cover::from_partition(const Partition& p) {
    return from_communities(p.num_vertices(), p.communities());
}

bool Cover::is_complete() const {
    return std::none_of(memberships_.begin(), memberships_.end(), [](const auto& m) { return m.empty(); });
}

bool Cover::is_disjoint() const {
    return std::all_of(memberships_.begin(), memberships_.end(), [](const auto& m) { return m.size() <= 1; });
}

std::vector<VertexId> Cover::uncovered() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < memberships_.size(); ++v)
        if (memberships_[v].empty())
            out.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> Cover::canonical() const {
    auto out = members_;
    std::sort(out.begin(), out.end());
    return out;
}

Partition Cover::to_partition() const {
    if (!is_disjoint())
        throw Error(ErrorKind::NotDisjoint, "cover has vertices with several memberships");
    return Partition::from_communities(num_vertices(), members_);
}

Cover Cover::restrict_to(std::span<const VertexId> vertices, Coverage coverage) const {
    constexpr VertexId absent = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> remap(num_vertices(), absent);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        remap[vertices[i]] = static_cast<VertexId>(i);
    std::vector<std::vector<VertexId>> kept;
    for (const auto& members : members_) {
        std::vector<VertexId> r;
        for (VertexId v : members)
            if (remap[v] != absent)
                r.push_back(remap[v]);
        if (!r.empty())
            kept.push_back(std::move(r));
    }
    return from_communities(vertices.size(), std::move(kept), coverage);
}

bool same_communities(const Cover& a, const Cover& b) {
    return a.num_vertices() == b.num_vertices() && a.canonical() == b.canonical();
}

GroundTruthStats ground_truth_stats(const Cover& c) {
    GroundTruthStats s;
    s.num_communities = c.num_communities();
    std::size_t total = 0;
    for (const auto& m : c.communities())
        total += m.size();
    if (s.num_communities > 0)
        s.avg_size = static_cast<double>(total) / static_cast<double>(s.num_communities);
    std::size_t covered = c.num_vertices() - c.uncovered().size();
    if (covered > 0)
        s.avg_memberships = static_cast<double>(total) / static_cast<double>(covered);
    return s;
}

} // namespace pvoc
