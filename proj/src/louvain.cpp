#include <pvoc/louvain.hpp>

#include <pvoc/error.hpp>
#include <pvoc/io.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace pvoc {

namespace {

/// Weighted graph of one Louvain level. Weights are edge counts of the input graph.
struct Level {
    std::size_t n = 0;
    std::vector<std::size_t> offsets{0};
    std::vector<VertexId> nbr;
    std::vector<std::int64_t> weight;
    std::vector<std::int64_t> self;   // internal edges folded into the node
    std::vector<std::int64_t> degree; // 2*self + sum of incident weights
    std::int64_t two_m = 0;
};

Level from_graph(const Graph& g) {
    Level lvl;
    lvl.n = g.num_vertices();
    lvl.offsets.resize(lvl.n + 1, 0);
    lvl.self.assign(lvl.n, 0);
    lvl.degree.resize(lvl.n);
    for (VertexId v = 0; v < lvl.n; ++v) {
        auto adj = g.neighbors(v);
        lvl.nbr.insert(lvl.nbr.end(), adj.begin(), adj.end());
        lvl.offsets[v + 1] = lvl.nbr.size();
        lvl.degree[v] = static_cast<std::int64_t>(adj.size());
    }
    lvl.weight.assign(lvl.nbr.size(), 1);
    lvl.two_m = static_cast<std::int64_t>(lvl.nbr.size());
    return lvl;
}

/// Renumbers labels to 0..k-1 by first appearance; returns k.
std::size_t compact(std::vector<CommunityId>& labels) {
    std::vector<CommunityId> remap(labels.size(), static_cast<CommunityId>(-1));
    CommunityId next = 0;
    for (auto& c : labels) {
        if (remap[c] == static_cast<CommunityId>(-1))
            remap[c] = next++;
        c = remap[c];
    }
    return next;
}

/// Collapses each community (labels compact in 0..k-1) into one node.
Level aggregate(const Level& lvl, const std::vector<CommunityId>& labels, std::size_t k) {
    std::vector<std::vector<VertexId>> members(k);
    for (VertexId v = 0; v < lvl.n; ++v)
        members[labels[v]].push_back(v);

    Level out;
    out.n = k;
    out.offsets.assign(k + 1, 0);
    out.self.assign(k, 0);
    out.degree.assign(k, 0);
    out.two_m = lvl.two_m;
    std::vector<std::int64_t> link(k, 0);
    std::vector<CommunityId> touched;
    for (CommunityId c = 0; c < k; ++c) {
        std::int64_t inner_twice = 0;
        for (VertexId v : members[c]) {
            out.self[c] += lvl.self[v];
            out.degree[c] += lvl.degree[v];
            for (std::size_t e = lvl.offsets[v]; e < lvl.offsets[v + 1]; ++e) {
                CommunityId d = labels[lvl.nbr[e]];
                if (d == c) {
                    inner_twice += lvl.weight[e];
                    continue;
                }
                if (link[d] == 0)
                    touched.push_back(d);
                link[d] += lvl.weight[e];
            }
        }
        out.self[c] += inner_twice / 2;
        std::sort(touched.begin(), touched.end());
        for (CommunityId d : touched) {
            out.nbr.push_back(d);
            out.weight.push_back(link[d]);
            link[d] = 0;
        }
        touched.clear();
        out.offsets[c + 1] = out.nbr.size();
    }
    return out;
}

std::vector<VertexId> visit_order(std::size_t n, std::uint64_t seed, std::mt19937_64& rng) {
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (seed != 0) {
        // Fisher-Yates on raw engine output: std::shuffle's use of the engine is implementation-defined.
        for (std::size_t i = n; i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
    }
    return order;
}

/**
 * Sweeps vertices until none moves. `q4` holds sum_c (4m in_c - tot_c^2) and
 * is updated with every move; modularity is q4 / (2m)^2.
 */
bool local_move(const Level& lvl, std::vector<CommunityId>& comm, std::span<const VertexId> order, std::int64_t& q4) {
    if (lvl.two_m == 0)
        return false;
    const std::size_t n = lvl.n;
    std::vector<std::int64_t> tot(n, 0);
    std::vector<std::size_t> size(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        tot[comm[v]] += lvl.degree[v];
        ++size[comm[v]];
    }
    std::set<CommunityId> empty;
    for (CommunityId c = 0; c < n; ++c)
        if (size[c] == 0)
            empty.insert(c);

    std::vector<std::int64_t> link(n, 0);
    std::vector<CommunityId> touched;
    bool moved_any = false;
    bool moved = true;
    while (moved) {
        moved = false;
        for (VertexId v : order) {
            const CommunityId old = comm[v];
            const std::int64_t k = lvl.degree[v];
            for (std::size_t e = lvl.offsets[v]; e < lvl.offsets[v + 1]; ++e) {
                CommunityId c = comm[lvl.nbr[e]];
                if (link[c] == 0)
                    touched.push_back(c);
                link[c] += lvl.weight[e];
            }
            tot[old] -= k;
            --size[old];
            auto gain = [&](CommunityId c) { return lvl.two_m * link[c] - tot[c] * k; };

            CommunityId best = old;
            std::int64_t best_gain = gain(old);
            auto consider = [&](CommunityId c, std::int64_t g) {
                if (c == old)
                    return;
                if (g > best_gain || (g == best_gain && best != old && c < best)) {
                    best = c;
                    best_gain = g;
                }
            };
            for (CommunityId c : touched)
                consider(c, gain(c));
            if (size[old] > 0 && !empty.empty())
                consider(*empty.begin(), 0);

            if (best != old) {
                q4 += 2 * (best_gain - gain(old));
                comm[v] = best;
                moved = true;
                moved_any = true;
                if (size[best] == 0)
                    empty.erase(best);
                if (size[old] == 0)
                    empty.insert(old);
            }
            tot[best] += k;
            ++size[best];
            for (CommunityId c : touched)
                link[c] = 0;
            touched.clear();
        }
    }
    return moved_any;
}

} // namespace

void validate(const LouvainConfig& cfg) {
    if (cfg.max_passes == 0)
        throw Error(ErrorKind::InvalidArgument, "max_passes must be at least 1");
    if (!(cfg.min_modularity_gain >= 0.0))
        throw Error(ErrorKind::InvalidArgument, "min_modularity_gain must be non-negative");
}

double modularity(const Graph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices())
        throw Error(ErrorKind::DomainMismatch, "partition and graph have different vertex counts");
    const double m = static_cast<double>(g.num_edges());
    if (m == 0.0)
        return 0.0;
    std::vector<std::size_t> inner(p.num_communities(), 0);
    std::vector<std::size_t> total(p.num_communities(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        CommunityId c = p.community_of(v);
        total[c] += g.degree(v);
        for (VertexId u : g.neighbors(v))
            if (v < u && p.community_of(u) == c)
                ++inner[c];
    }
    double q = 0.0;
    for (std::size_t c = 0; c < inner.size(); ++c) {
        const double share = static_cast<double>(total[c]) / (2.0 * m);
        q += static_cast<double>(inner[c]) / m - share * share;
    }
    return q;
}

LouvainResult louvain_detailed(const Graph& g, const LouvainConfig& cfg) {
    validate(cfg);
    const Level fine = from_graph(g);
    const std::size_t n = fine.n;
    std::mt19937_64 rng(cfg.seed);

    std::vector<CommunityId> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    std::int64_t q4 = 0;
    for (auto k : fine.degree)
        q4 -= k * k;
    const double norm = fine.two_m == 0 ? 1.0 : static_cast<double>(fine.two_m) * static_cast<double>(fine.two_m);

    LouvainResult result;
    while (result.rounds < cfg.max_passes) {
        ++result.rounds;
        auto order = visit_order(n, cfg.seed, rng);
        const bool refined = local_move(fine, labels, order, q4);
        if (result.rounds > 1 && !refined)
            break;

        std::size_t k = compact(labels);
        Level lvl = aggregate(fine, labels, k);
        double q_prev = static_cast<double>(q4) / norm;
        for (;;) {
            std::vector<CommunityId> sub(lvl.n);
            std::iota(sub.begin(), sub.end(), 0);
            auto lvl_order = visit_order(lvl.n, cfg.seed, rng);
            local_move(lvl, sub, lvl_order, q4);
            const std::size_t merged = compact(sub);
            if (merged == lvl.n)
                break;
            ++result.levels;
            for (auto& c : labels)
                c = sub[c];
            lvl = aggregate(lvl, sub, merged);
            const double q = static_cast<double>(q4) / norm;
            if (q - q_prev <= cfg.min_modularity_gain)
                break;
            q_prev = q;
        }
    }
    result.partition = Partition::from_assignment(labels);
    result.modularity = fine.two_m == 0 ? 0.0 : static_cast<double>(q4) / norm;
    return result;
}

Partition louvain(const Graph& g, const LouvainConfig& cfg) {
    return louvain_detailed(g, cfg).partition;
}

Partition import_partition(std::istream& in, const VertexLabels& labels) {
    auto raw = read_lfr_memberships(in, labels);
    std::vector<CommunityId> assignment(labels.size());
    for (VertexId v = 0; v < labels.size(); ++v) {
        const auto& mine = raw.per_vertex[v];
        if (mine.empty())
            throw Error(ErrorKind::IncompleteCover, "vertex '" + labels.label(v) + "' has no community");
        if (mine.size() > 1)
            throw Error(ErrorKind::NotDisjoint, "vertex '" + labels.label(v) + "' has " +
                                                    std::to_string(mine.size()) + " communities");
        assignment[v] = mine.front();
    }
    return Partition::from_assignment(assignment);
}

} // namespace pvoc
