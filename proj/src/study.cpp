#include <pvoc/study.hpp>

#include <pvoc/error.hpp>
#include <pvoc/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <random>

namespace pvoc {

namespace {

void check_domain(const Graph& g, const Cover& truth) {
    if (truth.num_vertices() != g.num_vertices())
        throw Error(ErrorKind::DomainMismatch, "ground truth and graph have different vertex counts");
}

} // namespace

StripStudyResult strip_overlap_study(const Graph& g, const Cover& truth, const Partition& p) {
    check_domain(g, truth);
    if (p.num_vertices() != g.num_vertices())
        throw Error(ErrorKind::DomainMismatch, "partition and graph have different vertex counts");
    StripStudyResult r;
    std::vector<VertexId> kept;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::size_t k = truth.memberships(v).size();
        if (k == 0)
            ++r.excluded_count;
        else if (k >= 2)
            ++r.removed_count;
        else
            kept.push_back(v);
    }
    if (kept.empty())
        throw Error(ErrorKind::DegenerateStudy, "every covered vertex belongs to several communities");
    r.kept_count = kept.size();

    const Partition stripped_truth = truth.restrict_to(kept, Cover::Coverage::Complete).to_partition();
    const Partition stripped_detected =
        Cover::from_partition(p).restrict_to(kept, Cover::Coverage::Complete).to_partition();
    r.n_truth_comms = stripped_truth.num_communities();
    r.n_detected_comms = stripped_detected.num_communities();
    r.nmi = nmi_disjoint(stripped_detected, stripped_truth);
    return r;
}

Subnetwork sample_subnetwork(const Graph& g, const Cover& truth, std::uint64_t seed) {
    check_domain(g, truth);
    std::vector<VertexId> candidates;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (truth.memberships(v).size() >= 2)
            candidates.push_back(v);
    if (candidates.empty())
        throw Error(ErrorKind::NoOverlapVertex, "no vertex belongs to two or more ground-truth communities");

    std::mt19937_64 rng(seed);
    Subnetwork s;
    s.seed_vertex = candidates[rng() % candidates.size()];
    for (CommunityId c : truth.memberships(s.seed_vertex)) {
        auto members = truth.members(c);
        s.vertices.insert(s.vertices.end(), members.begin(), members.end());
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()), s.vertices.end());
    s.graph = induced_subgraph(g, s.vertices);
    s.truth = truth.restrict_to(s.vertices, Cover::Coverage::Complete);
    return s;
}

std::vector<ProfileRow> external_degree_membership_profile(const Graph& g, const Cover& truth, const Partition& p) {
    check_domain(g, truth);
    if (p.num_vertices() != g.num_vertices())
        throw Error(ErrorKind::DomainMismatch, "partition and graph have different vertex counts");
    std::map<std::size_t, std::vector<double>> groups;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        const std::size_t k = truth.memberships(v).size();
        if (k == 0)
            continue;
        std::size_t external = 0;
        for (VertexId u : g.neighbors(v))
            if (p.community_of(u) != p.community_of(v))
                ++external;
        groups[k].push_back(static_cast<double>(external));
    }
    std::vector<ProfileRow> rows;
    for (const auto& [k, values] : groups) {
        ProfileRow row;
        row.memberships = k;
        row.vertices = values.size();
        double sum = 0.0;
        for (double x : values)
            sum += x;
        row.mean_external = sum / static_cast<double>(values.size());
        double sq = 0.0;
        for (double x : values)
            sq += (x - row.mean_external) * (x - row.mean_external);
        row.stddev_external = std::sqrt(sq / static_cast<double>(values.size()));
        rows.push_back(row);
    }
    return rows;
}

void write_profile(std::ostream& out, const std::vector<ProfileRow>& rows) {
    out << "memberships\tvertices\tmean_external_degree\tstddev\n";
    for (const auto& r : rows)
        out << r.memberships << '\t' << r.vertices << '\t' << format_real(r.mean_external) << '\t'
            << format_real(r.stddev_external) << '\n';
}

void write_strip_result(std::ostream& out, const StripStudyResult& r) {
    out << "removed\texcluded\tkept\tnmi\ttruth_communities\tdetected_communities\n";
    out << r.removed_count << '\t' << r.excluded_count << '\t' << r.kept_count << '\t' << format_real(r.nmi) << '\t'
        << r.n_truth_comms << '\t' << r.n_detected_comms << '\n';
}

} // namespace pvoc
