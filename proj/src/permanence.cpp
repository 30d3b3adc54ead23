#include <pvoc/permanence.hpp>

#include <pvoc/error.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace pvoc {

namespace {

/// Number of edges among the (sorted) vertices in `set`.
std::size_t edges_within(const Graph& g, std::span<const VertexId> set) {
    std::size_t links = 0;
    for (std::size_t i = 0; i < set.size(); ++i) {
        auto adj = g.neighbors(set[i]);
        // only count y > x, so start both ranges past x
        auto a = std::upper_bound(adj.begin(), adj.end(), set[i]);
        auto b = set.begin() + static_cast<std::ptrdiff_t>(i) + 1;
        while (a != adj.end() && b != set.end()) {
            if (*a < *b) {
                ++a;
            } else if (*b < *a) {
                ++b;
            } else {
                ++links;
                ++a;
                ++b;
            }
        }
    }
    return links;
}

double clustering_of(const Graph& g, std::span<const VertexId> internal) {
    const std::size_t k = internal.size();
    if (k < 2)
        return 0.0;
    const std::size_t pairs = k * (k - 1) / 2;
    return static_cast<double>(edges_within(g, internal)) / static_cast<double>(pairs);
}

std::vector<VertexId> internal_neighbors(const Graph& g, const AssignmentView& a, VertexId v) {
    const CommunityId own = a(v);
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(v))
        if (a(u) == own)
            out.push_back(u);
    return out;
}

} // namespace

double internal_clustering(const Graph& g, const AssignmentView& a, VertexId v) {
    return clustering_of(g, internal_neighbors(g, a, v));
}

double internal_clustering(const Graph& g, const Partition& p, VertexId v) {
    return internal_clustering(g, AssignmentView(p), v);
}

ExternalPull external_pull(const Graph& g, const AssignmentView& a, VertexId v) {
    const CommunityId own = a(v);
    std::vector<CommunityId> foreign;
    for (VertexId u : g.neighbors(v)) {
        CommunityId c = a(u);
        if (c != own)
            foreign.push_back(c);
    }
    std::sort(foreign.begin(), foreign.end());
    ExternalPull pull;
    for (std::size_t i = 0; i < foreign.size();) {
        std::size_t j = i;
        while (j < foreign.size() && foreign[j] == foreign[i])
            ++j;
        pull.per_community.emplace_back(foreign[i], j - i);
        pull.e_max = std::max(pull.e_max.value_or(0), j - i);
        i = j;
    }
    return pull;
}

ExternalPull external_pull(const Graph& g, const Partition& p, VertexId v) {
    return external_pull(g, AssignmentView(p), v);
}

PermanenceView permanence_view(const Graph& g, const AssignmentView& a, VertexId v) {
    PermanenceView view;
    view.degree = g.degree(v);
    if (view.degree == 0)
        throw Error(ErrorKind::IsolatedVertex, "permanence is undefined for isolated vertex '" + g.label(v) + "'");
    auto internal = internal_neighbors(g, a, v);
    view.internal = internal.size();
    view.c_in = clustering_of(g, internal);
    if (view.internal == view.degree) {
        view.perm = view.c_in;
        return view;
    }
    view.e_max = external_pull(g, a, v).e_max;
    const double pull = static_cast<double>(view.internal) / static_cast<double>(*view.e_max * view.degree);
    view.perm = pull - (1.0 - view.c_in);
    return view;
}

double permanence(const Graph& g, const AssignmentView& a, VertexId v) {
    return permanence_view(g, a, v).perm;
}

double permanence(const Graph& g, const Partition& p, VertexId v) {
    return permanence(g, AssignmentView(p), v);
}

double neighborhood_permanence_sum(const Graph& g, const AssignmentView& a, VertexId v) {
    auto adj = g.neighbors(v);
    std::vector<double> terms;
    terms.reserve(adj.size() + 1);
    terms.push_back(permanence(g, a, v));
    for (VertexId u : adj)
        terms.push_back(permanence(g, a, u));
    std::sort(terms.begin(), terms.end());
    return std::accumulate(terms.begin(), terms.end(), 0.0);
}

double neighborhood_permanence_sum(const Graph& g, const Partition& p, VertexId v) {
    return neighborhood_permanence_sum(g, AssignmentView(p), v);
}

} // namespace pvoc
