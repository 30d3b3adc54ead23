#include <pvoc/metrics.hpp>

#include <pvoc/error.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

namespace pvoc {

namespace {

void check_same_domain(std::size_t a, std::size_t b) {
    if (a != b)
        throw Error(ErrorKind::DomainMismatch,
                    "vertex counts differ (" + std::to_string(a) + " vs " + std::to_string(b) + ")");
}

/// -p log2 p for p = w / n.
double plogp(double w, double n) {
    if (w <= 0.0)
        return 0.0;
    const double p = w / n;
    return -p * std::log2(p);
}

/// Intersection sizes of every community of `a` with the communities of `b` it touches.
std::vector<std::vector<std::pair<CommunityId, std::size_t>>> overlaps(const Cover& a, const Cover& b) {
    std::vector<std::vector<std::pair<CommunityId, std::size_t>>> out(a.num_communities());
    std::vector<std::size_t> count(b.num_communities(), 0);
    std::vector<CommunityId> touched;
    for (CommunityId i = 0; i < a.num_communities(); ++i) {
        for (VertexId v : a.members(i)) {
            for (CommunityId j : b.memberships(v)) {
                if (count[j]++ == 0)
                    touched.push_back(j);
            }
        }
        std::sort(touched.begin(), touched.end());
        for (CommunityId j : touched) {
            out[i].emplace_back(j, count[j]);
            count[j] = 0;
        }
        touched.clear();
    }
    return out;
}

double community_entropy(std::size_t size, double n) {
    return plogp(static_cast<double>(size), n) + plogp(n - static_cast<double>(size), n);
}

/// Sum over X_i of H(X_i | Y), following the admissibility rule.
double conditional_entropy(const Cover& x, const Cover& y, double n) {
    const auto inter = overlaps(x, y);
    // Non-overlapping Y_j only matter through their size.
    std::map<std::size_t, std::size_t> y_sizes;
    for (const auto& members : y.communities())
        ++y_sizes[members.size()];

    auto pair_entropy = [n](double size_x, double size_y, double both) -> std::optional<double> {
        const double d = both;
        const double c = size_x - both;           // in X_i only
        const double b = size_y - both;           // in Y_j only
        const double a = n - size_x - size_y + both; // in neither
        if (plogp(a, n) + plogp(d, n) < plogp(b, n) + plogp(c, n))
            return std::nullopt;
        const double joint = plogp(a, n) + plogp(b, n) + plogp(c, n) + plogp(d, n);
        const double h_y = plogp(b + d, n) + plogp(a + c, n);
        return std::max(0.0, joint - h_y);
    };

    double total = 0.0;
    for (CommunityId i = 0; i < x.num_communities(); ++i) {
        const double size_x = static_cast<double>(x.members(i).size());
        double best = community_entropy(x.members(i).size(), n);
        std::map<std::size_t, std::size_t> touching_by_size;
        for (const auto& [j, both] : inter[i]) {
            const std::size_t size_y = y.members(j).size();
            ++touching_by_size[size_y];
            if (auto h = pair_entropy(size_x, static_cast<double>(size_y), static_cast<double>(both)))
                best = std::min(best, *h);
        }
        for (const auto& [size_y, count] : y_sizes) {
            auto it = touching_by_size.find(size_y);
            const std::size_t touching = it == touching_by_size.end() ? 0 : it->second;
            if (count > touching)
                if (auto h = pair_entropy(size_x, static_cast<double>(size_y), 0.0))
                    best = std::min(best, *h);
        }
        total += best;
    }
    return total;
}

double cover_entropy(const Cover& c, double n) {
    double h = 0.0;
    for (const auto& members : c.communities())
        h += community_entropy(members.size(), n);
    return h;
}

/// Number of communities shared by each vertex pair that shares at least one; key = u * n + v, u < v.
std::unordered_map<std::uint64_t, std::uint32_t> co_memberships(const Cover& c) {
    std::unordered_map<std::uint64_t, std::uint32_t> out;
    const std::uint64_t n = c.num_vertices();
    for (const auto& members : c.communities())
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                ++out[members[i] * n + members[j]];
    return out;
}

} // namespace

double nmi_disjoint(const Partition& a, const Partition& b) {
    check_same_domain(a.num_vertices(), b.num_vertices());
    const double n = static_cast<double>(a.num_vertices());
    std::map<std::pair<CommunityId, CommunityId>, std::size_t> joint;
    for (VertexId v = 0; v < a.num_vertices(); ++v)
        ++joint[{a.community_of(v), b.community_of(v)}];
    double h_a = 0.0;
    double h_b = 0.0;
    double h_ab = 0.0;
    for (const auto& members : a.communities())
        h_a += plogp(static_cast<double>(members.size()), n);
    for (const auto& members : b.communities())
        h_b += plogp(static_cast<double>(members.size()), n);
    for (const auto& [key, count] : joint)
        h_ab += plogp(static_cast<double>(count), n);
    if (h_a + h_b == 0.0)
        return 1.0;
    const double mutual = h_a + h_b - h_ab;
    return std::clamp(2.0 * mutual / (h_a + h_b), 0.0, 1.0);
}

double onmi(const Cover& a, const Cover& b) {
    check_same_domain(a.num_vertices(), b.num_vertices());
    const double n = static_cast<double>(a.num_vertices());
    const double h_a = cover_entropy(a, n);
    const double h_b = cover_entropy(b, n);
    const double norm = std::max(h_a, h_b);
    if (norm == 0.0)
        return 1.0;
    const double h_a_given_b = conditional_entropy(a, b, n);
    const double h_b_given_a = conditional_entropy(b, a, n);
    const double mutual = 0.5 * (h_a - h_a_given_b + h_b - h_b_given_a);
    return std::clamp(mutual / norm, 0.0, 1.0);
}

double omega_index(const Cover& a, const Cover& b) {
    check_same_domain(a.num_vertices(), b.num_vertices());
    const std::uint64_t n = a.num_vertices();
    if (n < 2)
        throw Error(ErrorKind::DomainMismatch, "omega index needs at least two vertices");
    using wide = unsigned __int128;
    const std::uint64_t pairs = n * (n - 1) / 2;

    const auto ca = co_memberships(a);
    const auto cb = co_memberships(b);
    // t_j sizes for j >= 1; t_0 is the remainder.
    std::map<std::uint32_t, std::uint64_t> ta;
    std::map<std::uint32_t, std::uint64_t> tb;
    std::uint64_t agree = 0;
    std::uint64_t union_pairs = ca.size();
    for (const auto& [key, k] : ca) {
        ++ta[k];
        auto it = cb.find(key);
        if (it != cb.end() && it->second == k)
            ++agree;
    }
    for (const auto& [key, k] : cb) {
        ++tb[k];
        if (!ca.contains(key))
            ++union_pairs;
    }
    agree += pairs - union_pairs; // both zero
    ta[0] = pairs - ca.size();
    tb[0] = pairs - cb.size();

    wide expected = 0; // sum_j |t_j(a)| |t_j(b)|
    for (const auto& [j, count] : ta) {
        auto it = tb.find(j);
        if (it != tb.end())
            expected += static_cast<wide>(count) * it->second;
    }
    const wide total = static_cast<wide>(pairs) * pairs;
    if (expected == total)
        return 1.0;
    // omega = (A - E) / (1 - E) with A = agree / N and E = expected / N^2
    const auto numerator = static_cast<long double>(static_cast<__int128>(static_cast<wide>(agree) * pairs) -
                                                    static_cast<__int128>(expected));
    const auto denominator = static_cast<long double>(total - expected);
    return static_cast<double>(numerator / denominator);
}

double avg_f1(const Cover& detected, const Cover& truth) {
    check_same_domain(detected.num_vertices(), truth.num_vertices());
    if (detected.num_communities() == 0 || truth.num_communities() == 0)
        throw Error(ErrorKind::EmptyCover, "average F1 needs communities on both sides");
    auto best_mean = [](const Cover& from, const Cover& to) {
        const auto inter = overlaps(from, to);
        double sum = 0.0;
        for (CommunityId i = 0; i < from.num_communities(); ++i) {
            double best = 0.0;
            for (const auto& [j, both] : inter[i]) {
                const double f1 = 2.0 * static_cast<double>(both) /
                                  static_cast<double>(from.members(i).size() + to.members(j).size());
                best = std::max(best, f1);
            }
            sum += best;
        }
        return sum / static_cast<double>(from.num_communities());
    };
    return 0.5 * (best_mean(truth, detected) + best_mean(detected, truth));
}

double jaccard(std::vector<VertexId> a, std::vector<VertexId> b) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (a.empty() && b.empty())
        return 1.0;
    std::vector<VertexId> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    const std::size_t uni = a.size() + b.size() - common.size();
    return static_cast<double>(common.size()) / static_cast<double>(uni);
}

std::map<std::string, double> composite_scores(const std::map<std::string, MethodScores>& per_method) {
    if (per_method.empty())
        throw Error(ErrorKind::InvalidArgument, "composite scores need at least one method");
    MethodScores best{0.0, 0.0, 0.0};
    for (const auto& [name, scores] : per_method) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (!(scores[k] >= 0.0))
                throw Error(ErrorKind::InvalidArgument, "negative score for method '" + name + "'");
            best[k] = std::max(best[k], scores[k]);
        }
    }
    std::map<std::string, double> out;
    for (const auto& [name, scores] : per_method) {
        double sum = 0.0;
        for (std::size_t k = 0; k < 3; ++k)
            if (best[k] > 0.0)
                sum += scores[k] / best[k];
        out[name] = sum;
    }
    return out;
}

SizeExtremes community_size_extremes(const Cover& c) {
    if (c.num_communities() == 0)
        throw Error(ErrorKind::EmptyCover, "cover has no communities");
    SizeExtremes s;
    auto before = [&](CommunityId x, CommunityId y) { return c.members(x).front() < c.members(y).front(); };
    for (CommunityId id = 0; id < c.num_communities(); ++id) {
        const std::size_t size = c.members(id).size();
        if (id == 0 || size > s.max_size || (size == s.max_size && before(id, s.largest))) {
            s.max_size = size;
            s.largest = id;
        }
        if (id == 0 || size < s.min_size || (size == s.min_size && before(id, s.smallest))) {
            s.min_size = size;
            s.smallest = id;
        }
    }
    auto largest = c.members(s.largest);
    auto smallest = c.members(s.smallest);
    s.largest_members.assign(largest.begin(), largest.end());
    s.smallest_members.assign(smallest.begin(), smallest.end());
    return s;
}

MetricSelection parse_metric_selection(const std::string& list) {
    MetricSelection sel{false, false, false, false};
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "onmi")
            sel.onmi = true;
        else if (item == "omega")
            sel.omega = true;
        else if (item == "f1")
            sel.f1 = true;
        else if (item == "nmi")
            sel.nmi = true;
        else if (!item.empty())
            throw Error(ErrorKind::InvalidArgument, "unknown metric '" + item + "'");
    }
    return sel;
}

MetricReport evaluate(const Cover& detected, const Cover& truth, const MetricSelection& which) {
    check_same_domain(detected.num_vertices(), truth.num_vertices());
    MetricReport r;
    std::vector<VertexId> common;
    for (VertexId v = 0; v < detected.num_vertices(); ++v)
        if (!detected.memberships(v).empty() && !truth.memberships(v).empty())
            common.push_back(v);
    r.vertices = common.size();
    r.excluded_vertices = detected.num_vertices() - common.size();
    if (common.empty())
        throw Error(ErrorKind::EmptyCover, "no vertex is covered by both covers");

    const bool restrict = r.excluded_vertices > 0;
    const Cover det = restrict ? detected.restrict_to(common, Cover::Coverage::Complete) : detected;
    const Cover tru = restrict ? truth.restrict_to(common, Cover::Coverage::Complete) : truth;

    if (which.onmi)
        r.onmi = onmi(det, tru);
    if (which.omega && det.num_vertices() >= 2)
        r.omega = omega_index(det, tru);
    if (which.f1)
        r.avg_f1 = avg_f1(det, tru);
    if (which.nmi) {
        if (det.is_disjoint() && tru.is_disjoint())
            r.nmi = nmi_disjoint(det.to_partition(), tru.to_partition());
        else
            r.nmi_error = "NotDisjoint: NMI requires disjoint communities on both sides";
    }
    return r;
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string to_key_value(const MetricReport& r) {
    std::ostringstream out;
    auto put = [&](const char* key, const std::optional<double>& v) {
        if (v)
            out << key << '=' << format_real(*v) << '\n';
    };
    put("onmi", r.onmi);
    put("omega", r.omega);
    put("f1", r.avg_f1);
    put("nmi", r.nmi);
    out << "vertices=" << r.vertices << '\n';
    out << "excluded_vertices=" << r.excluded_vertices << '\n';
    for (const auto& [key, value] : r.details)
        out << key << '=' << format_real(value) << '\n';
    return out.str();
}

std::string table_header() {
    return "onmi\tomega\tf1\tnmi";
}

std::string table_row(const MetricReport& r) {
    auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("NA"); };
    return cell(r.onmi) + '\t' + cell(r.omega) + '\t' + cell(r.avg_f1) + '\t' + cell(r.nmi);
}

} // namespace pvoc
