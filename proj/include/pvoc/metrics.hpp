#pragma once

#include <pvoc/community.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pvoc {

/// Disjoint NMI, 2 I(X;Y) / (H(X) + H(Y)); 1 when both sides are a single community.
double nmi_disjoint(const Partition& a, const Partition& b);

/**
 * Overlapping NMI (McDaid et al., max normalisation).
 *
 * Each community is a binary membership variable. For X_i the conditional
 * entropy given the other cover is the smallest H(X_i | Y_j) over the Y_j
 * that pass the lack-of-information test h(a) + h(d) >= h(b) + h(c), or H(X_i)
 * when none does. With H(X|Y) = sum_i H(X_i|Y):
 *
 *   I = (H(X) - H(X|Y) + H(Y) - H(Y|X)) / 2,   onmi = I / max(H(X), H(Y))
 */
double onmi(const Cover& a, const Cover& b);

/// Omega index: agreement on the number of shared communities per vertex pair, chance corrected.
double omega_index(const Cover& a, const Cover& b);

/// Mean of the best-match F1 from truth to detected and from detected to truth, halved.
double avg_f1(const Cover& detected, const Cover& truth);

/// |a ∩ b| / |a ∪ b|; 1 when both are empty.
double jaccard(std::vector<VertexId> a, std::vector<VertexId> b);

using MethodScores = std::array<double, 3>; // onmi, omega, f1

/// Column-max normalised scores summed per method (best possible 3). All-zero columns add 0.
std::map<std::string, double> composite_scores(const std::map<std::string, MethodScores>& per_method);

struct SizeExtremes {
    std::size_t max_size = 0;
    std::size_t min_size = 0;
    CommunityId largest = 0;
    CommunityId smallest = 0;
    std::vector<VertexId> largest_members;
    std::vector<VertexId> smallest_members;
};

/// Ties go to the community with the lowest smallest member. Throws EmptyCover.
SizeExtremes community_size_extremes(const Cover& c);

struct MetricSelection {
    bool onmi = true;
    bool omega = true;
    bool f1 = true;
    bool nmi = false;
};

/// Parses "onmi,omega,f1[,nmi]" style lists. Throws InvalidArgument.
MetricSelection parse_metric_selection(const std::string& list);

struct MetricReport {
    std::optional<double> onmi;
    std::optional<double> omega;
    std::optional<double> avg_f1;
    std::optional<double> nmi;
    std::optional<std::string> nmi_error;
    std::size_t vertices = 0;              // vertices scored
    std::size_t excluded_vertices = 0;     // covered on one side only, left out
    std::map<std::string, double> details; // optional extras (extremes, jaccard)
};

/**
 * Scores `detected` against `truth`. When the two covers leave different
 * vertices uncovered, both are restricted to the vertices covered by both.
 * NMI needs disjoint covers on both sides; otherwise nmi_error is set.
 */
MetricReport evaluate(const Cover& detected, const Cover& truth, const MetricSelection& which = {});

/// "key=value" lines for each present score.
std::string to_key_value(const MetricReport& r);
/// Tab-separated header and row: onmi omega f1 nmi ("NA" for absent scores).
std::string table_header();
std::string table_row(const MetricReport& r);

/// "%.12g" formatting used by every text output.
std::string format_real(double x);

} // namespace pvoc
