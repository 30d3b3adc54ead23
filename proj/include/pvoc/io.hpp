#pragma once

#include <pvoc/community.hpp>
#include <pvoc/graph.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pvoc {

using WarningSink = std::function<void(const std::string&)>;

/// Prints "warning: <msg>" to stderr.
void warn_to_stderr(const std::string& message);

enum class FileFormat { EdgeList, LfrCommunity, SnapCommunity, CoverOut };

std::string_view to_string(FileFormat f) noexcept;
/// Accepts "edges", "lfr", "snap", "cover". Throws InvalidArgument.
FileFormat parse_file_format(std::string_view name);

/**
 * Edge list: one pair per line separated by spaces or tabs, '#' starts a
 * comment line. Extra columns (weights) are ignored with a single warning.
 */
Graph read_edge_list(std::istream& in, const WarningSink& warn = warn_to_stderr);
Graph read_edge_list(const std::filesystem::path& path, const WarningSink& warn = warn_to_stderr);

/// Raw "node cid [cid ...]" lines, one membership list per vertex (empty when absent).
/// Community ids are numbered by first appearance.
struct LfrMemberships {
    std::vector<std::vector<CommunityId>> per_vertex;
    std::size_t num_communities = 0;
};
LfrMemberships read_lfr_memberships(std::istream& in, const VertexLabels& labels);

/// LFR community.dat; every vertex of `labels` must appear (IncompleteCover otherwise).
Cover read_lfr_communities(std::istream& in, const VertexLabels& labels);

struct SnapCommunities {
    Cover cover; // may be partial
    std::vector<VertexId> uncovered;
};

/// SNAP cmty file: one community per line. Vertices in no community are listed, not rejected.
SnapCommunities read_snap_communities(std::istream& in, const VertexLabels& labels);

/// Canonical SNAP-style output with external labels: members ascending, communities
/// ordered by their member sequences. Throws WriteError on stream failure.
void write_cover(const Cover& c, const VertexLabels& labels, std::ostream& out);
void write_cover(const Cover& c, const VertexLabels& labels, const std::filesystem::path& path);

using ParsedFile = std::variant<Graph, Cover>;

/// Dispatch over every FileFormat. Community formats need `labels`; the cover
/// formats return the possibly partial cover.
ParsedFile parse_file(FileFormat format, std::istream& in, const VertexLabels* labels = nullptr,
                      const WarningSink& warn = warn_to_stderr);

/// Opens `path` for reading or throws InvalidArgument.
std::ifstream open_input(const std::filesystem::path& path);

} // namespace pvoc
