#include <pvoc/io.hpp>

#include <pvoc/error.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <unordered_map>

namespace pvoc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\r' || ch == '\v' || ch == '\f'; };
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i]))
            ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i]))
            ++i;
        if (i > start)
            tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

/// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <typename Fn>
void for_each_record(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#')
            continue;
        fn(line_no, tokens);
    }
}

VertexId lookup_vertex(const VertexLabels& labels, std::string_view token, std::size_t line_no) {
    auto id = labels.find(token);
    if (!id)
        throw Error(ErrorKind::UnknownVertex,
                    "line " + std::to_string(line_no) + ": vertex '" + std::string(token) + "' is not in the graph");
    return *id;
}

} // namespace

void warn_to_stderr(const std::string& message) {
    std::cerr << "warning: " << message << '\n';
}

std::string_view to_string(FileFormat f) noexcept {
    switch (f) {
    case FileFormat::EdgeList: return "edges";
    case FileFormat::LfrCommunity: return "lfr";
    case FileFormat::SnapCommunity: return "snap";
    case FileFormat::CoverOut: return "cover";
    }
    return "unknown";
}

FileFormat parse_file_format(std::string_view name) {
    for (auto f : {FileFormat::EdgeList, FileFormat::LfrCommunity, FileFormat::SnapCommunity, FileFormat::CoverOut})
        if (to_string(f) == name)
            return f;
    throw Error(ErrorKind::InvalidArgument, "unknown file format '" + std::string(name) + "'");
}

Graph read_edge_list(std::istream& in, const WarningSink& warn) {
    std::vector<std::pair<std::string, std::string>> edges;
    bool warned = false;
    for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        if (tokens.size() < 2)
            throw ParseError(line_no, "expected a vertex pair, got '" + std::string(tokens.front()) + "'");
        if (tokens.size() > 2 && !warned) {
            warned = true;
            if (warn)
                warn("line " + std::to_string(line_no) + ": extra columns (edge weights) are ignored");
        }
        edges.emplace_back(tokens[0], tokens[1]);
    });
    if (in.bad())
        throw Error(ErrorKind::ParseError, "read failure");
    return build_graph(std::span<const std::pair<std::string, std::string>>(edges));
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open '" + path.string() + "'");
    return in;
}

Graph read_edge_list(const std::filesystem::path& path, const WarningSink& warn) {
    auto in = open_input(path);
    return read_edge_list(in, warn);
}

LfrMemberships read_lfr_memberships(std::istream& in, const VertexLabels& labels) {
    LfrMemberships out;
    out.per_vertex.resize(labels.size());
    std::unordered_map<std::string, CommunityId> cids;
    for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        if (tokens.size() < 2)
            throw ParseError(line_no, "expected 'node community [community ...]'");
        VertexId v = lookup_vertex(labels, tokens[0], line_no);
        auto& mine = out.per_vertex[v];
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto [it, inserted] = cids.try_emplace(std::string(tokens[i]), static_cast<CommunityId>(cids.size()));
            if (std::find(mine.begin(), mine.end(), it->second) == mine.end())
                mine.push_back(it->second);
        }
    });
    out.num_communities = cids.size();
    return out;
}

Cover read_lfr_communities(std::istream& in, const VertexLabels& labels) {
    auto raw = read_lfr_memberships(in, labels);
    std::vector<std::vector<VertexId>> communities(raw.num_communities);
    for (VertexId v = 0; v < raw.per_vertex.size(); ++v) {
        if (raw.per_vertex[v].empty())
            throw Error(ErrorKind::IncompleteCover, "vertex '" + labels.label(v) + "' has no community line");
        for (CommunityId c : raw.per_vertex[v])
            communities[c].push_back(v);
    }
    return Cover::from_communities(labels.size(), std::move(communities));
}

SnapCommunities read_snap_communities(std::istream& in, const VertexLabels& labels) {
    std::vector<std::vector<VertexId>> communities;
    for_each_record(in, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
        std::vector<VertexId> members;
        members.reserve(tokens.size());
        for (auto token : tokens)
            members.push_back(lookup_vertex(labels, token, line_no));
        communities.push_back(std::move(members));
    });
    SnapCommunities out;
    out.cover = Cover::from_communities(labels.size(), std::move(communities), Cover::Coverage::AllowPartial);
    out.uncovered = out.cover.uncovered();
    return out;
}

void write_cover(const Cover& c, const VertexLabels& labels, std::ostream& out) {
    std::vector<std::vector<VertexId>> rows = c.communities();
    auto by_label = [&](VertexId a, VertexId b) { return label_less(labels.label(a), labels.label(b)); };
    for (auto& row : rows)
        std::sort(row.begin(), row.end(), by_label);
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), by_label);
    });
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0)
                out << '\t';
            out << labels.label(row[i]);
        }
        out << '\n';
    }
    out.flush();
    if (!out)
        throw Error(ErrorKind::WriteError, "failed writing cover");
}

void write_cover(const Cover& c, const VertexLabels& labels, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorKind::WriteError, "cannot open '" + path.string() + "' for writing");
    write_cover(c, labels, out);
}

ParsedFile parse_file(FileFormat format, std::istream& in, const VertexLabels* labels, const WarningSink& warn) {
    auto need_labels = [&]() -> const VertexLabels& {
        if (labels == nullptr)
            throw Error(ErrorKind::InvalidArgument, std::string(to_string(format)) + " files need a vertex set");
        return *labels;
    };
    switch (format) {
    case FileFormat::EdgeList: return read_edge_list(in, warn);
    case FileFormat::LfrCommunity: return read_lfr_communities(in, need_labels());
    case FileFormat::SnapCommunity:
    case FileFormat::CoverOut: return read_snap_communities(in, need_labels()).cover;
    }
    throw Error(ErrorKind::InvalidArgument, "unhandled file format");
}

} // namespace pvoc
