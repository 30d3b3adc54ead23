#include <pvoc/error.hpp>
#include <pvoc/io.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

using namespace pvoc;

namespace {

Graph edges(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in, [](const std::string&) {});
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::InvalidArgument;
}

std::string written(const Cover& c, const VertexLabels& labels) {
    std::ostringstream out;
    write_cover(c, labels, out);
    return out.str();
}

} // namespace

TEST(EdgeList, Tabs) {
    Graph g = edges("1\t2\n2\t3\n");
    EXPECT_EQ(g.num_vertices(), 3u);
    EXPECT_EQ(g.num_edges(), 2u);
}

TEST(EdgeList, CommentSkipped) {
    Graph g = edges("# comment\n5 7\n");
    EXPECT_EQ(g.num_vertices(), 2u);
    EXPECT_EQ(g.num_edges(), 1u);
}

TEST(EdgeList, MalformedLineNumber) {
    std::istringstream in("1 2\nxyz\n");
    try {
        read_edge_list(in, [](const std::string&) {});
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    }
}

TEST(EdgeList, EmptyFile) {
    EXPECT_EQ(kind_of([] { edges(""); }), ErrorKind::EmptyGraph);
    EXPECT_EQ(kind_of([] { edges("# nothing\n\n"); }), ErrorKind::EmptyGraph);
}

TEST(EdgeList, WeightsWarnOnce) {
    std::istringstream in("1 2 0.5\n2 3 0.7\n");
    int warnings = 0;
    Graph g = read_edge_list(in, [&](const std::string&) { ++warnings; });
    EXPECT_EQ(g.num_edges(), 2u);
    EXPECT_EQ(warnings, 1);
}

TEST(EdgeList, ArbitraryTokens) {
    Graph g = edges("alpha beta\nbeta g\xc3\xa9o\n");
    EXPECT_EQ(g.num_vertices(), 3u);
    EXPECT_TRUE(g.labels().find("g\xc3\xa9o").has_value());
}

TEST(LfrCommunities, OverlappingNode) {
    Graph g = edges("1 2\n2 3\n");
    std::istringstream in("1\t1\n2\t1 2\n3\t2\n");
    Cover c = read_lfr_communities(in, g.labels());
    EXPECT_EQ(c.num_communities(), 2u);
    EXPECT_EQ(c.memberships(*g.labels().find("2")).size(), 2u);
}

TEST(LfrCommunities, MissingNode) {
    Graph g = edges("1 2\n2 3\n");
    EXPECT_EQ(kind_of([&] {
                  std::istringstream in("1\t1\n2\t1\n");
                  read_lfr_communities(in, g.labels());
              }),
              ErrorKind::IncompleteCover);
}

TEST(LfrCommunities, UnknownNode) {
    Graph g = edges("1 2\n2 3\n");
    EXPECT_EQ(kind_of([&] {
                  std::istringstream in("1\t1\n2\t1\n3\t1\n4\t1\n");
                  read_lfr_communities(in, g.labels());
              }),
              ErrorKind::UnknownVertex);
}

TEST(LfrCommunities, SingleCommunity) {
    Graph g = edges("1 2\n2 3\n");
    std::istringstream in("1\t4\n2\t4\n3\t4\n");
    Cover c = read_lfr_communities(in, g.labels());
    EXPECT_EQ(c.num_communities(), 1u);
    EXPECT_TRUE(c.is_disjoint());
}

TEST(SnapCommunities, TwoCommunities) {
    Graph g = edges("1 2\n3 4\n2 3\n");
    std::istringstream in("1\t2\t3\n3\t4\n");
    auto s = read_snap_communities(in, g.labels());
    EXPECT_EQ(s.cover.num_communities(), 2u);
    EXPECT_EQ(s.cover.memberships(*g.labels().find("3")).size(), 2u);
    EXPECT_TRUE(s.uncovered.empty());
}

TEST(SnapCommunities, EmptyFile) {
    Graph g = edges("1 2\n2 3\n");
    std::istringstream in("");
    auto s = read_snap_communities(in, g.labels());
    EXPECT_EQ(s.cover.num_communities(), 0u);
    EXPECT_EQ(s.uncovered.size(), 3u);
}

TEST(SnapCommunities, SingletonLine) {
    Graph g = edges("1 2\n2 3\n");
    std::istringstream in("2\n1\t3\n");
    auto s = read_snap_communities(in, g.labels());
    EXPECT_EQ(s.cover.num_communities(), 2u);
    EXPECT_EQ(s.cover.canonical()[1].size(), 1u);
}

TEST(SnapCommunities, UnknownNode) {
    Graph g = edges("1 2\n2 3\n");
    EXPECT_EQ(kind_of([&] {
                  std::istringstream in("1\t9\n");
                  read_snap_communities(in, g.labels());
              }),
              ErrorKind::UnknownVertex);
}

TEST(WriteCover, CanonicalOrder) {
    Graph g = edges("3 2\n2 1\n");
    auto id = [&](const char* s) { return *g.labels().find(s); };
    Cover c = Cover::from_communities(3, {{id("3"), id("2")}, {id("2"), id("1")}});
    EXPECT_EQ(written(c, g.labels()), "1\t2\n2\t3\n");
}

TEST(WriteCover, Singleton) {
    Graph g = edges("7 8\n");
    Cover c = Cover::from_communities(2, {{0}}, Cover::Coverage::AllowPartial);
    EXPECT_EQ(written(c, g.labels()), "7\n");
}

TEST(WriteCover, NumericLabelsSortNumerically) {
    Graph g = edges("10 9\n9 100\n");
    Cover c = Cover::from_communities(3, {{0, 1, 2}});
    EXPECT_EQ(written(c, g.labels()), "9\t10\t100\n");
}

TEST(WriteCover, FailedStream) {
    Graph g = edges("1 2\n");
    Cover c = Cover::from_communities(2, {{0, 1}});
    std::ostringstream out;
    out.setstate(std::ios::badbit);
    EXPECT_EQ(kind_of([&] { write_cover(c, g.labels(), out); }), ErrorKind::WriteError);
}

TEST(WriteCover, RoundTripRandom) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 40; ++t) {
        Graph g = oracle::random_graph(40, 0.1, rng);
        Cover c = oracle::random_cover(g.num_vertices(), 1 + t % 6, rng);
        std::istringstream in(written(c, g.labels()));
        auto back = read_snap_communities(in, g.labels());
        EXPECT_TRUE(back.uncovered.empty());
        EXPECT_TRUE(same_communities(back.cover, c));
    }
}

TEST(ParseFile, Dispatch) {
    EXPECT_EQ(parse_file_format("edges"), FileFormat::EdgeList);
    EXPECT_EQ(parse_file_format("lfr"), FileFormat::LfrCommunity);
    EXPECT_EQ(parse_file_format("snap"), FileFormat::SnapCommunity);
    EXPECT_EQ(parse_file_format("cover"), FileFormat::CoverOut);
    EXPECT_EQ(kind_of([] { parse_file_format("gml"); }), ErrorKind::InvalidArgument);

    std::istringstream ein("1 2\n");
    Graph g = std::get<Graph>(parse_file(FileFormat::EdgeList, ein));
    std::istringstream cin("1\t2\n");
    Cover c = std::get<Cover>(parse_file(FileFormat::CoverOut, cin, &g.labels()));
    EXPECT_EQ(c.num_communities(), 1u);
    std::istringstream missing("1\t2\n");
    EXPECT_EQ(kind_of([&] { parse_file(FileFormat::SnapCommunity, missing); }), ErrorKind::InvalidArgument);
}

TEST(Parsers, NeverCrashOnRandomBytes) {
    std::mt19937_64 rng(99);
    Graph g = edges("1 2\n2 3\n3 4\n");
    const std::string alphabet = "0123 \t\n#\r1234abc\x01\xff";
    for (int t = 0; t < 2000; ++t) {
        std::string text;
        const std::size_t len = rng() % 64;
        for (std::size_t i = 0; i < len; ++i)
            text.push_back(t % 2 ? static_cast<char>(rng() & 0xff) : alphabet[rng() % alphabet.size()]);
        for (FileFormat f : {FileFormat::EdgeList, FileFormat::LfrCommunity, FileFormat::SnapCommunity,
                             FileFormat::CoverOut}) {
            std::istringstream in(text);
            try {
                parse_file(f, in, &g.labels(), [](const std::string&) {});
            } catch (const ParseError& e) {
                EXPECT_GE(e.line(), 1u);
            } catch (const Error&) {
            }
        }
    }
}
