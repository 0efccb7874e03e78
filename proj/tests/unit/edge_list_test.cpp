#include <gtest/gtest.h>

#include "corpus.hpp"
#include "relpoly/edge_list.hpp"
#include "relpoly/errors.hpp"

namespace relpoly {
namespace {

TEST(EdgeList, ParsesCommentsDuplicatesAndBlankLines) {
    const Graph g = load_edge_list_string("# triangle plus tail\n0 1\n1 2\n\n2 0\n1 0\n2\t3\n");
    EXPECT_EQ(g.node_count(), 4u);
    EXPECT_EQ(g.link_count(), 4u);
    EXPECT_TRUE(g.has_link(0, 2));
}

TEST(EdgeList, NodesDirectiveAddsIsolatedNodes) {
    const Graph g = load_edge_list_string("# nodes 6\n0 1\n");
    EXPECT_EQ(g.node_count(), 6u);
    EXPECT_EQ(save_edge_list_string(g), "# nodes 6\n0 1\n");
}

TEST(EdgeList, ReportsLineNumbers) {
    try {
        load_edge_list_string("0 1\n# fine\n2 2\n");
        FAIL() << "self-loop accepted";
    } catch (const FormatError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(load_edge_list_string("0 x\n"), FormatError);
    EXPECT_THROW(load_edge_list_string("0\n"), FormatError);
    EXPECT_THROW(load_edge_list_string("0 1 2\n"), FormatError);
    EXPECT_THROW(load_edge_list_string("-1 2\n"), FormatError);
}

TEST(EdgeList, SaveNormalizes) {
    const Graph g = load_edge_list_string("3 1\n1 0\n0 1\n");
    EXPECT_EQ(save_edge_list_string(g), "0 1\n1 3\n");
}

TEST(EdgeList, RoundTripIsIdentity) {
    for (const auto& [name, g] : testing::random_corpus(30, 1, 30, 11)) {
        const auto text = save_edge_list_string(g);
        EXPECT_EQ(load_edge_list_string(text), g) << name;
        EXPECT_EQ(save_edge_list_string(load_edge_list_string(text)), text) << name;
    }
}

TEST(EdgeList, MissingFileIsAnError) {
    EXPECT_THROW(load_edge_list_file("/nonexistent/graph.edges"), Error);
}

}  // namespace
}  // namespace relpoly
