#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "corpus.hpp"
#include "relpoly/degree.hpp"
#include "relpoly/errors.hpp"
#include "relpoly/graph.hpp"
#include "relpoly/union_find.hpp"

namespace relpoly {
namespace {

TEST(Graph, CollapsesDuplicatesAndSortsNeighbors) {
    const std::vector<Link> links{{2, 0}, {0, 1}, {1, 0}, {0, 2}, {3, 1}};
    const Graph g(4, links);
    EXPECT_EQ(g.node_count(), 4u);
    EXPECT_EQ(g.link_count(), 3u);
    ASSERT_EQ(g.neighbors(0).size(), 2u);
    EXPECT_EQ(g.neighbors(0)[0], 1u);
    EXPECT_EQ(g.neighbors(0)[1], 2u);
    EXPECT_TRUE(g.has_link(1, 3));
    EXPECT_TRUE(g.has_link(3, 1));
    EXPECT_FALSE(g.has_link(2, 3));
    EXPECT_EQ(g.links(), (std::vector<Link>{{0, 1}, {0, 2}, {1, 3}}));
    EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{2, 2, 1, 1}));
}

TEST(Graph, RejectsSelfLoopsAndBadIds) {
    const std::vector<Link> loop{{1, 1}};
    const std::vector<Link> range{{0, 4}};
    EXPECT_THROW(Graph(3, loop), DomainError);
    EXPECT_THROW(Graph(3, range), DomainError);
}

TEST(Graph, ConnectivityConventions) {
    const Graph g = exact::family_graph({exact::Family::path, 4});
    EXPECT_FALSE(is_connected(g, std::vector<NodeId>{}));
    EXPECT_TRUE(is_connected(g, std::vector<NodeId>{2}));
    EXPECT_TRUE(is_connected(g, std::vector<NodeId>{1, 2}));
    EXPECT_FALSE(is_connected(g, std::vector<NodeId>{0, 2}));
    EXPECT_TRUE(is_connected(g));
    EXPECT_FALSE(is_connected(Graph::empty(0)));
    EXPECT_TRUE(is_connected(Graph::empty(1)));
    EXPECT_THROW(is_connected(g, std::vector<NodeId>{7}), DomainError);
}

TEST(Graph, ComponentCount) {
    const std::vector<Link> links{{0, 1}, {2, 3}};
    EXPECT_EQ(component_count(Graph(5, links)), 3u);
    EXPECT_EQ(component_count(Graph::empty(0)), 0u);
}

TEST(Graph, WithLinksLeavesOriginalUntouched) {
    const Graph g = exact::family_graph({exact::Family::path, 4});
    const std::vector<Link> extra{{0, 3}};
    const Graph c = g.with_links(extra);
    EXPECT_EQ(c, exact::family_graph({exact::Family::cycle, 4}));
    EXPECT_EQ(g.link_count(), 3u);
}

TEST(Graph, ConnectivityMatchesUnionFind) {
    for (const auto& [name, g] : testing::random_corpus(100, 1, 40, 77)) {
        UnionFind uf(g.node_count());
        for (std::size_t i = 0; i < g.node_count(); ++i) uf.activate();
        for (const auto& [u, v] : g.links()) uf.unite(u, v);
        EXPECT_EQ(is_connected(g), uf.components() == 1) << name;
        EXPECT_EQ(component_count(g), uf.components()) << name;
    }
}

TEST(DegreeDistribution, StarPgf) {
    const Graph s3 = exact::family_graph({exact::Family::star, 3});
    const DegreeDistribution d(s3);
    EXPECT_DOUBLE_EQ(d.probability(1), 2.0 / 3.0);
    EXPECT_DOUBLE_EQ(d.probability(2), 1.0 / 3.0);
    EXPECT_EQ(d.count(5), 0u);
    EXPECT_EQ(d.max_degree(), 2u);
    EXPECT_NEAR(d.pgf(0.5), 5.0 / 12.0, 1e-15);
    EXPECT_DOUBLE_EQ(d.pgf(1.0), 1.0);
    EXPECT_THROW(d.pgf(1.5), DomainError);
    EXPECT_THROW(DegreeDistribution(Graph::empty(0)), DomainError);
}

TEST(DegreeDistribution, PgfMatchesNodeAverage) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& [name, g] : testing::random_corpus(20, 5, 60, 300)) {
        const auto d = degree_distribution(g);
        for (int t = 0; t < 20; ++t) {
            const double p = unit(rng);
            double direct = 0.0;
            for (std::size_t deg : g.degrees()) direct += std::pow(1.0 - p, static_cast<double>(deg));
            direct /= static_cast<double>(g.node_count());
            EXPECT_NEAR(pgf_eval(d, 1.0 - p), direct, 1e-12) << name;
        }
    }
}

}  // namespace
}  // namespace relpoly
