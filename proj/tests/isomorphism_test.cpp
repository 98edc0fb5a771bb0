#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "foldhom/isomorphism.hpp"
#include "test_util.hpp"

using namespace foldhom;

namespace {

Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
    Graph out = Graph::numbered(g.size());
    for (const auto& [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace

TEST(Isomorphism, SpecExamples) {
    EXPECT_TRUE(is_isomorphic(complete_graph(3), cycle_graph(3)));
    EXPECT_FALSE(is_isomorphic(complete_graph(3), path_with_loops(PathSpec(2, {}))));
    EXPECT_EQ(canonical_key(complete_graph(3)), canonical_key(cycle_graph(3)));
    EXPECT_NE(canonical_key(complete_graph(3)), canonical_key(complete_graph(2)));
    EXPECT_EQ(canonical_key(testutil::grotzsch()), canonical_key(testutil::grotzsch()));
    EXPECT_THROW(is_isomorphic(Graph::numbered(17), Graph::numbered(17)), BudgetExceeded);
}

TEST(Isomorphism, RandomRelabellings) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 7;
        auto g = testutil::random_graph(n, 0.45, rng);
        if (trial % 5 == 0) g.add_loop(0);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0u);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = permuted(g, perm);
        const auto w = find_isomorphism(g, h);
        ASSERT_TRUE(w);
        EXPECT_TRUE(is_isomorphism(g, h, *w));
        EXPECT_EQ(canonical_key(g), canonical_key(h));
    }
}

TEST(Isomorphism, EquivalenceOnPool) {
    std::mt19937_64 rng(22);
    std::vector<Graph> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(testutil::random_graph(4 + i % 2, 0.5, rng));
    for (std::size_t i = 0; i < pool.size(); ++i) {
        EXPECT_TRUE(is_isomorphic(pool[i], pool[i]));
        for (std::size_t j = 0; j < pool.size(); ++j) {
            const bool ij = is_isomorphic(pool[i], pool[j]);
            EXPECT_EQ(ij, is_isomorphic(pool[j], pool[i]));
            // the canonical form decides isomorphism exactly
            EXPECT_EQ(ij, canonical_key(pool[i]) == canonical_key(pool[j]));
        }
    }
    for (std::size_t i = 0; i + 2 < pool.size(); ++i) {
        const auto &a = pool[i], &b = pool[i + 1], &c = pool[i + 2];
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) {
            EXPECT_TRUE(is_isomorphic(a, c));
        }
    }
}

TEST(Isomorphism, NonIsomorphicSameDegrees) {
    // C6 versus two triangles: same degree sequence
    Graph two = Graph::numbered(6);
    two.add_edge(0, 1);
    two.add_edge(1, 2);
    two.add_edge(0, 2);
    two.add_edge(3, 4);
    two.add_edge(4, 5);
    two.add_edge(3, 5);
    EXPECT_FALSE(is_isomorphic(two, cycle_graph(6)));
    EXPECT_NE(canonical_key(two), canonical_key(cycle_graph(6)));
}

TEST(SubgraphEmbedding, GrotzschInsideProducts) {
    const auto g = testutil::grotzsch();
    auto host = g;
    auto emb = find_subgraph_embedding(g, host);
    ASSERT_TRUE(emb);
    for (const auto& [u, v] : g.edges()) EXPECT_TRUE(host.adjacent((*emb)(u), (*emb)(v)));
    EXPECT_FALSE(find_subgraph_embedding(complete_graph(3), g));
    EXPECT_TRUE(find_subgraph_embedding(cycle_graph(5), g));
}
