#include <gtest/gtest.h>

#include <random>

#include "foldhom/coloring.hpp"
#include "foldhom/exponential.hpp"
#include "test_util.hpp"

using namespace foldhom;

namespace {

// oracle: smallest k admitting a proper coloring, by trying all k^n maps
std::size_t brute_chi(const Graph& g) {
    const std::size_t n = g.size();
    if (n == 0) return 0;
    for (std::size_t k = 1;; ++k) {
        std::vector<Vertex> c(n, 0);
        for (;;) {
            bool ok = true;
            for (const auto& [u, v] : g.edges()) ok = ok && c[u] != c[v];
            if (ok) return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

std::size_t brute_omega(const Graph& g) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << g.size()); ++mask) {
        bool clique = true;
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = u + 1; v < g.size(); ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) clique = false;
        if (clique) best = std::max<std::size_t>(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST(Chromatic, Examples) {
    EXPECT_EQ(chromatic_number(cycle_graph(5)).value(), 3u);
    const auto g = testutil::grotzsch();
    const auto r = chromatic_number(g);
    EXPECT_EQ(r.value(), 4u);
    EXPECT_TRUE(is_proper_coloring(g, r.witness));
    EXPECT_EQ(chromatic_number(exponential_graph(complete_graph(2), complete_graph(3))).value(), 2u);
    EXPECT_EQ(chromatic_number(Graph::numbered(0)).value(), 0u);
    EXPECT_EQ(chromatic_number(Graph::numbered(3)).value(), 1u);
    EXPECT_THROW(chromatic_number(path_with_loops(PathSpec(1, {0}))), LoopedGraphError);
}

TEST(Chromatic, MatchesBruteForce) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = testutil::random_graph(1 + trial % 8, 0.2 + 0.1 * (trial % 7), rng);
        const auto r = chromatic_number(g);
        ASSERT_TRUE(r.exact);
        EXPECT_EQ(r.value(), brute_chi(g));
        EXPECT_TRUE(is_proper_coloring(g, r.witness));
        EXPECT_EQ(r.witness.k, r.value());
        EXPECT_LE(r.clique.size(), r.value());
    }
}

TEST(Clique, Examples) {
    EXPECT_EQ(max_clique(complete_graph(5)).size(), 5u);
    EXPECT_EQ(max_clique(cycle_graph(5)).size(), 2u);
    EXPECT_EQ(max_clique(testutil::grotzsch()).size(), 2u);
}

TEST(Clique, MatchesBruteForce) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 150; ++trial) {
        const auto g = testutil::random_graph(1 + trial % 10, 0.5, rng);
        const auto c = max_clique(g);
        EXPECT_TRUE(is_clique(g, c));
        EXPECT_EQ(c.size(), brute_omega(g));
    }
}

TEST(Homomorphisms, Examples) {
    const auto c5k3 = hom_exists(cycle_graph(5), complete_graph(3));
    ASSERT_TRUE(c5k3);
    EXPECT_TRUE(is_homomorphism(cycle_graph(5), complete_graph(3), *c5k3));
    EXPECT_FALSE(hom_exists(complete_graph(3), complete_graph(2)));
    EXPECT_FALSE(hom_exists(testutil::grotzsch(), complete_graph(3)));
    EXPECT_TRUE(hom_exists(testutil::grotzsch(), complete_graph(4)));
    // targets with loops absorb everything
    EXPECT_TRUE(hom_exists(complete_graph(5), path_with_loops(PathSpec(1, {0}))));
}

TEST(Homomorphisms, AgreesWithChromaticNumber) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = testutil::random_graph(1 + trial % 8, 0.5, rng);
        const auto chi = chromatic_number(g).value();
        for (std::size_t k = 1; k <= 5; ++k) {
            const auto h = hom_exists(g, complete_graph(k));
            EXPECT_EQ(h.has_value(), chi <= k);
            if (h) {
                EXPECT_TRUE(is_homomorphism(g, complete_graph(k), *h));
            }
        }
    }
}

TEST(Bipartite, TwoColoring) {
    EXPECT_TRUE(is_bipartite(cycle_graph(6)));
    EXPECT_FALSE(is_bipartite(cycle_graph(7)));
    const auto c = two_coloring(cycle_graph(8));
    ASSERT_TRUE(c);
    EXPECT_TRUE(is_proper_coloring(cycle_graph(8), *c));
}
