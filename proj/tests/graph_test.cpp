#include <gtest/gtest.h>

#include <random>

#include "foldhom/exponential.hpp"
#include "foldhom/graph.hpp"
#include "foldhom/isomorphism.hpp"
#include "test_util.hpp"

using namespace foldhom;

namespace {

bool symmetric(const Graph& g) {
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = 0; v < g.size(); ++v)
            if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    return true;
}

}  // namespace

TEST(Constructions, CompleteGraphs) {
    EXPECT_EQ(complete_graph(1).size(), 1u);
    EXPECT_EQ(complete_graph(1).edge_count(), 0u);
    EXPECT_EQ(complete_graph(3).edge_count(), 3u);
    EXPECT_EQ(complete_graph(5).edge_count(), 10u);
    EXPECT_TRUE(complete_graph(5).is_simple());
    EXPECT_EQ(complete_graph(4).label(0), "1");
}

TEST(Constructions, Cycles) {
    EXPECT_THROW(cycle_graph(2), PreconditionError);
    EXPECT_TRUE(is_isomorphic(cycle_graph(3), complete_graph(3)));
    const auto c5 = cycle_graph(5);
    EXPECT_EQ(c5.edge_count(), 5u);
    for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2u);
    EXPECT_TRUE(is_connected(c5));
}

TEST(Constructions, PathWithLoops) {
    const auto k2 = path_with_loops(PathSpec(1, {}));
    EXPECT_TRUE(is_isomorphic(k2, complete_graph(2)));
    const auto l2 = path_with_loops(PathSpec(2, {0}));
    EXPECT_EQ(l2.labels(), (std::vector<std::string>{"0", "1", "2"}));
    EXPECT_TRUE(l2.has_loop(0));
    EXPECT_FALSE(l2.has_loop(1));
    EXPECT_TRUE(l2.adjacent(0, 1));
    EXPECT_TRUE(l2.adjacent(1, 2));
    EXPECT_FALSE(l2.adjacent(0, 2));
    const auto l3 = path_with_loops(PathSpec(3, {0, 1}));
    EXPECT_EQ(l3.loop_count(), 2u);
    EXPECT_TRUE(l3.has_loop(0) && l3.has_loop(1));
    EXPECT_THROW(PathSpec(2, {3}), PreconditionError);
}

TEST(Constructions, ProductDefinition) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testutil::random_graph(4, 0.5, rng);
        auto h = testutil::random_graph(3, 0.6, rng);
        if (trial % 3 == 0) g.add_loop(1);
        if (trial % 2 == 0) h.add_loop(0);
        const auto p = categorical_product(g, h);
        ASSERT_EQ(p.size(), g.size() * h.size());
        EXPECT_TRUE(symmetric(p));
        for (Vertex a = 0; a < g.size(); ++a)
            for (Vertex b = 0; b < h.size(); ++b)
                for (Vertex a2 = 0; a2 < g.size(); ++a2)
                    for (Vertex b2 = 0; b2 < h.size(); ++b2)
                        EXPECT_EQ(p.adjacent(a * 3 + b, a2 * 3 + b2), g.adjacent(a, a2) && h.adjacent(b, b2));
    }
    const auto kk = categorical_product(complete_graph(2), complete_graph(2));
    EXPECT_EQ(kk.edge_count(), 2u);
    EXPECT_FALSE(is_connected(kk));
    EXPECT_EQ(kk.label(1), "(1,2)");
}

TEST(Constructions, QuotientCounts) {
    const auto k2 = cone_over(complete_graph(2), PathSpec(2, {0}));
    EXPECT_EQ(k2.size(), 5u);
    EXPECT_EQ(k2.label(4), "*");
    const auto k3 = cone_over(complete_graph(3), PathSpec(2, {0}));
    EXPECT_EQ(k3.size(), 7u);
    EXPECT_TRUE(k3.is_simple());
    std::vector<int> level{0, 1};
    EXPECT_THROW(quotient_top_level(complete_graph(2), level, 2), PreconditionError);
}

TEST(Constructions, QuotientEdgesMatchDefinition) {
    // (x,*) is an edge iff x had a neighbor on the top level
    const auto g = cycle_graph(5);
    const PathSpec path(3, {0, 2});
    const auto prod = categorical_product(g, path_with_loops(path));
    const auto q = cone_over(g, path);
    ASSERT_EQ(q.size(), 5u * 3 + 1);
    const Vertex apex = static_cast<Vertex>(q.size() - 1);
    for (Vertex i = 0; i < 15; ++i) {
        const Vertex orig = (i / 3) * 4 + i % 3;  // skip level 3 in the product order
        bool sees_top = false;
        for (Vertex x = 0; x < 5; ++x) sees_top = sees_top || prod.adjacent(orig, x * 4 + 3);
        EXPECT_EQ(q.adjacent(i, apex), sees_top);
    }
}

TEST(Constructions, Mycielskians) {
    const auto m = generalized_mycielskian(complete_graph(2));
    EXPECT_TRUE(is_isomorphic(m, cycle_graph(5)));
    const auto witness = find_isomorphism(m, cycle_graph(5));
    ASSERT_TRUE(witness);
    EXPECT_TRUE(is_isomorphism(m, cycle_graph(5), *witness));
    const auto g = testutil::grotzsch();
    EXPECT_EQ(g.size(), 11u);
    EXPECT_EQ(g.edge_count(), 20u);
    EXPECT_EQ(generalized_mycielskian(complete_graph(2), 3).size(), 7u);
    EXPECT_THROW(generalized_mycielskian(complete_graph(2), 1), PreconditionError);
    auto looped = complete_graph(2);
    looped.add_loop(0);
    EXPECT_THROW(generalized_mycielskian(looped), PreconditionError);
}

TEST(Constructions, MycielskianSizeAndSimplicity) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = testutil::random_graph(1 + trial % 6, 0.5, rng);
        for (int r = 2; r <= 4; ++r) {
            const auto m = generalized_mycielskian(g, r);
            EXPECT_EQ(m.size(), g.size() * r + 1);
            EXPECT_TRUE(m.is_simple());
            EXPECT_TRUE(symmetric(m));
        }
    }
}

TEST(Neighborhoods, Basics) {
    const auto c5 = cycle_graph(5);
    EXPECT_EQ(c5.neighbors(0), (std::vector<Vertex>{1, 4}));
    const auto k4 = complete_graph(4);
    const std::vector<Vertex> a{0, 1};
    auto cn = common_neighborhood(k4, a);
    EXPECT_EQ(cn.count(), 2u);
    EXPECT_TRUE(cn.test(2) && cn.test(3));
    EXPECT_EQ(common_neighborhood(k4, std::vector<Vertex>{}).count(), 4u);
    const auto l2 = path_with_loops(PathSpec(2, {0}));
    EXPECT_EQ(l2.neighbors(0), (std::vector<Vertex>{0, 1}));
}

TEST(Exponential, SmallCases) {
    const auto e = exponential_graph(complete_graph(2), complete_graph(2));
    ASSERT_EQ(e.size(), 4u);
    EXPECT_EQ(e.loop_count(), 2u);
    ImplicitExponential ie(complete_graph(2), complete_graph(2));
    for (Vertex v = 0; v < 4; ++v) {
        const auto f = ie.decode(v);
        EXPECT_EQ(e.has_loop(v), !f.is_constant());
    }
    EXPECT_EQ(*ImplicitExponential(complete_graph(2), cycle_graph(5)).vertex_count(), 32u);
    const auto e3 = exponential_graph(complete_graph(2), complete_graph(3));
    EXPECT_EQ(e3.size(), 8u);
    EXPECT_EQ(e3.loop_count(), 0u);
}

TEST(Exponential, LoopsAreHomomorphisms) {
    // all instances with at most 3^4 maps
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testutil::random_graph(2 + trial % 3, 0.6, rng);
        auto h = testutil::random_graph(3, 0.6, rng);
        if (trial % 4 == 0) h.add_loop(2);
        if (trial % 5 == 0) g.add_loop(0);
        const auto e = exponential_graph(h, g);
        ImplicitExponential ie(h, g);
        ASSERT_EQ(e.size(), *ie.vertex_count());
        EXPECT_TRUE(symmetric(e));
        for (Vertex v = 0; v < e.size(); ++v) {
            const auto f = ie.decode(v);
            // independent homomorphism test
            bool hom = true;
            for (Vertex x = 0; x < g.size(); ++x)
                for (Vertex y = 0; y < g.size(); ++y)
                    if (g.adjacent(x, y) && !h.adjacent(f(x), f(y))) hom = false;
            EXPECT_EQ(e.has_loop(v), hom);
            EXPECT_EQ(ie.encode(f), v);
        }
    }
}

TEST(Exponential, AdjacencyDefinitionAndNeighborEnumeration) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = testutil::random_graph(3, 0.6, rng);
        auto h = testutil::random_graph(3, 0.7, rng);
        if (trial % 2) h.add_loop(1);
        const auto e = exponential_graph(h, g);
        ImplicitExponential ie(h, g);
        for (Vertex a = 0; a < e.size(); ++a) {
            const auto f = ie.decode(a);
            std::size_t seen = 0;
            ie.for_each_neighbor(f, [&](const VertexMap& f2) {
                EXPECT_TRUE(e.adjacent(a, static_cast<Vertex>(ie.encode(f2))));
                ++seen;
                return true;
            });
            EXPECT_EQ(seen, e.degree(a));
            EXPECT_EQ(ie.neighbor_count(f), e.degree(a));
        }
    }
}

TEST(Exponential, BudgetErrorNamesCount) {
    ExponentialOptions opts;
    opts.vertex_budget = 1000;
    try {
        exponential_graph(complete_graph(3), complete_graph(7), opts);
        FAIL() << "expected a budget error";
    } catch (const BudgetExceeded& e) {
        EXPECT_EQ(e.required(), 2187u);
    }
}
