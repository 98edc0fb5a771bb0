#include <cstdlib>

#include <gtest/gtest.h>

#include "foldhom/graph_json.hpp"
#include "foldhom/verdict.hpp"

using namespace foldhom;

TEST(GraphJson, ParsesEdgesAndLoops) {
    const auto g = parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]],"loops":["a"]})");
    EXPECT_EQ(g.size(), 2u);
    EXPECT_TRUE(g.adjacent(0, 1));
    EXPECT_TRUE(g.has_loop(0));
    EXPECT_FALSE(g.has_loop(1));
    EXPECT_EQ(g.edge_count(), 2u);  // duplicate edge merged, loop counted once
}

TEST(GraphJson, Rejects) {
    EXPECT_THROW(parse_graph(R"({"vertices":["a"],"edges":[["a","z"]]})"), ParseError);
    EXPECT_THROW(parse_graph(R"({"vertices":["a","a"]})"), ParseError);
    EXPECT_THROW(parse_graph("{not json"), ParseError);
    EXPECT_THROW(parse_graph(R"({"edges":[]})"), ParseError);
    EXPECT_THROW(parse_graph(R"({"vertices":["a","b"],"edges":[["a"]]})"), ParseError);
    EXPECT_THROW(parse_graph_file("/nonexistent/graph.json"), ParseError);
}

TEST(GraphJson, RoundTrip) {
    auto g = cycle_graph(5);
    g.add_loop(2);
    const auto back = graph_from_json(graph_to_json(g));
    EXPECT_EQ(back, g);
    EXPECT_EQ(back.labels(), g.labels());
}

TEST(GraphJson, TraceRoundTrip) {
    FoldTrace t;
    t.push_back({FoldStep::Op::Fold, "3", "1"});
    t.push_back({FoldStep::Op::Prune, "4", std::nullopt});
    const auto j = trace_to_json(t);
    EXPECT_EQ(j[1]["witness"], nullptr);
    const auto back = trace_from_json(j);
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back[0].witness, "1");
    EXPECT_FALSE(back[1].witness.has_value());
    EXPECT_THROW(trace_from_json(Json::parse(R"([{"op":"merge","removed":"1","witness":null}])")), ParseError);
}

TEST(GraphJson, ColoringIsOneBased) {
    Coloring c;
    c.k = 2;
    c.colors = {0, 1};
    const auto j = coloring_to_json(complete_graph(2), c);
    EXPECT_EQ(j["assignment"]["1"], 1);
    EXPECT_EQ(j["assignment"]["2"], 2);
}

TEST(Config, EnvironmentOverrides) {
    setenv("FOLDHOM_SEED", "42", 1);
    setenv("FOLDHOM_VERTEX_BUDGET", "1000", 1);
    auto c = config_from_env();
    EXPECT_EQ(c.seed, 42u);
    EXPECT_EQ(c.vertex_budget, 1000u);
    EXPECT_NE(c.fingerprint(), Config{}.fingerprint());
    setenv("FOLDHOM_VERTEX_BUDGET", "0", 1);
    EXPECT_THROW(config_from_env(), PreconditionError);
    setenv("FOLDHOM_VERTEX_BUDGET", "12x", 1);
    EXPECT_THROW(config_from_env(), PreconditionError);
    unsetenv("FOLDHOM_SEED");
    unsetenv("FOLDHOM_VERTEX_BUDGET");
    EXPECT_EQ(config_from_env().fingerprint(), Config{}.fingerprint());
}

TEST(Verdict, PassIsConjunctionOfRanChecks) {
    Verdict v;
    EXPECT_FALSE(v.passed());  // nothing ran
    v.skip("b", 1, "budget");
    EXPECT_FALSE(v.passed());
    v.add("a", 2, 2);
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(v.exit_code(), 0);
    v.add("c", "S^1", "S^0");
    EXPECT_FALSE(v.passed());
    EXPECT_EQ(v.exit_code(), 1);
}

TEST(Verdict, JsonIsSortedAndRecordsSeed) {
    Config cfg;
    cfg.seed = 7;
    Verdict v;
    v.theorem_id = "t";
    v.add("zeta", 1, 1);
    v.add("alpha", 1, 1, "sampled(7,10)");
    v.runtime_ms = 12;
    const auto j = v.to_json(cfg);
    EXPECT_EQ(j["checks"][0]["name"], "alpha");
    EXPECT_EQ(j["checks"][0]["strength"], "sampled(7,10)");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_EQ(j["version"], kVersion);
    EXPECT_EQ(j["runtime_ms"], 12);
    EXPECT_FALSE(v.to_json(cfg, false).contains("runtime_ms"));

    // order of assembly does not matter
    Verdict w;
    w.theorem_id = "t";
    w.add("alpha", 1, 1, "sampled(7,10)");
    w.add("zeta", 1, 1);
    EXPECT_EQ(w.to_json(cfg, false).dump(), v.to_json(cfg, false).dump());
}
