#pragma once

// JSON I/O:
//   graph     {"vertices":[label...], "edges":[[a,b]...], "loops":[a...]}
//   trace     [{"op":"fold"|"prune", "removed":a, "witness":b|null}...]
//   homology  {"reduced":true, "groups":[{"dim":d, "rank":r, "torsion":[...]}...]}
//   coloring  {"k":k, "assignment":{label:color}, "verified":"exhaustive"|...}
// Colors are printed 1-based.

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "foldhom/coloring.hpp"
#include "foldhom/errors.hpp"
#include "foldhom/fold.hpp"
#include "foldhom/graph.hpp"
#include "foldhom/homology.hpp"

namespace foldhom {

using Json = nlohmann::json;

inline Json graph_to_json(const Graph& g) {
    Json edges = Json::array(), loops = Json::array();
    for (const auto& [u, v] : g.edges()) {
        if (u == v)
            loops.push_back(g.label(u));
        else
            edges.push_back({g.label(u), g.label(v)});
    }
    return {{"vertices", g.labels()}, {"edges", edges}, {"loops", loops}};
}

inline Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("graph JSON needs a \"vertices\" array");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw ParseError("vertex labels must be strings");
        if (!seen.insert(v.get<std::string>()).second) throw ParseError("duplicate vertex label '" + v.get<std::string>() + "'");
        labels.push_back(v.get<std::string>());
    }
    Graph g(std::move(labels));
    auto vertex = [&](const Json& x) {
        if (!x.is_string()) throw ParseError("edge endpoints must be strings");
        const auto v = g.find(x.get<std::string>());
        if (!v) throw ParseError("unknown vertex label '" + x.get<std::string>() + "'");
        return *v;
    };
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of labels");
            g.add_edge(vertex(e[0]), vertex(e[1]));
        }
    }
    if (j.contains("loops")) {
        if (!j["loops"].is_array()) throw ParseError("\"loops\" must be an array");
        for (const auto& l : j["loops"]) g.add_loop(vertex(l));
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return graph_from_json(j);
}

/// "-" reads standard input.
inline Graph parse_graph_file(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw ParseError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_graph(text);
}

inline Json trace_to_json(const FoldTrace& t) {
    Json out = Json::array();
    for (const auto& s : t) {
        out.push_back({{"op", s.op == FoldStep::Op::Fold ? "fold" : "prune"},
                       {"removed", s.removed},
                       {"witness", s.witness ? Json(*s.witness) : Json(nullptr)}});
    }
    return out;
}

inline FoldTrace trace_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("trace must be an array");
    FoldTrace t;
    for (const auto& s : j) {
        FoldStep step;
        const auto op = s.at("op").get<std::string>();
        if (op != "fold" && op != "prune") throw ParseError("unknown trace op '" + op + "'");
        step.op = op == "fold" ? FoldStep::Op::Fold : FoldStep::Op::Prune;
        step.removed = s.at("removed").get<std::string>();
        if (!s.at("witness").is_null()) step.witness = s["witness"].get<std::string>();
        t.push_back(std::move(step));
    }
    return t;
}

inline Json homology_to_json(const HomologyProfile& p) {
    Json groups = Json::array();
    for (const auto& g : p.groups) groups.push_back({{"dim", g.dim}, {"rank", g.rank}, {"torsion", g.torsion}});
    return {{"reduced", true}, {"groups", groups}};
}

inline Json coloring_to_json(const Graph& g, const Coloring& c, const std::string& verified = "exhaustive") {
    Json assignment = Json::object();
    for (Vertex v = 0; v < g.size(); ++v) assignment[g.label(v)] = c.colors.at(v) + 1;
    return {{"k", c.k}, {"assignment", assignment}, {"verified", verified}};
}

}  // namespace foldhom
