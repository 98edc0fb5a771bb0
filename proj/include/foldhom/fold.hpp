#pragma once

// Folds: G \ {u} whenever N(u) ⊆ N(v) for some v != u.
//
// fold_core repeats "remove the smallest foldable vertex onto its smallest
// witness" until nothing folds. Removing x can only make a vertex foldable
// if that vertex lost x from its neighborhood, so a per-vertex "no fold"
// flag survives every step that does not touch the vertex's neighborhood.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

struct FoldStep {
    enum class Op { Fold, Prune };
    Op op = Op::Fold;
    std::string removed;
    std::optional<std::string> witness;  // empty for prunes

    friend bool operator==(const FoldStep&, const FoldStep&) = default;
};

using FoldTrace = std::vector<FoldStep>;

struct FoldResult {
    Graph core;
    FoldTrace trace;
    std::vector<Vertex> kept;  // indices into the input graph, increasing
};

namespace detail {

// Smallest live v != u with N(u) ⊆ N(v); rows are already restricted to live vertices.
inline std::optional<Vertex> fold_witness(const std::vector<Bitset>& rows, const Bitset& alive, Vertex u) {
    const Bitset& nu = rows[u];
    const auto first = nu.find_first();
    if (first == Bitset::npos) {
        for (auto v = alive.find_first(); v != Bitset::npos; v = alive.find_next(v)) {
            if (v != u) return static_cast<Vertex>(v);
        }
        return std::nullopt;
    }
    // any witness is adjacent to the first neighbor of u
    const Bitset& candidates = rows[first];
    for (auto v = candidates.find_first(); v != Bitset::npos; v = candidates.find_next(v)) {
        if (v != u && nu.is_subset_of(rows[v])) return static_cast<Vertex>(v);
    }
    return std::nullopt;
}

}  // namespace detail

/// Lexicographically smallest (u, v) with u != v and N(u) ⊆ N(v).
inline std::optional<std::pair<Vertex, Vertex>> find_fold(const Graph& g) {
    std::vector<Bitset> rows(g.size());
    for (Vertex v = 0; v < g.size(); ++v) rows[v] = g.row(v);
    Bitset alive(g.size());
    alive.set();
    for (Vertex u = 0; u < g.size(); ++u) {
        if (auto v = detail::fold_witness(rows, alive, u)) return std::make_pair(u, *v);
    }
    return std::nullopt;
}

inline FoldResult fold_core(const Graph& g) {
    const std::size_t n = g.size();
    std::vector<Bitset> rows(n);
    for (Vertex v = 0; v < n; ++v) rows[v] = g.row(v);
    Bitset alive(n);
    alive.set();
    std::vector<char> stuck(n, 0);  // 1: known to have no witness in the current graph

    FoldResult out;
    for (;;) {
        std::optional<std::pair<Vertex, Vertex>> step;
        for (auto u = alive.find_first(); u != Bitset::npos && !step; u = alive.find_next(u)) {
            if (stuck[u]) continue;
            if (auto v = detail::fold_witness(rows, alive, static_cast<Vertex>(u))) {
                step = std::make_pair(static_cast<Vertex>(u), *v);
            } else {
                stuck[u] = 1;
            }
        }
        if (!step) break;
        const auto [u, v] = *step;
        out.trace.push_back({FoldStep::Op::Fold, g.label(u), g.label(v)});
        alive.reset(u);
        for_each_bit(rows[u], [&](Vertex y) {
            rows[y].reset(u);
            stuck[y] = 0;
        });
        rows[u].reset();
    }

    for_each_bit(alive, [&](Vertex v) { out.kept.push_back(v); });
    out.core = induced_subgraph(g, out.kept);
    return out;
}

/// Removes every vertex with an empty neighborhood, one "prune" entry each.
inline FoldResult prune_isolated(const Graph& g) {
    FoldResult out;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.row(v).none()) {
            out.trace.push_back({FoldStep::Op::Prune, g.label(v), std::nullopt});
        } else {
            out.kept.push_back(v);
        }
    }
    out.core = induced_subgraph(g, out.kept);
    return out;
}

/// Replays `trace` on `g`, checking every fold containment and that every
/// pruned vertex is isolated at the time it is removed. Returns the final
/// graph, or nullopt with `error` describing the first bad step.
inline std::optional<Graph> replay_trace(const Graph& g, const FoldTrace& trace, std::string* error = nullptr) {
    std::vector<Bitset> rows(g.size());
    for (Vertex v = 0; v < g.size(); ++v) rows[v] = g.row(v);
    Bitset alive(g.size());
    alive.set();
    auto fail = [&](std::size_t i, const std::string& why) -> std::optional<Graph> {
        if (error) *error = "step " + std::to_string(i) + ": " + why;
        return std::nullopt;
    };
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& step = trace[i];
        const auto u = g.find(step.removed);
        if (!u || !alive.test(*u)) return fail(i, "removed vertex '" + step.removed + "' is not present");
        if (step.op == FoldStep::Op::Fold) {
            if (!step.witness) return fail(i, "fold without witness");
            const auto v = g.find(*step.witness);
            if (!v || !alive.test(*v) || *v == *u) return fail(i, "bad witness '" + *step.witness + "'");
            if (!rows[*u].is_subset_of(rows[*v])) return fail(i, "N(" + step.removed + ") not inside N(" + *step.witness + ")");
        } else if (rows[*u].any()) {
            return fail(i, "pruned vertex '" + step.removed + "' is not isolated");
        }
        alive.reset(*u);
        for_each_bit(rows[*u], [&](Vertex y) { rows[y].reset(*u); });
        rows[*u].reset();
    }
    std::vector<Vertex> keep;
    for_each_bit(alive, [&](Vertex v) { keep.push_back(v); });
    return induced_subgraph(g, keep);
}

/// The retraction G -> G \ {removed...} implied by a fold-only trace:
/// every removed vertex goes to its witness, chased to a surviving vertex.
/// The result is a graph homomorphism onto the core.
inline VertexMap fold_retraction(const Graph& g, const FoldResult& folded) {
    std::vector<Vertex> target(g.size());
    for (Vertex v = 0; v < g.size(); ++v) target[v] = v;
    for (auto it = folded.trace.rbegin(); it != folded.trace.rend(); ++it) {
        if (it->op != FoldStep::Op::Fold) throw PreconditionError("retraction needs a fold-only trace");
        target[g.at(it->removed)] = target[g.at(*it->witness)];
    }
    std::vector<Vertex> slot(g.size(), 0);
    for (Vertex i = 0; i < folded.kept.size(); ++i) slot[folded.kept[i]] = i;
    std::vector<Vertex> values(g.size());
    for (Vertex v = 0; v < g.size(); ++v) values[v] = slot[target[v]];
    return VertexMap(folded.kept.size(), std::move(values));
}

}  // namespace foldhom
