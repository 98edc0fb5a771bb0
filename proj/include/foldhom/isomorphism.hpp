#pragma once

// Small-graph isomorphism, canonical keys and subgraph embedding by
// backtracking. All three are meant for graphs of a few dozen vertices at most.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

inline constexpr std::size_t kDefaultIsomorphismLimit = 16;
inline constexpr std::size_t kCanonicalBruteForceLimit = 10;

namespace detail {

inline std::vector<std::pair<bool, std::size_t>> vertex_invariants(const Graph& g) {
    std::vector<std::pair<bool, std::size_t>> inv(g.size());
    for (Vertex v = 0; v < g.size(); ++v) inv[v] = {g.has_loop(v), g.degree(v)};
    return inv;
}

// Orders vertices so that each one (after the first) tends to have an
// already-placed neighbor; high degree first within a component.
inline std::vector<Vertex> search_order(const Graph& g) {
    std::vector<Vertex> order;
    Bitset placed(g.size());
    std::vector<std::size_t> links(g.size(), 0);
    while (order.size() < g.size()) {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (placed.test(v)) continue;
            if (!found || links[v] > links[best] ||
                (links[v] == links[best] && g.degree(v) > g.degree(best))) {
                best = v;
                found = true;
            }
        }
        placed.set(best);
        order.push_back(best);
        for_each_bit(g.row(best), [&](Vertex w) { ++links[w]; });
    }
    return order;
}

}  // namespace detail

/// Exact isomorphism test. Returns a witness map V(G) -> V(H) when one exists.
inline std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h,
                                                 std::size_t max_vertices = kDefaultIsomorphismLimit) {
    if (g.size() > max_vertices || h.size() > max_vertices) {
        throw BudgetExceeded("isomorphism test limited to " + std::to_string(max_vertices) + " vertices",
                             std::max(g.size(), h.size()));
    }
    if (g.size() != h.size() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count()) {
        return std::nullopt;
    }
    const auto gi = detail::vertex_invariants(g);
    const auto hi = detail::vertex_invariants(h);
    {
        auto a = gi, b = hi;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    const std::size_t n = g.size();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // prefer connected growth
    {
        std::vector<Vertex> grown;
        Bitset placed(n);
        while (grown.size() < n) {
            Vertex pick = n;
            for (Vertex v : order) {
                if (placed.test(v)) continue;
                bool linked = false;
                for (Vertex u : grown) linked = linked || g.adjacent(u, v);
                if (linked) {
                    pick = v;
                    break;
                }
                if (pick == n) pick = v;
            }
            placed.set(pick);
            grown.push_back(pick);
        }
        order = std::move(grown);
    }

    std::vector<Vertex> map(n, 0);
    Bitset used(n);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        const Vertex v = order[depth];
        for (Vertex w = 0; w < n; ++w) {
            if (used.test(w) || gi[v] != hi[w]) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex u = order[k];
                ok = g.adjacent(u, v) == h.adjacent(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used.set(w);
            if (extend(depth + 1)) return true;
            used.reset(w);
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return VertexMap(n, map);
}

inline bool is_isomorphic(const Graph& g, const Graph& h, std::size_t max_vertices = kDefaultIsomorphismLimit) {
    return find_isomorphism(g, h, max_vertices).has_value();
}

/// Checks that `f` is a bijection V(G) -> V(H) preserving adjacency and
/// non-adjacency. Works at any size (quadratic in |V|).
inline bool is_isomorphism(const Graph& g, const Graph& h, const VertexMap& f) {
    if (g.size() != h.size() || f.domain_size != g.size() || f.codomain_size != h.size()) return false;
    Bitset hit(h.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        if (hit.test(f[v])) return false;
        hit.set(f[v]);
    }
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = u; v < g.size(); ++v) {
            if (g.adjacent(u, v) != h.adjacent(f[u], f[v])) return false;
        }
    }
    return true;
}

/// Byte-string key, equal for isomorphic graphs with at most `brute_limit`
/// vertices (minimum lower-triangle adjacency over invariant-respecting
/// orderings). Larger graphs get an exact labelled serialization.
inline std::string canonical_key(const Graph& g, std::size_t brute_limit = kCanonicalBruteForceLimit) {
    static constexpr char hex[] = "0123456789abcdef";
    const std::size_t n = g.size();
    auto encode_bits = [&](const std::vector<bool>& bits) {
        std::string out;
        for (std::size_t i = 0; i < bits.size(); i += 4) {
            int nibble = 0;
            for (std::size_t j = 0; j < 4; ++j) nibble = nibble * 2 + ((i + j < bits.size() && bits[i + j]) ? 1 : 0);
            out += hex[nibble];
        }
        return out;
    };

    if (n > brute_limit) {
        std::string out = "L" + std::to_string(n) + ":";
        for (const auto& l : g.labels()) {
            out += std::to_string(l.size());
            out += '#';
            out += l;
        }
        std::vector<bool> bits;
        for (Vertex i = 0; i < n; ++i)
            for (Vertex j = 0; j <= i; ++j) bits.push_back(g.adjacent(i, j));
        return out + ":" + encode_bits(bits);
    }

    // Vertices are placed class by class, classes sorted by (loop, degree).
    const auto inv = detail::vertex_invariants(g);
    std::vector<Vertex> by_class(n);
    std::iota(by_class.begin(), by_class.end(), Vertex{0});
    std::stable_sort(by_class.begin(), by_class.end(), [&](Vertex a, Vertex b) { return inv[a] < inv[b]; });
    std::vector<std::pair<bool, std::size_t>> slot_class(n);
    for (std::size_t k = 0; k < n; ++k) slot_class[k] = inv[by_class[k]];

    std::vector<std::uint32_t> best_rows, rows(n, 0);
    std::vector<Vertex> order(n);
    Bitset used(n);
    bool have_best = false;

    // prefixes that already compare greater than the best complete ordering are cut
    std::function<void(std::size_t)> search = [&](std::size_t k) {
        if (k == n) {
            if (!have_best || rows < best_rows) {
                best_rows = rows;
                have_best = true;
            }
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used.test(v) || inv[v] != slot_class[k]) continue;
            std::uint32_t row = 0;
            for (std::size_t j = 0; j < k; ++j) row = (row << 1) | (g.adjacent(v, order[j]) ? 1u : 0u);
            row = (row << 1) | (g.has_loop(v) ? 1u : 0u);
            rows[k] = row;
            if (have_best && std::lexicographical_compare(best_rows.begin(), best_rows.begin() + k + 1, rows.begin(),
                                                          rows.begin() + k + 1))
                continue;
            order[k] = v;
            used.set(v);
            search(k + 1);
            used.reset(v);
        }
        rows[k] = 0;
    };
    search(0);

    std::vector<bool> bits;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) bits.push_back(((best_rows[k] >> (k - j)) & 1u) != 0);
    std::string out = "C" + std::to_string(n) + ":";
    for (std::size_t k = 0; k < n; ++k) {
        out += std::to_string(slot_class[k].first ? 1 : 0);
        out += '.';
        out += std::to_string(slot_class[k].second);
        out += ' ';
    }
    return out + ":" + encode_bits(bits);
}

/// Injective map V(P) -> V(G) sending every edge of P to an edge of G
/// (a not necessarily induced copy of P inside G).
inline std::optional<VertexMap> find_subgraph_embedding(const Graph& pattern, const Graph& host,
                                                        std::uint64_t node_budget = 50'000'000) {
    const std::size_t np = pattern.size(), nh = host.size();
    if (np > nh) return std::nullopt;
    const auto order = detail::search_order(pattern);
    std::vector<Vertex> map(np, 0);
    Bitset used(nh);
    std::uint64_t nodes = 0;
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == np) return true;
        if (++nodes > node_budget) throw BudgetExceeded("subgraph search exceeded its node budget", nodes);
        const Vertex v = order[depth];
        for (Vertex w = 0; w < nh; ++w) {
            if (used.test(w) || host.degree(w) < pattern.degree(v)) continue;
            if (pattern.has_loop(v) && !host.has_loop(w)) continue;
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                const Vertex u = order[k];
                if (pattern.adjacent(u, v)) ok = host.adjacent(map[u], w);
            }
            if (!ok) continue;
            map[v] = w;
            used.set(w);
            if (extend(depth + 1)) return true;
            used.reset(w);
        }
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return VertexMap(nh, map);
}

}  // namespace foldhom
