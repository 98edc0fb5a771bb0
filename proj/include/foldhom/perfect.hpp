#pragma once

// Property P and brute-force odd hole / antihole detection.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

/// (v1, w1, v2, w2) with v2 ~ v1 but neither w2 ~ v1 nor w2 ~ w1.
using PropertyPWitness = std::array<Vertex, 4>;

/// Checks every ordered pair of disjoint oriented edges; returns the first
/// violation in lexicographic order of (v1, w1, v2, w2), or nullopt.
inline std::optional<PropertyPWitness> property_P_violation(const Graph& g) {
    if (!g.is_simple()) throw LoopedGraphError("property P is defined for simple graphs");
    const std::size_t n = g.size();
    for (Vertex v1 = 0; v1 < n; ++v1) {
        for (Vertex w1 = 0; w1 < n; ++w1) {
            if (!g.adjacent(v1, w1)) continue;
            for (Vertex v2 = 0; v2 < n; ++v2) {
                if (v2 == v1 || v2 == w1 || !g.adjacent(v2, v1)) continue;
                for (Vertex w2 = 0; w2 < n; ++w2) {
                    if (w2 == v1 || w2 == w1 || !g.adjacent(v2, w2)) continue;
                    if (!g.adjacent(w2, v1) && !g.adjacent(w2, w1)) return PropertyPWitness{v1, w1, v2, w2};
                }
            }
        }
    }
    return std::nullopt;
}

inline bool property_P(const Graph& g) { return !property_P_violation(g).has_value(); }

inline bool is_property_P_violation(const Graph& g, const PropertyPWitness& q) {
    const auto [v1, w1, v2, w2] = q;
    const bool disjoint = v1 != v2 && v1 != w2 && w1 != v2 && w1 != w2 && v1 != w1 && v2 != w2;
    return disjoint && g.adjacent(v1, w1) && g.adjacent(v2, w2) && g.adjacent(v2, v1) && !g.adjacent(w2, v1) &&
           !g.adjacent(w2, w1);
}

inline constexpr std::size_t kDefaultHoleSearchLimit = 10;

struct OddHole {
    enum class Kind { Hole, Antihole };
    Kind kind = Kind::Hole;
    std::vector<Vertex> cycle;  // in cyclic order, starting at the smallest vertex
};

namespace detail {

// Cyclic order of `mask` if it induces a single cycle in g.
inline std::optional<std::vector<Vertex>> induced_cycle(const Graph& g, std::uint32_t mask) {
    std::vector<Vertex> members;
    for (Vertex v = 0; v < 32; ++v)
        if (mask >> v & 1u) members.push_back(v);
    auto nbrs = [&](Vertex v) {
        std::vector<Vertex> out;
        for (Vertex w : members)
            if (w != v && g.adjacent(v, w)) out.push_back(w);
        return out;
    };
    for (Vertex v : members)
        if (nbrs(v).size() != 2) return std::nullopt;
    std::vector<Vertex> cycle{members.front()};
    Vertex prev = members.front();
    Vertex cur = nbrs(prev).front();  // smaller neighbor first
    while (cur != members.front()) {
        cycle.push_back(cur);
        const auto nb = nbrs(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    if (cycle.size() != members.size()) return std::nullopt;  // disconnected union of cycles
    return cycle;
}

}  // namespace detail

/// Odd induced cycle of length >= 5 in G (hole) or in its complement
/// (antihole). Exhaustive, so limited to `limit` vertices.
inline std::optional<OddHole> find_odd_hole_or_antihole(const Graph& g, std::size_t limit = kDefaultHoleSearchLimit) {
    if (g.size() > limit || g.size() > 24) {
        throw BudgetExceeded("odd hole search limited to " + std::to_string(std::min<std::size_t>(limit, 24)) + " vertices",
                             g.size());
    }
    if (!g.is_simple()) throw LoopedGraphError("odd hole search needs a simple graph");
    const Graph c = complement(g);
    const auto n = static_cast<std::uint32_t>(g.size());
    for (const auto& [graph, kind] : {std::pair{&g, OddHole::Kind::Hole}, std::pair{&c, OddHole::Kind::Antihole}}) {
        for (std::uint32_t size = 5; size <= n; size += 2) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != size) continue;
                if (auto cycle = detail::induced_cycle(*graph, mask)) return OddHole{kind, std::move(*cycle)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace foldhom
