#pragma once

// The explicit m-colorings φ of the folded exponential graphs, and checks of
// their properness: exhaustive over a family when it is small enough,
// otherwise by seeded sampling of adjacent pairs.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "foldhom/certificates.hpp"
#include "foldhom/coloring.hpp"
#include "foldhom/errors.hpp"
#include "foldhom/exponential.hpp"
#include "foldhom/folded.hpp"
#include "foldhom/leveled.hpp"

namespace foldhom {

/// f_l(1) if block l is constant, otherwise color 1 (0-based: 0).
inline Vertex phi_single(const LeveledSpace& s, const LeveledMap& f, std::size_t level) {
    const auto& e = s.table()[f.blocks.at(level)];
    return e.constant ? e.map[0] : 0;
}

/// f00(1) if f00 is constant; f10(1) if f00 is a homomorphism and f10
/// constant; f(w0) if both are homomorphisms.
inline Vertex phi_double(const LeveledSpace& s, const LeveledMap& f) {
    const DoubleView v(s, f);
    if (!v.hom00()) return v.f00.map[0];
    if (!v.hom10()) return v.f10.map[0];
    return v.w0;
}

struct ColoringCheck {
    bool proper = true;
    bool exhaustive = false;
    std::uint64_t seed = 0;
    std::uint64_t vertices = 0;  // members visited
    std::uint64_t pairs = 0;     // adjacent pairs checked (ordered, exhaustive counts both directions)
    std::optional<std::pair<std::string, std::string>> violation;

    std::string strength() const {
        return exhaustive ? "exhaustive" : "sampled(" + std::to_string(seed) + "," + std::to_string(pairs) + ")";
    }
};

using LeveledColoring = std::function<Vertex(const LeveledMap&)>;

/// Every edge of the family; a loop at a member counts as a violation.
inline ColoringCheck check_coloring_exhaustive(const LeveledFamily& fam, const LeveledColoring& color) {
    ColoringCheck out;
    out.exhaustive = true;
    const auto& s = fam.space();
    fam.for_each_vertex([&](const LeveledMap& f) {
        ++out.vertices;
        const Vertex cf = color(f);
        if (cf >= s.colors()) {
            out.proper = false;
            out.violation = {s.label(f), "color out of range"};
            return false;
        }
        return fam.for_each_neighbor(f, [&](const LeveledMap& g) {
            ++out.pairs;
            if (color(g) != cf) return true;
            out.proper = false;
            out.violation = {s.label(f), s.label(g)};
            return false;
        });
    });
    return out;
}

/// Seeded sampling: draw members, then uniform neighbors in the space, keeping
/// those inside the family, until `pairs` adjacent pairs have been checked.
/// Gives up (proper stays true, pairs < target) after `max_draws` draws.
inline ColoringCheck check_coloring_sampled(const LeveledFamily& fam, const LeveledColoring& color, std::uint64_t seed,
                                            std::uint64_t pairs, std::uint64_t max_draws = 0) {
    ColoringCheck out;
    out.seed = seed;
    const auto& s = fam.space();
    if (max_draws == 0) max_draws = 200 * pairs + 1'000'000;
    std::mt19937_64 rng(seed);
    std::uint64_t draws = 0;
    while (out.pairs < pairs && draws < max_draws) {
        ++draws;
        const auto f = s.random_vertex(rng);
        if (!fam.contains(f)) continue;
        ++out.vertices;
        const auto sets = s.allowed(f);
        std::vector<std::vector<std::uint32_t>> choices(sets.size());
        bool empty = false;
        for (std::size_t i = 0; i < sets.size() && !empty; ++i) {
            for_each_bit(sets[i], [&](Vertex c) { choices[i].push_back(c); });
            empty = choices[i].empty();
        }
        if (empty) continue;
        const Vertex cf = color(f);
        // a few neighbors per member keeps the sample spread out
        for (int k = 0; k < 16 && out.pairs < pairs; ++k) {
            ++draws;
            LeveledMap g = f;
            for (std::size_t i = 0; i < choices.size(); ++i)
                s.set_slot(g, i, choices[i][std::uniform_int_distribution<std::size_t>(0, choices[i].size() - 1)(rng)]);
            if (!fam.contains(g)) continue;
            if (!s.adjacent(f, g)) throw InternalError("sampled neighbor is not adjacent");
            ++out.pairs;
            if (color(g) == cf) {
                out.proper = false;
                out.violation = {s.label(f), s.label(g)};
                return out;
            }
        }
    }
    return out;
}

/// Exhaustive when the family is within `vertex_budget` members of a space of
/// at most 64-bit size, sampled otherwise.
inline ColoringCheck check_coloring(const LeveledFamily& fam, const LeveledColoring& color, std::uint64_t vertex_budget,
                                    std::uint64_t seed, std::uint64_t sample_pairs) {
    const auto total = fam.space().vertex_count();
    if (total && *total <= 64 * vertex_budget && fam.count() <= vertex_budget) return check_coloring_exhaustive(fam, color);
    return check_coloring_sampled(fam, color, seed, sample_pairs);
}

/// The m constant maps of the space. Callers check membership and adjacency.
inline std::vector<LeveledMap> constant_maps(const LeveledSpace& s) {
    std::vector<LeveledMap> out;
    for (Vertex c = 0; c < s.colors(); ++c) {
        LeveledMap f{std::vector<std::uint32_t>(s.base().blocks(), static_cast<std::uint32_t>(s.table().constant(c))),
                     std::vector<Vertex>(s.base().apices(), c)};
        out.push_back(std::move(f));
    }
    return out;
}

inline bool is_clique(const LeveledSpace& s, const std::vector<LeveledMap>& maps) {
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = 0; j < maps.size(); ++j)
            if (i != j && !s.adjacent(maps[i], maps[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Colorings of the whole exponential graph: φ after the fold retraction.
// Members the retraction sends outside the pruned family are isolated, so
// any color is fine for them; they get color 0.

struct FullColoringCheck {
    bool proper = true;
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;  // ordered adjacent pairs
    std::optional<std::pair<std::string, std::string>> violation;
};

/// Checks c on every edge of big = K_m^base; big must be within `vertex_budget`.
inline FullColoringCheck check_full_coloring(const ImplicitExponential& big, const std::function<Vertex(const VertexMap&)>& c,
                                             std::uint64_t vertex_budget = kDefaultVertexBudget) {
    const auto n = big.vertex_count();
    if (!n || *n > vertex_budget) throw BudgetExceeded("exponential graph over the vertex budget", n.value_or(UINT64_MAX));
    FullColoringCheck out;
    std::vector<Vertex> color(*n);
    for (std::uint64_t code = 0; code < *n; ++code) color[code] = c(big.decode(code));
    for (std::uint64_t code = 0; code < *n && out.proper; ++code) {
        ++out.vertices;
        const auto f = big.decode(code);
        big.for_each_neighbor(f, [&](const VertexMap& g) {
            ++out.edges;
            if (color[big.encode(g)] != color[code]) return true;
            out.proper = false;
            out.violation = {big.label(f), big.label(g)};
            return false;
        });
    }
    return out;
}

inline std::function<Vertex(const VertexMap&)> full_coloring_single(const LeveledSpace& s, std::size_t level) {
    return [&s, level](const VertexMap& f) { return phi_single(s, single_retraction(s, f), level); };
}

inline std::function<Vertex(const VertexMap&)> full_coloring_double(const LeveledSpace& s) {
    return [&s](const VertexMap& f) -> Vertex {
        const auto g = double_retraction(s, f);
        const DoubleView v(s, g);
        if (in_U1(v) || in_U2(v) || in_U3(v)) return 0;
        return phi_double(s, g);
    };
}

// ---------------------------------------------------------------------------

struct ExplicitColoring {
    LeveledFamily family;
    ColoringCheck check;
    bool clique_ok = false;  // the m constant maps are members and pairwise adjacent
};

/// φ on T1 (or T2 when `prune`) for level l ∈ A.
inline ExplicitColoring explicit_coloring_single(std::size_t m, const Graph& t, const PathSpec& path, std::size_t level,
                                                 bool prune, std::uint64_t vertex_budget = kDefaultVertexBudget,
                                                 std::uint64_t seed = 1, std::uint64_t sample_pairs = 1'000'000) {
    if (!path.loops.count(static_cast<int>(level))) throw PreconditionError("level l must lie in A");
    auto fam = folded_exponential_single(m, t, path, prune);
    const LeveledSpace& s = fam.space();
    auto check = check_coloring(fam, [&](const LeveledMap& f) { return phi_single(s, f, level); }, vertex_budget, seed,
                                sample_pairs);
    const auto consts = constant_maps(s);
    bool members = true;
    for (const auto& f : consts) members = members && fam.contains(f);
    return {fam, check, members && is_clique(s, consts)};
}

inline ExplicitColoring explicit_coloring_double(std::size_t m, std::size_t n,
                                                 std::uint64_t vertex_budget = kDefaultVertexBudget,
                                                 std::uint64_t seed = 1, std::uint64_t sample_pairs = 1'000'000) {
    auto fam = folded_exponential_double(m, n, DoubleStage::G2);
    const LeveledSpace& s = fam.space();
    auto check = check_coloring(fam, [&](const LeveledMap& f) { return phi_double(s, f); }, vertex_budget, seed, sample_pairs);
    const auto consts = constant_maps(s);
    bool members = true;
    for (const auto& f : consts) members = members && fam.contains(f);
    return {fam, check, members && is_clique(s, consts)};
}

}  // namespace foldhom
