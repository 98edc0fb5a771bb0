#pragma once

// Abstract simplicial complexes given by facets, the neighborhood complex
// N(G), and the order complex of the cell poset of Hom(K_2, G).

#include <algorithm>
#include <cstdint>
#include <map>
#include <functional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// `generators` may contain non-maximal and repeated sets; only the
    /// maximal ones are kept. Every ground element must occur somewhere.
    SimplicialComplex(std::vector<std::string> ground, std::vector<std::vector<Vertex>> generators)
        : ground_(std::move(ground)) {
        for (auto& s : generators) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            if (s.empty()) throw PreconditionError("empty generator");
            if (s.back() >= ground_.size()) throw PreconditionError("generator outside the ground set");
        }
        std::sort(generators.begin(), generators.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() > b.size() : a < b;
        });
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

        // containing[v]: kept facets that contain v
        std::vector<Bitset> containing(ground_.size());
        std::vector<std::vector<Vertex>> kept;
        for (auto& s : generators) {
            bool covered = !kept.empty();
            if (covered) {
                Bitset acc = containing[s[0]];
                for (std::size_t i = 1; i < s.size() && acc.any(); ++i) acc &= containing[s[i]];
                covered = acc.any();
            }
            if (covered) continue;
            for (auto& c : containing) c.resize(kept.size() + 1);
            for (Vertex v : s) containing[v].set(kept.size());
            kept.push_back(std::move(s));
        }
        finish(std::move(kept));
    }

    /// Trusts the caller that `facets` are pairwise incomparable.
    static SimplicialComplex from_facets(std::vector<std::string> ground, std::vector<std::vector<Vertex>> facets) {
        SimplicialComplex k;
        k.ground_ = std::move(ground);
        for (auto& f : facets) std::sort(f.begin(), f.end());
        k.finish(std::move(facets));
        return k;
    }

    const std::vector<std::string>& ground() const noexcept { return ground_; }
    const std::vector<std::vector<Vertex>>& facets() const noexcept { return facets_; }
    bool empty() const noexcept { return facets_.empty(); }

    /// -1 for the empty complex.
    int dimension() const {
        int d = -1;
        for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

  private:
    void finish(std::vector<std::vector<Vertex>> facets) {
        std::sort(facets.begin(), facets.end());
        facets_ = std::move(facets);
        std::vector<char> used(ground_.size(), 0);
        for (const auto& f : facets_)
            for (Vertex v : f) used[v] = 1;
        for (std::size_t v = 0; v < ground_.size(); ++v)
            if (!used[v]) throw PreconditionError("ground element '" + ground_[v] + "' lies in no facet");
    }

    std::vector<std::string> ground_;
    std::vector<std::vector<Vertex>> facets_;
};

/// N(G): facets are the maximal nonempty neighborhoods. The ground set is
/// the non-isolated vertices of G, in order.
inline SimplicialComplex neighborhood_complex(const Graph& g) {
    std::vector<Vertex> slot(g.size(), 0);
    std::vector<std::string> ground;
    Bitset covered(g.size());
    for (Vertex v = 0; v < g.size(); ++v) covered |= g.row(v);
    for (Vertex v = 0; v < g.size(); ++v) {
        if (!covered.test(v)) continue;
        slot[v] = static_cast<Vertex>(ground.size());
        ground.push_back(g.label(v));
    }
    std::vector<std::vector<Vertex>> gens;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (g.row(v).none()) continue;
        std::vector<Vertex> s;
        for_each_bit(g.row(v), [&](Vertex w) { s.push_back(slot[w]); });
        gens.push_back(std::move(s));
    }
    return SimplicialComplex(std::move(ground), std::move(gens));
}

inline constexpr std::size_t kDefaultCellBudget = 200'000;

/// Order complex of the face poset of Hom(K_2, G). Cells are pairs (A, B) of
/// nonempty vertex sets with every a ~ b; (A,B) <= (A',B') coordinatewise.
/// Any two comparable cells are joined by single-element steps, so maximal
/// chains run from a pair of singletons to a maximal cell one element at a time.
inline SimplicialComplex hom_k2_complex(const Graph& g, std::size_t cell_budget = kDefaultCellBudget,
                                        std::size_t chain_budget = 2'000'000) {
    const std::size_t n = g.size();
    if (n > 20) throw BudgetExceeded("Hom(K2,G) limited to 20 vertices", n);
    using Cell = std::pair<std::uint32_t, std::uint32_t>;  // bitmasks
    std::vector<Cell> cells;
    std::vector<std::uint32_t> common(1u << n, 0);  // common neighborhood mask of A
    const std::uint32_t all = (1u << n) - 1;
    common[0] = all;
    for (std::uint32_t a = 1; a < (1u << n); ++a) {
        const auto low = static_cast<Vertex>(__builtin_ctz(a));
        std::uint32_t row = 0;
        for_each_bit(g.row(low), [&](Vertex w) { row |= 1u << w; });
        common[a] = common[a & (a - 1)] & row;
        // every nonempty B inside common[a]
        for (std::uint32_t b = common[a]; b; b = (b - 1) & common[a]) {
            cells.emplace_back(a, b);
            if (cells.size() > cell_budget) throw BudgetExceeded("Hom(K2,G) has too many cells", cells.size());
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& x, const Cell& y) {
        const int sx = __builtin_popcount(x.first) + __builtin_popcount(x.second);
        const int sy = __builtin_popcount(y.first) + __builtin_popcount(y.second);
        return sx != sy ? sx < sy : x < y;
    });
    std::map<Cell, Vertex> index;
    std::vector<std::string> ground;
    auto set_label = [&](std::uint32_t mask) {
        std::string out = "{";
        bool first = true;
        for (Vertex v = 0; v < n; ++v) {
            if (!(mask >> v & 1u)) continue;
            if (!first) out += ',';
            out += g.label(v);
            first = false;
        }
        return out + "}";
    };
    for (const auto& c : cells) {
        index.emplace(c, static_cast<Vertex>(ground.size()));
        ground.push_back("(" + set_label(c.first) + "," + set_label(c.second) + ")");
    }

    std::vector<std::vector<Vertex>> chains;
    std::vector<Vertex> chain;
    std::function<void(const Cell&)> climb = [&](const Cell& c) {
        chain.push_back(index.at(c));
        bool extended = false;
        for (Vertex v = 0; v < n; ++v) {
            const std::uint32_t bit = 1u << v;
            if (!(c.first & bit) && (common[c.first | bit] & c.second) == c.second) {
                extended = true;
                climb({c.first | bit, c.second});
            }
            if (!(c.second & bit) && (common[c.first] & bit)) {
                extended = true;
                climb({c.first, c.second | bit});
            }
        }
        if (!extended) {
            chains.push_back(chain);
            if (chains.size() > chain_budget) throw BudgetExceeded("Hom(K2,G) order complex too large", chains.size());
        }
        chain.pop_back();
    };
    for (const auto& c : cells) {
        if (__builtin_popcount(c.first) == 1 && __builtin_popcount(c.second) == 1) climb(c);
    }
    return SimplicialComplex::from_facets(std::move(ground), std::move(chains));
}

}  // namespace foldhom
