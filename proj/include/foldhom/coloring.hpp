#pragma once

// Exact coloring: clique lower bound, DSATUR upper bound, then a DSATUR
// branch-and-bound decision search for each k between them. Also
// homomorphism search with forward checking and bipartiteness.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

/// Colors are 0-based internally and printed 1-based.
struct Coloring {
    std::size_t k = 0;
    std::vector<Vertex> colors;
};

inline bool is_proper_coloring(const Graph& g, const Coloring& c) {
    if (c.colors.size() != g.size()) return false;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (c.colors[v] >= c.k) return false;
    }
    for (const auto& [u, v] : g.edges()) {
        if (c.colors[u] == c.colors[v]) return false;  // loops fail here too
    }
    return true;
}

inline void require_loopless(const Graph& g, const char* what) {
    if (!g.is_simple()) throw LoopedGraphError(std::string(what) + ": graph has loops, so it has no proper coloring");
}

// ---------------------------------------------------------------------------
// Clique

/// Maximum clique by branch and bound; greedy coloring of the candidate set
/// bounds each branch (the classic MCQ scheme).
inline std::vector<Vertex> max_clique(const Graph& g) {
    require_loopless(g, "max_clique");
    const std::size_t n = g.size();
    std::vector<Vertex> best, current;
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::function<void(std::vector<Vertex>&)> expand = [&](std::vector<Vertex>& cand) {
        // greedy color classes in the given order; bound[i] = colors used up to i
        std::vector<Vertex> sorted;
        std::vector<std::size_t> bound;
        sorted.reserve(cand.size());
        std::vector<Vertex> rest = cand;
        std::size_t color = 0;
        while (!rest.empty()) {
            ++color;
            std::vector<Vertex> next;
            Bitset cls(n);
            for (Vertex v : rest) {
                if (g.row(v).intersects(cls)) {
                    next.push_back(v);
                } else {
                    cls.set(v);
                    sorted.push_back(v);
                    bound.push_back(color);
                }
            }
            rest.swap(next);
        }
        for (std::size_t i = sorted.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best.size()) return;
            const Vertex v = sorted[i];
            current.push_back(v);
            std::vector<Vertex> next;
            for (std::size_t j = 0; j < i; ++j) {
                if (g.adjacent(v, sorted[j])) next.push_back(sorted[j]);
            }
            if (next.empty()) {
                if (current.size() > best.size()) best = current;
            } else {
                expand(next);
            }
            current.pop_back();
        }
    };
    if (n > 0) expand(order);
    std::sort(best.begin(), best.end());
    return best;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Bipartiteness

inline std::optional<Coloring> two_coloring(const Graph& g) {
    std::vector<int> side(g.size(), -1);
    for (Vertex s = 0; s < g.size(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<Vertex> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex v = queue[head];
            bool clash = false;
            for_each_bit(g.row(v), [&](Vertex w) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if (side[w] == side[v]) {
                    clash = true;
                }
            });
            if (clash) return std::nullopt;
        }
    }
    Coloring c{2, std::vector<Vertex>(g.size())};
    for (Vertex v = 0; v < g.size(); ++v) c.colors[v] = static_cast<Vertex>(side[v]);
    if (g.edge_count() == 0) c.k = g.empty() ? 0 : 1;
    return c;
}

inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// ---------------------------------------------------------------------------
// DSATUR

namespace detail {

struct Saturation {
    const Graph& g;
    std::size_t k;
    std::vector<int> color;                       // -1 = uncolored
    std::vector<std::vector<std::uint32_t>> seen;  // seen[v][c] = colored neighbors with color c
    std::vector<std::size_t> sat;

    Saturation(const Graph& graph, std::size_t colors)
        : g(graph), k(colors), color(graph.size(), -1), seen(graph.size(), std::vector<std::uint32_t>(colors, 0)),
          sat(graph.size(), 0) {}

    void assign(Vertex v, int c) {
        color[v] = c;
        for_each_bit(g.row(v), [&](Vertex w) {
            if (seen[w][c]++ == 0) ++sat[w];
        });
    }
    void unassign(Vertex v) {
        const int c = color[v];
        color[v] = -1;
        for_each_bit(g.row(v), [&](Vertex w) {
            if (--seen[w][c] == 0) --sat[w];
        });
    }
    std::optional<Vertex> pick() const {
        std::optional<Vertex> best;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (color[v] >= 0) continue;
            if (!best || sat[v] > sat[*best] || (sat[v] == sat[*best] && g.degree(v) > g.degree(*best))) best = v;
        }
        return best;
    }
};

}  // namespace detail

/// Greedy DSATUR coloring (upper bound).
inline Coloring dsatur_coloring(const Graph& g) {
    require_loopless(g, "dsatur_coloring");
    detail::Saturation s(g, g.size() + 1);
    std::size_t used = 0;
    while (auto v = s.pick()) {
        int c = 0;
        while (s.seen[*v][c] != 0) ++c;
        s.assign(*v, c);
        used = std::max<std::size_t>(used, c + 1);
    }
    Coloring out{used, std::vector<Vertex>(g.size())};
    for (Vertex v = 0; v < g.size(); ++v) out.colors[v] = static_cast<Vertex>(s.color[v]);
    return out;
}

enum class SearchStatus { Found, Impossible, Unknown };

struct SearchBudget {
    std::chrono::steady_clock::time_point deadline = std::chrono::steady_clock::time_point::max();
    std::uint64_t node_limit = UINT64_MAX;
    std::uint64_t nodes = 0;

    bool exhausted() {
        ++nodes;
        if (nodes > node_limit) return true;
        return (nodes & 1023u) == 0 && std::chrono::steady_clock::now() > deadline;
    }
};

/// Exact k-colorability by DSATUR backtracking, `seed` clique colored first.
inline SearchStatus k_coloring(const Graph& g, std::size_t k, Coloring& out, SearchBudget& budget,
                               const std::vector<Vertex>& seed = {}) {
    require_loopless(g, "k_coloring");
    if (g.empty()) {
        out = Coloring{0, {}};
        return SearchStatus::Found;
    }
    if (k == 0) return SearchStatus::Impossible;
    if (seed.size() > k) return SearchStatus::Impossible;
    detail::Saturation s(g, k);
    for (std::size_t i = 0; i < seed.size(); ++i) s.assign(seed[i], static_cast<int>(i));
    bool gave_up = false;
    std::function<bool(int)> search = [&](int used) -> bool {
        auto v = s.pick();
        if (!v) return true;
        if (budget.exhausted()) {
            gave_up = true;
            return false;
        }
        const int limit = std::min<int>(static_cast<int>(k), used + 1);
        for (int c = 0; c < limit; ++c) {
            if (s.seen[*v][c] != 0) continue;
            s.assign(*v, c);
            if (search(std::max(used, c + 1))) return true;
            s.unassign(*v);
            if (gave_up) return false;
        }
        return false;
    };
    if (search(static_cast<int>(seed.size()))) {
        out = Coloring{k, std::vector<Vertex>(g.size())};
        for (Vertex v = 0; v < g.size(); ++v) out.colors[v] = static_cast<Vertex>(s.color[v]);
        return SearchStatus::Found;
    }
    return gave_up ? SearchStatus::Unknown : SearchStatus::Impossible;
}

struct ChromaticResult {
    bool exact = false;
    std::size_t lower = 0, upper = 0;  // chi is in [lower, upper]; equal when exact
    Coloring witness;                  // proper, uses `upper` colors
    std::vector<Vertex> clique;        // certifies `lower` (when not raised by search)

    std::size_t value() const {
        if (!exact) throw InternalError("chromatic number is only bracketed");
        return upper;
    }
};

/// Exact chromatic number within the time budget; otherwise a bracket.
inline ChromaticResult chromatic_number(const Graph& g, std::int64_t budget_ms = 60'000) {
    require_loopless(g, "chromatic_number");
    ChromaticResult out;
    if (g.empty()) {
        out.exact = true;
        return out;
    }
    out.clique = max_clique(g);
    out.lower = out.clique.size();
    out.witness = dsatur_coloring(g);
    out.upper = out.witness.k;
    SearchBudget budget;
    if (budget_ms > 0) budget.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget_ms);
    while (out.lower < out.upper) {
        Coloring c;
        const auto status = k_coloring(g, out.upper - 1, c, budget, out.clique);
        if (status == SearchStatus::Found) {
            out.witness = c;
            --out.upper;
            // the witness might use fewer colors than asked for
            std::size_t used = 0;
            for (Vertex x : c.colors) used = std::max<std::size_t>(used, x + 1);
            out.witness.k = out.upper = std::max(used, out.lower);
        } else if (status == SearchStatus::Impossible) {
            out.lower = out.upper;
        } else {
            return out;
        }
    }
    out.exact = true;
    if (!is_proper_coloring(g, out.witness)) throw InternalError("chromatic_number produced an improper coloring");
    return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// Some homomorphism G -> H, found by backtracking with forward checking
/// (smallest remaining domain first). Throws BudgetExceeded past `node_limit`.
inline std::optional<VertexMap> hom_exists(const Graph& g, const Graph& h, std::uint64_t node_limit = 100'000'000) {
    const std::size_t n = g.size();
    if (n == 0) return VertexMap(h.size(), {});
    if (h.empty()) return std::nullopt;
    std::vector<Bitset> domain(n, Bitset(h.size()));
    Bitset looped(h.size());
    for (Vertex c = 0; c < h.size(); ++c)
        if (h.has_loop(c)) looped.set(c);
    for (Vertex v = 0; v < n; ++v) {
        domain[v].set();
        if (g.has_loop(v)) domain[v] &= looped;
        if (domain[v].none()) return std::nullopt;
    }
    std::vector<Vertex> value(n, 0);
    std::vector<char> assigned(n, 0);
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
        if (depth == n) return true;
        if (++nodes > node_limit) throw BudgetExceeded("homomorphism search exceeded its node budget", nodes);
        Vertex v = 0;
        std::size_t best = SIZE_MAX;
        for (Vertex u = 0; u < n; ++u) {
            if (assigned[u]) continue;
            const auto size = domain[u].count();
            if (size < best || (size == best && g.degree(u) > g.degree(v))) {
                best = size;
                v = u;
            }
        }
        assigned[v] = 1;
        for (auto c = domain[v].find_first(); c != Bitset::npos; c = domain[v].find_next(c)) {
            std::vector<std::pair<Vertex, Bitset>> saved;
            bool wiped = false;
            for_each_bit(g.row(v), [&](Vertex u) {
                if (assigned[u] || wiped) return;
                saved.emplace_back(u, domain[u]);
                domain[u] &= h.row(static_cast<Vertex>(c));
                if (domain[u].none()) wiped = true;
            });
            value[v] = static_cast<Vertex>(c);
            if (!wiped && search(depth + 1)) return true;
            for (auto& [u, d] : saved) domain[u] = std::move(d);
        }
        assigned[v] = 0;
        return false;
    };
    if (!search(0)) return std::nullopt;
    VertexMap f(h.size(), value);
    if (!is_homomorphism(g, h, f)) throw InternalError("hom_exists produced a non-homomorphism");
    return f;
}

}  // namespace foldhom
