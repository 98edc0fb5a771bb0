#pragma once

// Finite undirected graphs with optional loops, stored as bit-packed
// adjacency rows, plus the named constructions built on top of them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "foldhom/errors.hpp"

namespace foldhom {

using Vertex = std::uint32_t;
using Bitset = boost::dynamic_bitset<std::uint64_t>;

/// Calls `fn(i)` for every set bit of `bits`, in increasing order.
template <class Fn>
inline void for_each_bit(const Bitset& bits, Fn&& fn) {
    for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
        fn(static_cast<Vertex>(i));
    }
}

class Graph {
  public:
    Graph() = default;

    explicit Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
        index_.reserve(labels_.size());
        for (Vertex v = 0; v < labels_.size(); ++v) {
            if (!index_.emplace(labels_[v], v).second) {
                throw PreconditionError("duplicate vertex label '" + labels_[v] + "'");
            }
        }
        rows_.assign(labels_.size(), Bitset(labels_.size()));
    }

    /// Vertices labelled "1".."n" with no edges.
    static Graph numbered(std::size_t n, int first = 1) {
        std::vector<std::string> labels;
        labels.reserve(n);
        for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(first + static_cast<int>(i)));
        return Graph(std::move(labels));
    }

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::string& label(Vertex v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::optional<Vertex> find(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Vertex at(const std::string& label) const {
        auto v = find(label);
        if (!v) throw PreconditionError("unknown vertex label '" + label + "'");
        return *v;
    }

    void add_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void remove_edge(Vertex u, Vertex v) {
        check(u);
        check(v);
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

    void add_loop(Vertex v) { add_edge(v, v); }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    bool has_loop(Vertex v) const { return rows_[v].test(v); }

    bool is_simple() const {
        for (Vertex v = 0; v < size(); ++v) {
            if (has_loop(v)) return false;
        }
        return true;
    }

    /// Neighborhood row; bit `v` is set in `row(v)` iff `v` carries a loop.
    const Bitset& row(Vertex v) const { return rows_.at(v); }

    std::size_t degree(Vertex v) const { return rows_[v].count(); }

    std::vector<Vertex> neighbors(Vertex v) const {
        std::vector<Vertex> out;
        out.reserve(degree(v));
        for_each_bit(rows_[v], [&](Vertex w) { out.push_back(w); });
        return out;
    }

    /// Undirected edges, loops counted once.
    std::size_t edge_count() const {
        std::size_t twice = 0, loops = 0;
        for (Vertex v = 0; v < size(); ++v) {
            twice += rows_[v].count();
            loops += has_loop(v) ? 1 : 0;
        }
        return (twice - loops) / 2 + loops;
    }

    std::size_t loop_count() const {
        std::size_t loops = 0;
        for (Vertex v = 0; v < size(); ++v) loops += has_loop(v) ? 1 : 0;
        return loops;
    }

    /// Edges as pairs (u, v) with u <= v.
    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < size(); ++u) {
            for_each_bit(rows_[u], [&](Vertex v) {
                if (v >= u) out.emplace_back(u, v);
            });
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.labels_ == b.labels_ && a.rows_ == b.rows_;
    }

  private:
    void check(Vertex v) const {
        if (v >= size()) throw PreconditionError("vertex index out of range");
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Bitset> rows_;
};

/// Induced subgraph on `keep` (in the given order), labels preserved.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (Vertex v : keep) labels.push_back(g.label(v));
    Graph h(std::move(labels));
    for (Vertex i = 0; i < keep.size(); ++i) {
        for (Vertex j = i; j < keep.size(); ++j) {
            if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
        }
    }
    return h;
}

/// Loopless complement on the same labels.
inline Graph complement(const Graph& g) {
    Graph c(g.labels());
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v = u + 1; v < g.size(); ++v) {
            if (!g.adjacent(u, v)) c.add_edge(u, v);
        }
    }
    return c;
}

inline bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    Bitset seen(g.size());
    std::vector<Vertex> stack{0};
    seen.set(0);
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for_each_bit(g.row(v), [&](Vertex w) {
            if (!seen.test(w)) {
                seen.set(w);
                stack.push_back(w);
            }
        });
    }
    return seen.all();
}

// ---------------------------------------------------------------------------
// Vertex maps

/// A function from {0..domain_size-1} to {0..codomain_size-1}.
struct VertexMap {
    std::size_t domain_size = 0;
    std::size_t codomain_size = 0;
    std::vector<Vertex> table;

    VertexMap() = default;
    VertexMap(std::size_t codomain, std::vector<Vertex> values)
        : domain_size(values.size()), codomain_size(codomain), table(std::move(values)) {
        for (Vertex x : table) {
            if (x >= codomain_size) throw PreconditionError("vertex map entry out of codomain range");
        }
    }

    Vertex operator()(Vertex v) const { return table.at(v); }
    Vertex& operator[](std::size_t v) { return table[v]; }
    Vertex operator[](std::size_t v) const { return table[v]; }

    bool is_constant() const {
        return std::adjacent_find(table.begin(), table.end(), std::not_equal_to<>()) == table.end();
    }

    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// True iff `f` sends every edge of `g` (loops included) to an edge of `h`.
inline bool is_homomorphism(const Graph& g, const Graph& h, const VertexMap& f) {
    if (f.domain_size != g.size() || f.codomain_size != h.size()) return false;
    for (Vertex u = 0; u < g.size(); ++u) {
        bool ok = true;
        for_each_bit(g.row(u), [&](Vertex v) {
            if (!h.adjacent(f[u], f[v])) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Neighborhoods

inline Bitset neighborhood(const Graph& g, Vertex v) { return g.row(v); }

/// Vertices adjacent to every member of `a`; all of V(G) when `a` is empty.
inline Bitset common_neighborhood(const Graph& g, std::span<const Vertex> a) {
    Bitset out(g.size());
    out.set();
    for (Vertex v : a) out &= g.row(v);
    return out;
}

// ---------------------------------------------------------------------------
// Named constructions

inline Graph complete_graph(std::size_t n) {
    if (n < 1) throw PreconditionError("complete_graph needs n >= 1");
    Graph g = Graph::numbered(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(std::size_t r) {
    if (r < 3) throw PreconditionError("cycle_graph needs r >= 3");
    Graph g = Graph::numbered(r);
    for (Vertex i = 0; i < r; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % r));
    return g;
}

/// The path L_r on {0..r} with loops at the members of `loops`.
struct PathSpec {
    int length = 1;
    std::set<int> loops;

    PathSpec() = default;
    PathSpec(int r, std::set<int> a) : length(r), loops(std::move(a)) {
        if (length < 1) throw PreconditionError("path length must be positive");
        for (int x : loops) {
            if (x < 0 || x > length) throw PreconditionError("loop position outside {0..r}");
        }
    }

    /// Adjacency of levels in the looped path.
    bool levels_adjacent(int i, int j) const {
        return std::abs(i - j) == 1 || (i == j && loops.count(i) > 0);
    }
};

inline Graph path_with_loops(const PathSpec& spec) {
    Graph g = Graph::numbered(static_cast<std::size_t>(spec.length) + 1, 0);
    for (int i = 0; i < spec.length; ++i) g.add_edge(i, i + 1);
    for (int x : spec.loops) g.add_loop(x);
    return g;
}

/// Categorical (tensor) product; vertex (g,h) has index g*|H| + h and label "(gl,hl)".
inline Graph categorical_product(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    labels.reserve(g.size() * h.size());
    for (Vertex a = 0; a < g.size(); ++a)
        for (Vertex b = 0; b < h.size(); ++b) labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
    Graph p(std::move(labels));
    const auto hn = static_cast<Vertex>(h.size());
    for (Vertex a = 0; a < g.size(); ++a) {
        for_each_bit(g.row(a), [&](Vertex a2) {
            for (Vertex b = 0; b < h.size(); ++b) {
                for_each_bit(h.row(b), [&](Vertex b2) { p.add_edge(a * hn + b, a2 * hn + b2); });
            }
        });
    }
    return p;
}

/// Merges every vertex with `level_of[v] == top` into one apex labelled "*".
/// Remaining vertices keep their relative order; the apex is appended last.
inline Graph quotient_top_level(const Graph& p, std::span<const int> level_of, int top) {
    if (level_of.size() != p.size()) throw PreconditionError("level assignment size mismatch");
    std::vector<Vertex> keep;
    Bitset merged(p.size());
    for (Vertex v = 0; v < p.size(); ++v) {
        if (level_of[v] == top) {
            merged.set(v);
        } else {
            keep.push_back(v);
        }
    }
    if (merged.none()) throw PreconditionError("no vertex at the top level");

    std::vector<std::string> labels;
    for (Vertex v : keep) labels.push_back(p.label(v));
    labels.emplace_back("*");
    Graph q(std::move(labels));
    const auto apex = static_cast<Vertex>(keep.size());
    for (Vertex i = 0; i < keep.size(); ++i) {
        for (Vertex j = i; j < keep.size(); ++j) {
            if (p.adjacent(keep[i], keep[j])) q.add_edge(i, j);
        }
        if (p.row(keep[i]).intersects(merged)) q.add_edge(i, apex);
    }
    bool apex_loop = false;
    for_each_bit(merged, [&](Vertex v) { apex_loop = apex_loop || p.row(v).intersects(merged); });
    if (apex_loop) q.add_loop(apex);
    return q;
}

/// (G x L_r(A)) / ~_r.  Requires A within {0..r-1} so the apex stays loopless.
inline Graph cone_over(const Graph& g, const PathSpec& path) {
    for (int x : path.loops) {
        if (x >= path.length) throw PreconditionError("loop set must lie in {0..r-1}");
    }
    Graph prod = categorical_product(g, path_with_loops(path));
    std::vector<int> level(prod.size());
    const auto width = static_cast<std::size_t>(path.length) + 1;
    for (std::size_t v = 0; v < prod.size(); ++v) level[v] = static_cast<int>(v % width);
    Graph q = quotient_top_level(prod, level, path.length);
    if (q.has_loop(static_cast<Vertex>(q.size() - 1))) throw InternalError("apex acquired a loop");
    return q;
}

/// M_r(G) = (G x L_r({0})) / ~_r; M(G) is r = 2.
inline Graph generalized_mycielskian(const Graph& g, int r = 2) {
    if (r < 2) throw PreconditionError("generalized_mycielskian needs r >= 2");
    if (!g.is_simple()) throw PreconditionError("generalized_mycielskian needs a simple graph");
    return cone_over(g, PathSpec(r, {0}));
}

}  // namespace foldhom
