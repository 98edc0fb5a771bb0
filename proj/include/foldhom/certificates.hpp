#pragma once

// Constructive fold certificates for exponential graphs K_m^G, and checks
// that N(f) ⊆ N(f~) without building K_m^G.
//
// Neighbors of f form a product: g ~ f iff g(y) ∈ allowed_f(y) for every y.
// So N(f) ⊆ N(f~) iff some allowed_f(y) is empty or allowed_f(y) ⊆
// allowed_f~(y) for all y. Small neighborhoods are also enumerated and each
// neighbor checked against f~ edge by edge, which does not rely on that.

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/exponential.hpp"
#include "foldhom/folded.hpp"
#include "foldhom/graph.hpp"
#include "foldhom/leveled.hpp"
#include "foldhom/perfect.hpp"

namespace foldhom {

inline constexpr std::uint64_t kEnumerateNeighborLimit = 4096;

enum class CertificateRoute { Enumerated, ProductCriterion };

inline const char* route_name(CertificateRoute r) {
    return r == CertificateRoute::Enumerated ? "enumerated" : "product-criterion";
}

struct CertificateCheck {
    bool holds = false;
    CertificateRoute route = CertificateRoute::ProductCriterion;
    std::uint64_t neighbors = 0;  // |N(f)|, saturating
};

namespace detail {

inline bool product_contained(const std::vector<Bitset>& a, const std::vector<Bitset>& b) {
    for (const auto& s : a)
        if (s.none()) return true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_subset_of(b[i])) return false;
    return true;
}

inline std::uint64_t product_size(const std::vector<Bitset>& sets) {
    std::uint64_t n = 1;
    for (const auto& s : sets) {
        const auto c = s.count();
        if (c == 0) return 0;
        if (n > UINT64_MAX / c) return UINT64_MAX;
        n *= c;
    }
    return n;
}

}  // namespace detail

/// N(f) ⊆ N(f_tilde) in big = H^G.
inline CertificateCheck verify_fold_certificate(const ImplicitExponential& big, const VertexMap& f, const VertexMap& f_tilde,
                                                std::uint64_t enumerate_limit = kEnumerateNeighborLimit) {
    const auto n = big.base().size();
    if (f.table.size() != n || f_tilde.table.size() != n) throw PreconditionError("maps do not match the base graph");
    CertificateCheck out;
    const auto a = big.allowed(f);
    out.neighbors = detail::product_size(a);
    if (out.neighbors <= enumerate_limit) {
        out.route = CertificateRoute::Enumerated;
        out.holds = big.for_each_neighbor(f, [&](const VertexMap& g) { return big.adjacent(f_tilde, g); });
    } else {
        out.route = CertificateRoute::ProductCriterion;
        out.holds = detail::product_contained(a, big.allowed(f_tilde));
    }
    return out;
}

/// Same containment inside a LeveledSpace (neighbors restricted to the space).
inline CertificateCheck verify_fold_certificate(const LeveledSpace& space, const LeveledMap& f, const LeveledMap& f_tilde,
                                                std::uint64_t enumerate_limit = kEnumerateNeighborLimit) {
    CertificateCheck out;
    const auto a = space.allowed(f);
    out.neighbors = detail::product_size(a);
    if (out.neighbors <= enumerate_limit) {
        out.route = CertificateRoute::Enumerated;
        out.holds = space.for_each_neighbor(f, [&](const LeveledMap& g) { return space.adjacent(f_tilde, g); });
    } else {
        out.route = CertificateRoute::ProductCriterion;
        out.holds = detail::product_contained(a, space.allowed(f_tilde));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Levelled fold steps: f((v,b)) = f((w,b)) = a with v ~ w in T lets every
// (x,b), x ∈ N_T(v), be recolored a.

struct FoldChain {
    std::vector<VertexMap> maps;  // f^1, ..., f^k; the last has block b constant
    std::vector<Vertex> centers;  // the pattern vertex v used at each step
};

/// Repeats the basic step from the edge (v,w) in BFS order over T until block
/// b of the base is constant. T must be connected.
inline FoldChain level_fold_chain(const LeveledBase& base, const VertexMap& f, std::size_t b, Vertex v, Vertex w) {
    const Graph& t = base.pattern();
    if (b >= base.blocks()) throw PreconditionError("block out of range");
    if (v >= t.size() || w >= t.size() || !t.adjacent(v, w)) throw PreconditionError("(v,w) is not an edge of T");
    if (!is_connected(t)) throw PreconditionError("T must be connected");
    const Vertex a = f[base.block_vertex(b, v)];
    if (f[base.block_vertex(b, w)] != a) throw PreconditionError("f(v) != f(w)");

    FoldChain out;
    VertexMap cur = f;
    std::vector<char> seen(t.size(), 0);
    std::deque<Vertex> queue{v};
    seen[v] = 1;
    // every queued vertex already has value a and a neighbor with value a
    while (!queue.empty()) {
        const Vertex u = queue.front();
        queue.pop_front();
        bool changed = false;
        for_each_bit(t.row(u), [&](Vertex x) {
            auto& slot = cur[base.block_vertex(b, x)];
            if (slot != a) {
                slot = a;
                changed = true;
            }
            if (!seen[x]) {
                seen[x] = 1;
                queue.push_back(x);
            }
        });
        if (changed) {
            out.maps.push_back(cur);
            out.centers.push_back(u);
        }
    }
    return out;
}

/// Constant map ≡ f(v) when f(v) = f(w) for the edge (v,w) of T. Checks
/// connectivity and property P.
inline VertexMap fold2_witness(const VertexMap& f, const Graph& t, std::size_t m, Vertex v, Vertex w) {
    if (f.table.size() != t.size() || f.codomain_size != m) throw PreconditionError("f is not a map V(T) -> [m]");
    if (!is_connected(t)) throw PreconditionError("T must be connected");
    if (!property_P(t)) throw PreconditionError("T must satisfy property P");
    if (!t.adjacent(v, w)) throw PreconditionError("(v,w) is not an edge of T");
    if (f[v] != f[w]) throw PreconditionError("f(v) != f(w)");
    return VertexMap(m, std::vector<Vertex>(t.size(), f[v]));
}

/// Smallest edge (v,w), v < w, of T on which block b of f repeats a color.
inline std::optional<std::pair<Vertex, Vertex>> repeated_edge(const LeveledBase& base, const VertexMap& f, std::size_t b) {
    const Graph& t = base.pattern();
    for (const auto& [x, y] : t.edges())
        if (f[base.block_vertex(b, x)] == f[base.block_vertex(b, y)]) return std::pair{x, y};
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// M(M(K_n)) certificates

/// If block (p,q) of f takes the same value on i0 != i1, the map with that
/// block made constant. nullopt when the block is injective.
inline std::optional<VertexMap> folddouble_witness(const LeveledBase& base, const VertexMap& f, int p, int q) {
    const std::size_t b = block_index(p, q);
    const std::size_t n = base.pattern().size();
    for (Vertex i0 = 0; i0 < n; ++i0)
        for (Vertex i1 = i0 + 1; i1 < n; ++i1) {
            const Vertex c = f[base.block_vertex(b, i0)];
            if (c != f[base.block_vertex(b, i1)]) continue;
            VertexMap out = f;
            for (Vertex x = 0; x < n; ++x) out[base.block_vertex(b, x)] = c;
            return out;
        }
    return std::nullopt;
}

/// For f in G with f00, f10 homomorphisms and f00(i0) = f10(j0), i0 != j0:
/// block (1,0) made constant f00(i0). Smallest (i0, j0) first. nullopt when
/// there is no such pair (then f already lies in G1).
inline std::optional<LeveledMap> generalfold_witness(const LeveledSpace& space, const LeveledMap& f) {
    const DoubleView v(space, f);
    if (!v.hom00() || !v.hom10()) return std::nullopt;
    const std::size_t n = v.f00.map.table.size();
    for (Vertex i0 = 0; i0 < n; ++i0)
        for (Vertex j0 = 0; j0 < n; ++j0) {
            if (i0 == j0 || v.f00.map[i0] != v.f10.map[j0]) continue;
            LeveledMap out = f;
            out.blocks[block_index(1, 0)] = static_cast<std::uint32_t>(space.table().constant(v.f00.map[i0]));
            return out;
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Retractions onto the folded graphs. Each is a composite of folds, hence a
// homomorphism from the full exponential graph onto the folded one.

/// K_m^{T_A^r} -> T1: every block that is neither constant nor a
/// homomorphism is folded constant along its smallest repeated edge.
inline LeveledMap single_retraction(const LeveledSpace& space, const VertexMap& f) {
    const auto& base = space.base();
    VertexMap cur = f;
    for (std::size_t b = 0; b < base.blocks(); ++b) {
        if (auto e = repeated_edge(base, cur, b)) {
            const Vertex a = cur[base.block_vertex(b, e->first)];
            for (Vertex x = 0; x < base.pattern().size(); ++x) cur[base.block_vertex(b, x)] = a;
        }
    }
    auto out = space.from_vertex_map(cur);
    if (!out) throw InternalError("single retraction left a block outside the table");
    return *out;
}

/// K_m^{M(M(K_n))} -> G1: folddouble on every non-injective block, then
/// generalfold once.
inline LeveledMap double_retraction(const LeveledSpace& space, const VertexMap& f) {
    VertexMap cur = f;
    for (int q = 0; q < 2; ++q)
        for (int p = 0; p < 2; ++p)
            if (auto g = folddouble_witness(space.base(), cur, p, q)) cur = std::move(*g);
    auto in_g = space.from_vertex_map(cur);
    if (!in_g) throw InternalError("double retraction left a block outside the table");
    if (auto g1 = generalfold_witness(space, *in_g)) return *g1;
    return *in_g;
}

}  // namespace foldhom
