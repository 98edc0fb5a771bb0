#pragma once

// Folded exponential graphs, built directly as predicate families over a
// levelled base instead of by folding the full exponential graph.
//
//   single:  K_m^{T_A^r} folds onto T1 (every level block constant or a
//            homomorphism T -> K_m); T2 keeps only all-constant blocks and
//            is isomorphic to K_m^{L_r(A)}.
//   double:  K_m^{M(M(K_n))} folds onto G (blocks f_{p,q} constant or
//            homomorphisms), then onto G1 (conditions A and B); G2 drops the
//            isolated sets U1, U2, U3. AllConstant keeps constant blocks only
//            and is isomorphic to K_m^{M(L_2({0}))}.

#include <memory>
#include <optional>
#include <string>

#include "foldhom/coloring.hpp"
#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"
#include "foldhom/leveled.hpp"
#include "foldhom/perfect.hpp"

namespace foldhom {

// ---------------------------------------------------------------------------
// single

/// Reason the single construction does not apply, or nullopt.
inline std::optional<std::string> single_precondition_failure(std::size_t m, const Graph& t, const PathSpec& path) {
    if (t.empty() || !t.is_simple()) return "T must be a nonempty simple graph";
    if (!is_connected(t)) return "T must be connected";
    if (t.edge_count() == 0) return "T must have an edge";
    if (auto w = property_P_violation(t)) {
        return "T violates property P at (" + t.label((*w)[0]) + "," + t.label((*w)[1]) + "," + t.label((*w)[2]) + "," +
               t.label((*w)[3]) + ")";
    }
    for (int x : path.loops)
        if (x >= path.length) return "loop set must lie in {0..r-1}";
    if (m < 2) return "need m >= 2";
    const auto chi = chromatic_number(t);
    if (!chi.exact) return "chromatic number of T not determined within budget";
    if (m > chi.value()) return "need m <= chi(T) = " + std::to_string(chi.value());
    return std::nullopt;
}

inline std::shared_ptr<const LeveledSpace> single_space(std::size_t m, const Graph& t, const PathSpec& path) {
    return std::make_shared<const LeveledSpace>(LeveledBase::single(t).cone(path), BlockSet::ConstOrHom, m);
}

inline bool all_blocks_constant(const LeveledSpace& s, const LeveledMap& f) {
    for (auto b : f.blocks)
        if (!s.table()[b].constant) return false;
    return true;
}

/// T1, or T2 when `prune` is set. Throws PreconditionError when the
/// construction does not apply.
inline LeveledFamily folded_exponential_single(std::size_t m, const Graph& t, const PathSpec& path, bool prune) {
    if (auto why = single_precondition_failure(m, t, path)) throw PreconditionError(*why);
    auto space = single_space(m, t, path);
    if (!prune) return LeveledFamily(space, nullptr, "T1");
    const LeveledSpace* s = space.get();
    return LeveledFamily(space, [s](const LeveledMap& f) { return all_blocks_constant(*s, f); }, "T2");
}

/// T2 -> K_m^{L_r(A)}: level l carries the constant of block l, level r the apex.
inline VertexMap single_to_path_map(const LeveledSpace& s, const LeveledMap& f) {
    std::vector<Vertex> values;
    for (auto b : f.blocks) {
        if (!s.table()[b].constant) throw PreconditionError("block is not constant");
        values.push_back(s.table()[b].map[0]);
    }
    values.push_back(f.apex.back());
    return VertexMap(s.colors(), std::move(values));
}

// ---------------------------------------------------------------------------
// double

enum class DoubleStage { G, G1, G2, AllConstant };

inline const char* stage_name(DoubleStage s) {
    switch (s) {
        case DoubleStage::G: return "G";
        case DoubleStage::G1: return "G1";
        case DoubleStage::G2: return "G2";
        case DoubleStage::AllConstant: return "G2-constant";
    }
    return "?";
}

inline std::optional<std::string> double_precondition_failure(std::size_t m, std::size_t n) {
    if (n < 2) return "need n >= 2";
    if (m < 2 || m > n + 1) return "need 2 <= m <= n+1";
    return std::nullopt;
}

inline std::shared_ptr<const LeveledSpace> double_space(std::size_t m, std::size_t n) {
    if (auto why = double_precondition_failure(m, n)) throw PreconditionError(*why);
    return std::make_shared<const LeveledSpace>(double_mycielskian_base(n), BlockSet::ConstOrHom, m);
}

/// Block-level facts about f_{0,0} and f_{1,0} used by the stage predicates.
struct DoubleView {
    const BlockEntry& f00;
    const BlockEntry& f10;
    Vertex w0;

    DoubleView(const LeveledSpace& s, const LeveledMap& f)
        : f00(s.table()[f.blocks[block_index(0, 0)]]), f10(s.table()[f.blocks[block_index(1, 0)]]), w0(f.apex[kW0]) {}

    bool hom00() const { return !f00.constant; }
    bool hom10() const { return !f10.constant; }
    bool same_image() const { return f00.image == f10.image; }
    bool w0_in_im00() const { return (f00.image >> w0 & 1u) != 0; }
    std::size_t differences() const {
        std::size_t d = 0;
        for (std::size_t x = 0; x < f00.map.table.size(); ++x) d += f00.map[x] != f10.map[x];
        return d;
    }
};

// condition (A): equal images force equal blocks
inline bool condition_A(const DoubleView& v) { return !v.same_image() || v.f00.map == v.f10.map; }

// condition (B): homomorphisms with different images differ at one vertex
inline bool condition_B(const DoubleView& v) {
    return !(v.hom00() && v.hom10() && !v.same_image()) || v.differences() == 1;
}

inline bool in_U1(const DoubleView& v) { return v.hom00() && v.hom10() && v.same_image() && !v.w0_in_im00(); }

inline bool in_U2(const DoubleView& v) {
    return v.hom00() && v.hom10() && !v.same_image() && v.w0_in_im00() && v.differences() == 1;
}

inline bool in_U3(const DoubleView& v) {
    return v.hom00() && !v.hom10() && !(v.f00.image >> v.f10.map[0] & 1u) && v.w0_in_im00();
}

inline LeveledFamily double_family(std::shared_ptr<const LeveledSpace> space, DoubleStage stage) {
    const LeveledSpace* s = space.get();
    switch (stage) {
        case DoubleStage::G: return LeveledFamily(space, nullptr, "G");
        case DoubleStage::G1:
            return LeveledFamily(space, [s](const LeveledMap& f) {
                const DoubleView v(*s, f);
                return condition_A(v) && condition_B(v);
            }, "G1");
        case DoubleStage::G2:
            return LeveledFamily(space, [s](const LeveledMap& f) {
                const DoubleView v(*s, f);
                return condition_A(v) && condition_B(v) && !in_U1(v) && !in_U2(v) && !in_U3(v);
            }, "G2");
        case DoubleStage::AllConstant:
            return LeveledFamily(space, [s](const LeveledMap& f) { return all_blocks_constant(*s, f); }, "G2-constant");
    }
    throw InternalError("unknown stage");
}

inline LeveledFamily folded_exponential_double(std::size_t m, std::size_t n, DoubleStage stage) {
    return double_family(double_space(m, n), stage);
}

/// M(L_2({0})) with the vertex order used by double_to_mycielski_path_map.
inline Graph mycielski_of_looped_path() { return cone_over(path_with_loops(PathSpec(2, {0})), PathSpec(2, {0})); }

/// AllConstant -> K_m^{M(L_2({0}))}: block (p,q) goes to (p,q), w_q to (*,q)
/// in the inner cone, w2 to the outer apex.
inline VertexMap double_to_mycielski_path_map(const LeveledSpace& s, const LeveledMap& f) {
    std::vector<Vertex> values(7);
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            const auto& e = s.table()[f.blocks[block_index(p, q)]];
            if (!e.constant) throw PreconditionError("block is not constant");
            values[static_cast<std::size_t>(2 * p + q)] = e.map[0];
        }
    values[4] = f.apex[kW0];
    values[5] = f.apex[kW1];
    values[6] = f.apex[kW2];
    return VertexMap(s.colors(), std::move(values));
}

}  // namespace foldhom
