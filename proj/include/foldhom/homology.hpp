#pragma once

// Reduced integral homology of a finite simplicial complex.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "foldhom/complex.hpp"
#include "foldhom/errors.hpp"
#include "foldhom/fold.hpp"
#include "foldhom/snf.hpp"

namespace foldhom {

inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

/// All faces of one dimension, flattened: face i is
/// data[i*width, (i+1)*width), rows sorted lexicographically.
struct FaceList {
    std::size_t width = 0;
    std::vector<Vertex> data;

    std::size_t size() const noexcept { return width ? data.size() / width : 0; }
    const Vertex* face(std::size_t i) const noexcept { return data.data() + i * width; }

    std::size_t find(const Vertex* key) const {
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (std::lexicographical_compare(face(mid), face(mid) + width, key, key + width))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == size() || !std::equal(key, key + width, face(lo))) throw InternalError("face lookup failed");
        return lo;
    }
};

namespace detail {

inline void dedupe(FaceList& l) {
    std::vector<std::uint32_t> order(l.size());
    std::iota(order.begin(), order.end(), 0u);
    auto less = [&](auto a, auto b) {
        return std::lexicographical_compare(l.face(a), l.face(a) + l.width, l.face(b), l.face(b) + l.width);
    };
    std::sort(order.begin(), order.end(), less);
    std::vector<Vertex> out;
    out.reserve(l.data.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i && std::equal(l.face(order[i]), l.face(order[i]) + l.width, l.face(order[i - 1]))) continue;
        out.insert(out.end(), l.face(order[i]), l.face(order[i]) + l.width);
    }
    l.data = std::move(out);
}

}  // namespace detail

/// faces[d] holds the d-simplices. Throws BudgetExceeded when the distinct
/// face count, or the raw work of listing subsets of facets, passes the budget.
inline std::vector<FaceList> enumerate_faces(const SimplicialComplex& k, std::size_t budget = kDefaultFaceBudget) {
    const int dim = k.dimension();
    std::vector<FaceList> faces(static_cast<std::size_t>(dim + 1));
    for (int d = 0; d <= dim; ++d) faces[d].width = static_cast<std::size_t>(d + 1);
    const std::size_t work_cap = budget * 16;
    std::size_t work = 0;
    for (const auto& f : k.facets()) {
        const std::size_t s = f.size();
        if (s >= 40 || ((std::uint64_t{1} << s) - 1) > budget)
            throw BudgetExceeded("a facet has too many faces", s >= 40 ? SIZE_MAX : (std::size_t{1} << s) - 1);
        work += (std::size_t{1} << s) - 1;
        if (work > work_cap) throw BudgetExceeded("face enumeration work", work);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << s); ++mask) {
            auto& list = faces[static_cast<std::size_t>(__builtin_popcountll(mask)) - 1].data;
            for (std::size_t i = 0; i < s; ++i)
                if (mask >> i & 1u) list.push_back(f[i]);
        }
        // dedupe once the raw lists get big
        std::size_t raw = 0;
        for (const auto& l : faces) raw += l.size();
        if (raw > 4 * budget + 1'000'000) {
            std::size_t distinct = 0;
            for (auto& l : faces) distinct += (detail::dedupe(l), l.size());
            if (distinct > budget) throw BudgetExceeded("complex has too many faces", distinct);
        }
    }
    std::size_t distinct = 0;
    for (auto& l : faces) {
        detail::dedupe(l);
        distinct += l.size();
    }
    if (distinct > budget) throw BudgetExceeded("complex has too many faces", distinct);
    return faces;
}

/// boundary[d] : C_d -> C_{d-1} for d = 0..dim, where boundary[0] is the
/// augmentation C_0 -> Z (a single row of ones).
inline std::vector<SparseMatrix> boundary_matrices(const std::vector<FaceList>& faces) {
    std::vector<SparseMatrix> out;
    if (faces.empty()) return out;
    SparseMatrix aug(1, faces[0].size());
    for (std::size_t j = 0; j < faces[0].size(); ++j) aug.columns[j].emplace_back(0, 1);
    out.push_back(std::move(aug));
    std::vector<Vertex> key;
    for (std::size_t d = 1; d < faces.size(); ++d) {
        SparseMatrix m(faces[d - 1].size(), faces[d].size());
        key.resize(d);
        for (std::size_t j = 0; j < faces[d].size(); ++j) {
            const Vertex* f = faces[d].face(j);
            auto& col = m.columns[j];
            for (std::size_t i = 0; i <= d; ++i) {
                std::copy(f, f + i, key.begin());
                std::copy(f + i + 1, f + d + 1, key.begin() + static_cast<std::ptrdiff_t>(i));
                col.emplace_back(static_cast<std::uint32_t>(faces[d - 1].find(key.data())), i % 2 ? -1 : 1);
            }
            std::sort(col.begin(), col.end());
        }
        out.push_back(std::move(m));
    }
    return out;
}

struct HomologyGroup {
    int dim = 0;
    std::size_t rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1

    bool trivial() const noexcept { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup&) const = default;
};

/// Reduced homology in every dimension 0..dim K. The empty complex has a
/// single group Z in dimension -1.
struct HomologyProfile {
    std::vector<HomologyGroup> groups;
    std::vector<std::size_t> face_counts;  // per dimension

    bool operator==(const HomologyProfile& o) const { return groups == o.groups; }

    std::vector<HomologyGroup> nontrivial() const {
        std::vector<HomologyGroup> out;
        for (const auto& g : groups)
            if (!g.trivial()) out.push_back(g);
        return out;
    }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t d = 0; d < face_counts.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long long>(face_counts[d]);
        return chi;
    }

    /// sum (-1)^d rank H~_d, which must equal chi - 1
    long long reduced_euler_from_ranks() const {
        long long chi = 0;
        for (const auto& g : groups) chi += (((g.dim % 2) + 2) % 2 ? -1 : 1) * static_cast<long long>(g.rank);
        return chi;
    }

    std::string to_string() const {
        std::string out;
        for (const auto& g : nontrivial()) {
            if (!out.empty()) out += ", ";
            out += "H" + std::to_string(g.dim) + "=";
            std::string term;
            if (g.rank) term = g.rank == 1 ? "Z" : "Z^" + std::to_string(g.rank);
            for (auto t : g.torsion) term += (term.empty() ? "" : "+") + ("Z/" + std::to_string(t));
            out += term;
        }
        return out.empty() ? "acyclic" : out;
    }
};

/// Same nontrivial groups, ignoring trailing zero dimensions.
inline bool same_homology(const HomologyProfile& a, const HomologyProfile& b) { return a.nontrivial() == b.nontrivial(); }

/// Homology of a sphere S^d: Z in dimension d, nothing else.
inline bool is_sphere_profile(const HomologyProfile& p, int d) {
    const auto nt = p.nontrivial();
    return nt.size() == 1 && nt[0].dim == d && nt[0].rank == 1 && nt[0].torsion.empty();
}

/// H~_k = 0 for all k <= d (d = -1 means nonempty).
inline bool is_homologically_connected(const HomologyProfile& p, int d) {
    for (const auto& g : p.nontrivial())
        if (g.dim <= d) return false;
    return true;
}

inline HomologyProfile reduced_homology(const SimplicialComplex& k, std::size_t face_budget = kDefaultFaceBudget) {
    HomologyProfile p;
    if (k.empty()) {
        p.groups.push_back({-1, 1, {}});
        return p;
    }
    const auto faces = enumerate_faces(k, face_budget);
    const auto boundary = boundary_matrices(faces);
    for (const auto& f : faces) p.face_counts.push_back(f.size());
    std::vector<SmithResult> snf;
    snf.reserve(boundary.size());
    for (const auto& b : boundary) snf.push_back(smith_normal_form(b));
    for (std::size_t d = 0; d < faces.size(); ++d) {
        HomologyGroup g;
        g.dim = static_cast<int>(d);
        const std::size_t below = snf[d].rank;
        const std::size_t above = d + 1 < snf.size() ? snf[d + 1].rank : 0;
        if (faces[d].size() < below + above) throw InternalError("negative Betti number");
        g.rank = faces[d].size() - below - above;
        if (d + 1 < snf.size()) {
            for (const auto& f : snf[d + 1].factors) {
                if (f <= 1) continue;
                if (f > BigInt(INT64_MAX)) throw InternalError("torsion coefficient exceeds int64");
                g.torsion.push_back(static_cast<std::int64_t>(f));
            }
        }
        p.groups.push_back(std::move(g));
    }
    return p;
}

struct NeighborhoodHomology {
    HomologyProfile profile;
    bool folded_first = false;
    std::size_t complex_vertices = 0;  // ground set size of the complex actually used
};

/// H~(N(G)). Falls back to N(fold_core(G)) when N(G) is over the face budget;
/// folds preserve the homotopy type of the neighborhood complex.
inline NeighborhoodHomology neighborhood_homology(const Graph& g, std::size_t face_budget = kDefaultFaceBudget) {
    NeighborhoodHomology out;
    try {
        const auto k = neighborhood_complex(g);
        out.complex_vertices = k.ground().size();
        out.profile = reduced_homology(k, face_budget);
        return out;
    } catch (const BudgetExceeded&) {
    }
    const auto core = fold_core(g).core;
    const auto k = neighborhood_complex(core);
    out.folded_first = true;
    out.complex_vertices = k.ground().size();
    out.profile = reduced_homology(k, face_budget);
    return out;
}

}  // namespace foldhom
