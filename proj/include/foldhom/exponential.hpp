#pragma once

// Exponential graphs H^G. The vertices are all maps V(G) -> V(H); f ~ f'
// iff every edge v ~ v' of G has f(v) ~ f'(v') in H.
//
// For fixed f the admissible values of a neighbor at y are independent:
//   allowed_f(y) = { c in V(H) : f(x) ~ c for every x ~ y in G },
// so N(f) is the product of the allowed_f(y). Everything here works off
// that product form; nothing enumerates pairs of maps.

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

inline constexpr std::uint64_t kDefaultVertexBudget = 300'000;
/// Dense adjacency for n vertices costs n^2 bits; cap that at 1 GiB.
inline constexpr std::uint64_t kDefaultDenseBitsBudget = std::uint64_t{1} << 33;

struct ExponentialOptions {
    std::uint64_t vertex_budget = kDefaultVertexBudget;
    std::uint64_t dense_bits_budget = kDefaultDenseBitsBudget;
};

/// base^exp, or nullopt on overflow past `cap`.
inline std::optional<std::uint64_t> checked_power(std::uint64_t base, std::size_t exp,
                                                  std::uint64_t cap = std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && out > cap / base) return std::nullopt;
        out *= base;
    }
    return out;
}

class ImplicitExponential {
  public:
    /// The exponential graph `target`^`base`.
    ImplicitExponential(Graph target, Graph base) : target_(std::move(target)), base_(std::move(base)) {}

    const Graph& target() const noexcept { return target_; }
    const Graph& base() const noexcept { return base_; }

    /// |V(H)|^|V(G)|, or nullopt if it does not fit in 64 bits.
    std::optional<std::uint64_t> vertex_count() const { return checked_power(target_.size(), base_.size()); }

    /// Codes are base-|V(H)| integers with base vertex 0 as the most
    /// significant digit, so code order is lexicographic order of maps.
    std::uint64_t encode(const VertexMap& f) const {
        std::uint64_t code = 0;
        for (Vertex v = 0; v < base_.size(); ++v) code = code * target_.size() + f[v];
        return code;
    }

    VertexMap decode(std::uint64_t code) const {
        std::vector<Vertex> values(base_.size());
        for (std::size_t i = base_.size(); i-- > 0;) {
            values[i] = static_cast<Vertex>(code % target_.size());
            code /= target_.size();
        }
        return VertexMap(target_.size(), std::move(values));
    }

    std::string label(const VertexMap& f) const {
        std::string out = "[";
        for (Vertex v = 0; v < base_.size(); ++v) {
            if (v) out += ',';
            out += target_.label(f[v]);
        }
        return out + "]";
    }

    bool adjacent(const VertexMap& f, const VertexMap& g) const {
        for (Vertex u = 0; u < base_.size(); ++u) {
            for (auto v = base_.row(u).find_first(); v != Bitset::npos; v = base_.row(u).find_next(v)) {
                if (!target_.adjacent(f[u], g[v])) return false;
            }
        }
        return true;
    }

    /// allowed_f(y) for every base vertex y.
    std::vector<Bitset> allowed(const VertexMap& f) const {
        std::vector<Bitset> out(base_.size(), Bitset(target_.size()));
        for (Vertex y = 0; y < base_.size(); ++y) {
            out[y].set();
            for_each_bit(base_.row(y), [&](Vertex x) { out[y] &= target_.row(f[x]); });
        }
        return out;
    }

    /// |N(f)|, saturating at uint64 max.
    std::uint64_t neighbor_count(const VertexMap& f) const {
        std::uint64_t count = 1;
        for (const auto& a : allowed(f)) {
            const auto c = a.count();
            if (c == 0) return 0;
            if (count > std::numeric_limits<std::uint64_t>::max() / c) return std::numeric_limits<std::uint64_t>::max();
            count *= c;
        }
        return count;
    }

    /// Calls `fn(g)` for every g ~ f in lexicographic order. `fn` may return
    /// false to stop early; the return value reports whether it ran to the end.
    bool for_each_neighbor(const VertexMap& f, const std::function<bool(const VertexMap&)>& fn) const {
        const auto sets = allowed(f);
        std::vector<std::vector<Vertex>> choices(sets.size());
        for (std::size_t y = 0; y < sets.size(); ++y) {
            for_each_bit(sets[y], [&](Vertex c) { choices[y].push_back(c); });
            if (choices[y].empty()) return true;
        }
        VertexMap g(target_.size(), std::vector<Vertex>(base_.size(), 0));
        std::vector<std::size_t> pos(sets.size(), 0);
        for (std::size_t y = 0; y < sets.size(); ++y) g[y] = choices[y][0];
        for (;;) {
            if (!fn(g)) return false;
            std::size_t y = sets.size();
            while (y > 0) {
                --y;
                if (++pos[y] < choices[y].size()) {
                    g[y] = choices[y][pos[y]];
                    break;
                }
                pos[y] = 0;
                g[y] = choices[y][0];
                if (y == 0) return true;
            }
            if (sets.empty()) return true;
        }
    }

  private:
    Graph target_;
    Graph base_;
};

/// Materializes H^G with one vertex per map, labelled "[h(v0),h(v1),...]".
/// A loop sits at f exactly when f is a homomorphism G -> H.
inline Graph exponential_graph(const Graph& h, const Graph& g, const ExponentialOptions& opts = {}) {
    ImplicitExponential space(h, g);
    const auto count = checked_power(h.size(), g.size(), opts.vertex_budget);
    if (!count || *count > opts.vertex_budget) {
        const auto exact = space.vertex_count();
        throw BudgetExceeded("exponential graph needs " +
                                 (exact ? std::to_string(*exact) : std::string("more than 2^64")) +
                                 " vertices, over the budget of " + std::to_string(opts.vertex_budget),
                             exact.value_or(std::numeric_limits<std::uint64_t>::max()));
    }
    const std::uint64_t n = *count;
    if (n != 0 && n > opts.dense_bits_budget / n) {
        throw BudgetExceeded("exponential graph with " + std::to_string(n) +
                                 " vertices exceeds the dense adjacency budget",
                             n);
    }

    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t code = 0; code < n; ++code) labels.push_back(space.label(space.decode(code)));
    Graph out(std::move(labels));
    for (std::uint64_t code = 0; code < n; ++code) {
        const VertexMap f = space.decode(code);
        space.for_each_neighbor(f, [&](const VertexMap& nb) {
            out.add_edge(static_cast<Vertex>(code), static_cast<Vertex>(space.encode(nb)));
            return true;
        });
    }
    return out;
}

}  // namespace foldhom
