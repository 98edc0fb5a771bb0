#pragma once

// Levelled bases and block-wise maps into K_m.
//
// A LeveledBase describes a graph whose vertices are copies ("blocks") of a
// pattern T plus some apex vertices:
//   (x,b) ~ (y,b')  iff  block_block[b][b'] and x ~ y in T
//   (x,b) ~ apex a  iff  block_apex[b][a]       (T has no isolated vertex)
//   apex a ~ apex a' iff apex_apex[a][a']
// T_A^r is single(T).cone(r, A) and M(M(K_n)) is single(K_n) coned twice
// with (2, {0}). Block (b, l) of a cone gets index b + blocks * l.
//
// A map V(base) -> [m] whose blocks all lie in a BlockTable is a LeveledMap.
// Every adjacency condition in K_m^base pairs one slot of f with one slot of
// g, so the neighbors of f form a product over the slots of g.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "foldhom/errors.hpp"
#include "foldhom/exponential.hpp"
#include "foldhom/graph.hpp"

namespace foldhom {

class LeveledBase {
  public:
    struct Slot {
        bool apex = false;
        std::size_t index = 0;  // block or apex number
        Vertex x = 0;           // pattern vertex (blocks only)
    };

    static LeveledBase single(Graph pattern) {
        if (pattern.empty()) throw PreconditionError("pattern graph is empty");
        if (!pattern.is_simple()) throw PreconditionError("pattern graph must be simple");
        for (Vertex v = 0; v < pattern.size(); ++v) {
            if (pattern.degree(v) == 0) throw PreconditionError("pattern graph has an isolated vertex");
        }
        LeveledBase out;
        out.pattern_ = std::move(pattern);
        out.blocks_ = 1;
        out.apices_ = 0;
        out.block_block_ = {{1}};
        out.block_apex_ = {{}};
        for (Vertex x = 0; x < out.pattern_.size(); ++x) {
            out.slots_.push_back({false, 0, x});
            out.labels_.push_back(out.pattern_.label(x));
        }
        return out;
    }

    /// (B x L_r(A)) / ~_r, laid out exactly like cone_over.
    LeveledBase cone(const PathSpec& path) const {
        for (int x : path.loops) {
            if (x >= path.length) throw PreconditionError("loop set must lie in {0..r-1}");
        }
        const auto r = static_cast<std::size_t>(path.length);
        LeveledBase out;
        out.pattern_ = pattern_;
        out.blocks_ = blocks_ * r;
        out.apices_ = apices_ * r + 1;
        const std::size_t top = apices_ * r;
        out.block_block_.assign(out.blocks_, std::vector<char>(out.blocks_, 0));
        out.block_apex_.assign(out.blocks_, std::vector<char>(out.apices_, 0));
        out.apex_apex_.assign(out.apices_, std::vector<char>(out.apices_, 0));
        auto lv = [&](std::size_t i, std::size_t j) {
            return path.levels_adjacent(static_cast<int>(i), static_cast<int>(j));
        };
        for (std::size_t l = 0; l < r; ++l) {
            for (std::size_t l2 = 0; l2 < r; ++l2) {
                if (!lv(l, l2)) continue;
                for (std::size_t b = 0; b < blocks_; ++b) {
                    for (std::size_t b2 = 0; b2 < blocks_; ++b2)
                        out.block_block_[b + blocks_ * l][b2 + blocks_ * l2] = block_block_[b][b2];
                    for (std::size_t a = 0; a < apices_; ++a)
                        out.block_apex_[b + blocks_ * l][a + apices_ * l2] = block_apex_[b][a];
                }
                for (std::size_t a = 0; a < apices_; ++a)
                    for (std::size_t a2 = 0; a2 < apices_; ++a2)
                        out.apex_apex_[a + apices_ * l][a2 + apices_ * l2] = apex_apex_[a][a2];
            }
        }
        // the new apex sees level r-1 copies of every vertex that had a neighbor
        for (std::size_t b = 0; b < blocks_; ++b) out.block_apex_[b + blocks_ * (r - 1)][top] = block_has_neighbor(b);
        for (std::size_t a = 0; a < apices_; ++a) {
            const char seen = apex_has_neighbor(a);
            out.apex_apex_[a + apices_ * (r - 1)][top] = seen;
            out.apex_apex_[top][a + apices_ * (r - 1)] = seen;
        }

        for (std::size_t v = 0; v < slots_.size(); ++v) {
            for (std::size_t l = 0; l < r; ++l) {
                const Slot& s = slots_[v];
                out.slots_.push_back(s.apex ? Slot{true, s.index + apices_ * l, 0} : Slot{false, s.index + blocks_ * l, s.x});
                out.labels_.push_back("(" + labels_[v] + "," + std::to_string(l) + ")");
            }
        }
        out.slots_.push_back({true, top, 0});
        out.labels_.emplace_back("*");
        return out;
    }

    const Graph& pattern() const noexcept { return pattern_; }
    std::size_t blocks() const noexcept { return blocks_; }
    std::size_t apices() const noexcept { return apices_; }
    std::size_t size() const noexcept { return slots_.size(); }
    const std::vector<Slot>& slots() const noexcept { return slots_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool block_block(std::size_t b, std::size_t b2) const { return block_block_[b][b2] != 0; }
    bool block_apex(std::size_t b, std::size_t a) const { return block_apex_[b][a] != 0; }
    bool apex_apex(std::size_t a, std::size_t a2) const { return apex_apex_[a][a2] != 0; }

    /// Base vertex index of (x, block b).
    Vertex block_vertex(std::size_t b, Vertex x) const { return lookup(false, b, x); }
    Vertex apex_vertex(std::size_t a) const { return lookup(true, a, 0); }

    Graph materialize() const {
        Graph g(labels_);
        for (Vertex u = 0; u < slots_.size(); ++u) {
            for (Vertex v = u; v < slots_.size(); ++v) {
                if (slot_adjacent(slots_[u], slots_[v])) g.add_edge(u, v);
            }
        }
        return g;
    }

  private:
    bool slot_adjacent(const Slot& s, const Slot& t) const {
        if (!s.apex && !t.apex) return block_block_[s.index][t.index] && pattern_.adjacent(s.x, t.x);
        if (!s.apex) return block_apex_[s.index][t.index] != 0;
        if (!t.apex) return block_apex_[t.index][s.index] != 0;
        return apex_apex_[s.index][t.index] != 0;
    }

    char block_has_neighbor(std::size_t b) const {
        for (std::size_t b2 = 0; b2 < blocks_; ++b2)
            if (block_block_[b][b2]) return 1;
        for (std::size_t a = 0; a < apices_; ++a)
            if (block_apex_[b][a]) return 1;
        return 0;
    }

    char apex_has_neighbor(std::size_t a) const {
        for (std::size_t b = 0; b < blocks_; ++b)
            if (block_apex_[b][a]) return 1;
        for (std::size_t a2 = 0; a2 < apices_; ++a2)
            if (apex_apex_[a][a2]) return 1;
        return 0;
    }

    Vertex lookup(bool apex, std::size_t index, Vertex x) const {
        for (Vertex v = 0; v < slots_.size(); ++v) {
            const Slot& s = slots_[v];
            if (s.apex == apex && s.index == index && (apex || s.x == x)) return v;
        }
        throw PreconditionError("no such slot in levelled base");
    }

    Graph pattern_;
    std::size_t blocks_ = 0, apices_ = 0;
    std::vector<std::vector<char>> block_block_, block_apex_, apex_apex_;
    std::vector<Slot> slots_;
    std::vector<std::string> labels_;
};

/// M(M(K_n)) as a levelled base: block p + 2q holds f_{p,q}, apices are
/// w0 = (*,0), w1 = (*,1), w2.
inline LeveledBase double_mycielskian_base(std::size_t n) {
    if (n < 2) throw PreconditionError("double Mycielskian needs n >= 2");
    const PathSpec p(2, {0});
    return LeveledBase::single(complete_graph(n)).cone(p).cone(p);
}

inline constexpr std::size_t block_index(int p, int q) { return static_cast<std::size_t>(p + 2 * q); }
inline constexpr std::size_t kW0 = 0, kW1 = 1, kW2 = 2;

// ---------------------------------------------------------------------------

enum class BlockSet { ConstOrHom, AllMaps };

struct BlockEntry {
    VertexMap map;
    bool constant = false;
    bool hom = false;          // homomorphism T -> K_m
    std::uint64_t image = 0;   // bit c set iff c is a value
};

/// Allowed per-block maps V(T) -> [m] with their pairwise compatibility:
/// compatible(i).test(j) iff b_i(x) != b_j(y) for every edge x ~ y of T.
class BlockTable {
  public:
    BlockTable(Graph pattern, std::size_t m, BlockSet set) : pattern_(std::move(pattern)), m_(m), set_(set) {
        if (m < 1 || m > 64) throw PreconditionError("number of colors must be in 1..64");
        const std::size_t t = pattern_.size();
        if (set == BlockSet::ConstOrHom) {
            for (Vertex c = 0; c < m; ++c) add(VertexMap(m, std::vector<Vertex>(t, c)));
            std::vector<Vertex> values(t, 0);
            enumerate_homs(0, values);
        } else {
            const auto total = checked_power(m, t, 1u << 22);
            if (!total || *total > (1u << 22)) throw BudgetExceeded("block table too large", total.value_or(0));
            for (std::uint64_t code = 0; code < *total; ++code) {
                std::vector<Vertex> values(t);
                std::uint64_t c = code;
                for (std::size_t i = t; i-- > 0;) {
                    values[i] = static_cast<Vertex>(c % m);
                    c /= m;
                }
                add(VertexMap(m, std::move(values)));
            }
        }
        compatible_.assign(entries_.size(), Bitset(entries_.size()));
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            for (std::size_t j = 0; j < entries_.size(); ++j) {
                bool ok = true;
                for (Vertex x = 0; x < t && ok; ++x) {
                    for_each_bit(pattern_.row(x), [&](Vertex y) {
                        if (entries_[i].map[x] == entries_[j].map[y]) ok = false;
                    });
                }
                if (ok) compatible_[i].set(j);
            }
        }
        avoiding_.assign(m, Bitset(entries_.size()));
        for (Vertex c = 0; c < m; ++c)
            for (std::size_t j = 0; j < entries_.size(); ++j)
                if (!(entries_[j].image >> c & 1u)) avoiding_[c].set(j);
    }

    const Graph& pattern() const noexcept { return pattern_; }
    std::size_t colors() const noexcept { return m_; }
    BlockSet set() const noexcept { return set_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const BlockEntry& operator[](std::size_t i) const { return entries_[i]; }

    const Bitset& compatible(std::size_t i) const { return compatible_[i]; }
    /// Entries whose image misses color c.
    const Bitset& avoiding(Vertex c) const { return avoiding_[c]; }

    std::optional<std::size_t> find(const VertexMap& map) const {
        auto it = index_.find(key(map));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::size_t constant(Vertex c) const { return *find(VertexMap(m_, std::vector<Vertex>(pattern_.size(), c))); }

  private:
    static std::string key(const VertexMap& map) {
        return std::string(reinterpret_cast<const char*>(map.table.data()), map.table.size() * sizeof(Vertex));
    }

    void add(VertexMap map) {
        BlockEntry e;
        e.constant = map.is_constant();
        e.hom = true;
        for (const auto& [x, y] : pattern_.edges()) e.hom = e.hom && map[x] != map[y];
        for (Vertex v : map.table) e.image |= std::uint64_t{1} << v;
        e.map = std::move(map);
        index_.emplace(key(e.map), entries_.size());
        entries_.push_back(std::move(e));
    }

    void enumerate_homs(std::size_t depth, std::vector<Vertex>& values) {
        if (depth == pattern_.size()) {
            VertexMap map(m_, values);
            if (!map.is_constant()) add(std::move(map));
            return;
        }
        for (Vertex c = 0; c < m_; ++c) {
            bool ok = true;
            for (Vertex y = 0; y < depth && ok; ++y) ok = !(pattern_.adjacent(static_cast<Vertex>(depth), y) && values[y] == c);
            if (!ok) continue;
            values[depth] = c;
            enumerate_homs(depth + 1, values);
        }
    }

    Graph pattern_;
    std::size_t m_;
    BlockSet set_;
    std::vector<BlockEntry> entries_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<Bitset> compatible_;
    std::vector<Bitset> avoiding_;
};

// ---------------------------------------------------------------------------

struct LeveledMap {
    std::vector<std::uint32_t> blocks;  // BlockTable entry per block
    std::vector<Vertex> apex;           // color per apex, 0-based

    friend bool operator==(const LeveledMap&, const LeveledMap&) = default;
};

/// K_m^base restricted to maps whose blocks lie in the table.
class LeveledSpace {
  public:
    LeveledSpace(LeveledBase base, BlockSet set, std::size_t m)
        : base_(std::move(base)), table_(base_.pattern(), m, set) {}

    const LeveledBase& base() const noexcept { return base_; }
    const BlockTable& table() const noexcept { return table_; }
    std::size_t colors() const noexcept { return table_.colors(); }
    std::size_t slot_count() const noexcept { return base_.blocks() + base_.apices(); }
    std::size_t radix(std::size_t slot) const { return slot < base_.blocks() ? table_.size() : colors(); }

    /// Number of maps in the space, or nullopt above 2^64.
    std::optional<std::uint64_t> vertex_count() const {
        std::uint64_t out = 1;
        for (std::size_t s = 0; s < slot_count(); ++s) {
            if (out > std::numeric_limits<std::uint64_t>::max() / radix(s)) return std::nullopt;
            out *= radix(s);
        }
        return out;
    }

    std::uint64_t encode(const LeveledMap& f) const {
        std::uint64_t code = 0;
        for (std::size_t s = 0; s < slot_count(); ++s) code = code * radix(s) + slot_value(f, s);
        return code;
    }

    LeveledMap decode(std::uint64_t code) const {
        LeveledMap f{std::vector<std::uint32_t>(base_.blocks()), std::vector<Vertex>(base_.apices())};
        for (std::size_t s = slot_count(); s-- > 0;) {
            set_slot(f, s, static_cast<std::uint32_t>(code % radix(s)));
            code /= radix(s);
        }
        return f;
    }

    /// The underlying map V(base) -> [m] in base vertex order.
    VertexMap to_vertex_map(const LeveledMap& f) const {
        std::vector<Vertex> values(base_.size());
        for (Vertex v = 0; v < base_.size(); ++v) {
            const auto& s = base_.slots()[v];
            values[v] = s.apex ? f.apex[s.index] : table_[f.blocks[s.index]].map[s.x];
        }
        return VertexMap(colors(), std::move(values));
    }

    /// Inverse of to_vertex_map; nullopt when some block is not in the table.
    std::optional<LeveledMap> from_vertex_map(const VertexMap& g) const {
        LeveledMap f{std::vector<std::uint32_t>(base_.blocks()), std::vector<Vertex>(base_.apices())};
        const std::size_t t = base_.pattern().size();
        for (std::size_t b = 0; b < base_.blocks(); ++b) {
            std::vector<Vertex> values(t);
            for (Vertex x = 0; x < t; ++x) values[x] = g[base_.block_vertex(b, x)];
            auto idx = table_.find(VertexMap(colors(), std::move(values)));
            if (!idx) return std::nullopt;
            f.blocks[b] = static_cast<std::uint32_t>(*idx);
        }
        for (std::size_t a = 0; a < base_.apices(); ++a) f.apex[a] = g[base_.apex_vertex(a)];
        return f;
    }

    /// Same label as the corresponding vertex of exponential_graph(K_m, base).
    std::string label(const LeveledMap& f) const {
        const auto g = to_vertex_map(f);
        std::string out = "[";
        for (std::size_t v = 0; v < g.table.size(); ++v) {
            if (v) out += ',';
            out += std::to_string(g[v] + 1);
        }
        return out + "]";
    }

    bool adjacent(const LeveledMap& f, const LeveledMap& g) const {
        const std::size_t nb = base_.blocks(), na = base_.apices();
        for (std::size_t b = 0; b < nb; ++b) {
            for (std::size_t b2 = 0; b2 < nb; ++b2)
                if (base_.block_block(b, b2) && !table_.compatible(f.blocks[b]).test(g.blocks[b2])) return false;
            for (std::size_t a = 0; a < na; ++a) {
                if (!base_.block_apex(b, a)) continue;
                if (table_[f.blocks[b]].image >> g.apex[a] & 1u) return false;
                if (table_[g.blocks[b]].image >> f.apex[a] & 1u) return false;
            }
        }
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t a2 = 0; a2 < na; ++a2)
                if (base_.apex_apex(a, a2) && f.apex[a] == g.apex[a2]) return false;
        return true;
    }

    /// Per-slot admissible values of a neighbor of f: table entries for
    /// blocks, colors for apices.
    std::vector<Bitset> allowed(const LeveledMap& f) const {
        const std::size_t nb = base_.blocks(), na = base_.apices();
        std::vector<Bitset> out;
        out.reserve(nb + na);
        for (std::size_t b2 = 0; b2 < nb; ++b2) {
            Bitset ok(table_.size());
            ok.set();
            for (std::size_t b = 0; b < nb; ++b)
                if (base_.block_block(b, b2)) ok &= table_.compatible(f.blocks[b]);
            for (std::size_t a = 0; a < na; ++a)
                if (base_.block_apex(b2, a)) ok &= table_.avoiding(f.apex[a]);
            out.push_back(std::move(ok));
        }
        for (std::size_t a2 = 0; a2 < na; ++a2) {
            Bitset ok(colors());
            ok.set();
            for (std::size_t b = 0; b < nb; ++b) {
                if (!base_.block_apex(b, a2)) continue;
                for (Vertex c = 0; c < colors(); ++c)
                    if (table_[f.blocks[b]].image >> c & 1u) ok.reset(c);
            }
            for (std::size_t a = 0; a < na; ++a)
                if (base_.apex_apex(a, a2)) ok.reset(f.apex[a]);
            out.push_back(std::move(ok));
        }
        return out;
    }

    bool has_neighbor(const LeveledMap& f) const {
        for (const auto& s : allowed(f))
            if (s.none()) return false;
        return true;
    }

    /// Visits every neighbor of f inside the space in code order; stops when
    /// fn returns false. Returns false iff stopped early.
    bool for_each_neighbor(const LeveledMap& f, const std::function<bool(const LeveledMap&)>& fn) const {
        const auto sets = allowed(f);
        std::vector<std::vector<std::uint32_t>> choices(sets.size());
        for (std::size_t s = 0; s < sets.size(); ++s) {
            for_each_bit(sets[s], [&](Vertex c) { choices[s].push_back(c); });
            if (choices[s].empty()) return true;
        }
        return odometer(choices, fn);
    }

    /// Visits every map of the space in code order.
    bool for_each_vertex(const std::function<bool(const LeveledMap&)>& fn) const {
        std::vector<std::vector<std::uint32_t>> choices(slot_count());
        for (std::size_t s = 0; s < slot_count(); ++s)
            for (std::uint32_t c = 0; c < radix(s); ++c) choices[s].push_back(c);
        return odometer(choices, fn);
    }

    LeveledMap random_vertex(std::mt19937_64& rng) const {
        LeveledMap f{std::vector<std::uint32_t>(base_.blocks()), std::vector<Vertex>(base_.apices())};
        for (std::size_t s = 0; s < slot_count(); ++s) {
            set_slot(f, s, static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint64_t>(0, radix(s) - 1)(rng)));
        }
        return f;
    }

    std::uint32_t slot_value(const LeveledMap& f, std::size_t s) const {
        return s < base_.blocks() ? f.blocks[s] : f.apex[s - base_.blocks()];
    }
    void set_slot(LeveledMap& f, std::size_t s, std::uint32_t v) const {
        if (s < base_.blocks()) {
            f.blocks[s] = v;
        } else {
            f.apex[s - base_.blocks()] = v;
        }
    }

  private:
    bool odometer(const std::vector<std::vector<std::uint32_t>>& choices,
                  const std::function<bool(const LeveledMap&)>& fn) const {
        LeveledMap g{std::vector<std::uint32_t>(base_.blocks()), std::vector<Vertex>(base_.apices())};
        std::vector<std::size_t> pos(choices.size(), 0);
        for (std::size_t s = 0; s < choices.size(); ++s) set_slot(g, s, choices[s][0]);
        for (;;) {
            if (!fn(g)) return false;
            std::size_t s = choices.size();
            for (;;) {
                if (s == 0) return true;
                --s;
                if (++pos[s] < choices[s].size()) {
                    set_slot(g, s, choices[s][pos[s]]);
                    break;
                }
                pos[s] = 0;
                set_slot(g, s, choices[s][0]);
            }
        }
    }

    LeveledBase base_;
    BlockTable table_;
};

/// An induced subgraph of a LeveledSpace given by a membership predicate.
class LeveledFamily {
  public:
    using Predicate = std::function<bool(const LeveledMap&)>;

    LeveledFamily(std::shared_ptr<const LeveledSpace> space, Predicate member, std::string name)
        : space_(std::move(space)), member_(std::move(member)), name_(std::move(name)) {}

    const LeveledSpace& space() const noexcept { return *space_; }
    std::shared_ptr<const LeveledSpace> space_ptr() const noexcept { return space_; }
    const std::string& name() const noexcept { return name_; }
    bool contains(const LeveledMap& f) const { return !member_ || member_(f); }

    bool for_each_vertex(const std::function<bool(const LeveledMap&)>& fn) const {
        return space_->for_each_vertex([&](const LeveledMap& f) { return !contains(f) || fn(f); });
    }

    bool for_each_neighbor(const LeveledMap& f, const std::function<bool(const LeveledMap&)>& fn) const {
        return space_->for_each_neighbor(f, [&](const LeveledMap& g) { return !contains(g) || fn(g); });
    }

    bool has_neighbor(const LeveledMap& f) const {
        return !for_each_neighbor(f, [](const LeveledMap&) { return false; });
    }

    std::uint64_t count() const {
        if (!count_) {
            std::uint64_t c = 0;
            for_each_vertex([&](const LeveledMap&) {
                ++c;
                return true;
            });
            count_ = c;
        }
        return *count_;
    }

    /// Sorted codes of all members.
    std::vector<std::uint64_t> codes() const {
        std::vector<std::uint64_t> out;
        for_each_vertex([&](const LeveledMap& f) {
            out.push_back(space_->encode(f));
            return true;
        });
        return out;
    }

    /// Dense induced subgraph, labelled like exponential_graph(K_m, base).
    Graph materialize(const ExponentialOptions& opts = {}) const {
        const auto n = count();
        if (n > opts.vertex_budget) {
            throw BudgetExceeded(name_ + " has " + std::to_string(n) + " vertices, over the budget of " +
                                     std::to_string(opts.vertex_budget),
                                 n);
        }
        if (n != 0 && n > opts.dense_bits_budget / n) {
            throw BudgetExceeded(name_ + " with " + std::to_string(n) + " vertices exceeds the dense adjacency budget", n);
        }
        const auto all = codes();
        std::vector<std::string> labels;
        labels.reserve(all.size());
        for (auto c : all) labels.push_back(space_->label(space_->decode(c)));
        Graph g(std::move(labels));
        for (Vertex i = 0; i < all.size(); ++i) {
            for_each_neighbor(space_->decode(all[i]), [&](const LeveledMap& h) {
                const auto it = std::lower_bound(all.begin(), all.end(), space_->encode(h));
                g.add_edge(i, static_cast<Vertex>(it - all.begin()));
                return true;
            });
        }
        return g;
    }

    /// Uniform member by rejection from the space; nullopt after `attempts` misses.
    std::optional<LeveledMap> random_vertex(std::mt19937_64& rng, std::size_t attempts = 100000) const {
        for (std::size_t i = 0; i < attempts; ++i) {
            auto f = space_->random_vertex(rng);
            if (contains(f)) return f;
        }
        return std::nullopt;
    }

  private:
    std::shared_ptr<const LeveledSpace> space_;
    Predicate member_;
    std::string name_;
    mutable std::optional<std::uint64_t> count_;
};

}  // namespace foldhom
