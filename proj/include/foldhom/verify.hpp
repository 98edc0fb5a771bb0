#pragma once

// Verification pipelines: each composes constructions, reductions, solvers
// and homology into a Verdict. Precondition failures and budget overruns are
// reported in the verdict instead of thrown.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "foldhom/certificates.hpp"
#include "foldhom/coloring.hpp"
#include "foldhom/complex.hpp"
#include "foldhom/config.hpp"
#include "foldhom/explicit_coloring.hpp"
#include "foldhom/exponential.hpp"
#include "foldhom/fold.hpp"
#include "foldhom/folded.hpp"
#include "foldhom/homology.hpp"
#include "foldhom/isomorphism.hpp"
#include "foldhom/perfect.hpp"
#include "foldhom/verdict.hpp"

namespace foldhom {

/// "S^d" when p is a homology sphere (S^-1 for the empty complex), else the
/// list of nontrivial groups.
inline std::string sphere_label(const HomologyProfile& p) {
    const auto nt = p.nontrivial();
    if (nt.size() == 1 && nt[0].rank == 1 && nt[0].torsion.empty()) return "S^" + std::to_string(nt[0].dim);
    return p.to_string();
}

inline std::string sphere_name(long long d) { return "S^" + std::to_string(d); }

inline Json graph_record(const Graph& g) {
    return {{"vertices", g.size()}, {"edges", g.edge_count() - g.loop_count()}, {"key", canonical_key(g)}};
}

inline Json path_record(const PathSpec& p) {
    return {{"r", p.length}, {"A", std::vector<int>(p.loops.begin(), p.loops.end())}};
}

namespace detail {

inline ExponentialOptions exp_options(const Config& cfg) { return {cfg.vertex_budget, kDefaultDenseBitsBudget}; }

template <class Fn>
void guarded(Verdict& v, const std::string& name, const Json& expected, Fn&& fn) {
    try {
        fn();
    } catch (const BudgetExceeded& e) {
        v.skip(name, expected, e.what());
    }
}

/// Adds the precondition check; returns false when it failed.
inline bool precondition(Verdict& v, const std::optional<std::string>& failure) {
    v.add("preconditions", true, !failure.has_value(), "exhaustive", failure.value_or(""));
    return !failure;
}

inline std::optional<long long> sphere_dim(const HomologyProfile& p) {
    const auto nt = p.nontrivial();
    if (nt.size() == 1 && nt[0].rank == 1 && nt[0].torsion.empty()) return nt[0].dim;
    return std::nullopt;
}

inline void sphere_check(Verdict& v, const std::string& name, const Graph& g, long long d, const Config& cfg,
                         std::optional<long long>* out = nullptr) {
    guarded(v, name, sphere_name(d), [&] {
        const auto nh = neighborhood_homology(g, cfg.face_budget);
        v.add(name, sphere_name(d), sphere_label(nh.profile), "exhaustive",
              nh.folded_first ? "neighborhood complex of the fold core" : "");
        if (out) *out = sphere_dim(nh.profile);
    });
}

/// Proper coloring with m colors plus an m-clique gives χ = m.
inline Json chi_observation(bool proper, bool clique, std::size_t m) {
    if (!proper) return "improper coloring";
    if (!clique) return "no m-clique";
    return m;
}

inline bool constants_form_clique(const ImplicitExponential& big, std::size_t m) {
    const auto n = big.base().size();
    for (Vertex a = 0; a < m; ++a)
        for (Vertex b = 0; b < m; ++b)
            if (a != b && !big.adjacent(VertexMap(m, std::vector<Vertex>(n, a)), VertexMap(m, std::vector<Vertex>(n, b))))
                return false;
    return true;
}

inline std::string violation_note(const std::optional<std::pair<std::string, std::string>>& v) {
    return v ? "violated on " + v->first + " ~ " + v->second : "";
}

inline void consistency_check(Verdict& v, const std::optional<long long>& d, std::optional<std::size_t> chi) {
    if (!d || !chi) {
        v.skip("chi_equals_sphere_dim_plus_2", true, "needs both a sphere certificate and chi");
        return;
    }
    v.add("chi_equals_sphere_dim_plus_2", static_cast<long long>(*chi), *d + 2);
}

}  // namespace detail

// ---------------------------------------------------------------------------

/// K_m^T for T connected with property P and 2 <= m < χ(T).
inline Verdict verify_main2(const Graph& t, std::size_t m, const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "main2";
        v.instance = {{"T", graph_record(t)}, {"m", m}};
        std::optional<std::string> bad;
        if (auto why = single_precondition_failure(m, t, PathSpec(1, {}))) bad = why;
        if (!bad) {
            const auto chi_t = chromatic_number(t, cfg.solver_budget_ms);
            if (m >= chi_t.value()) bad = "need m < chi(T) = " + std::to_string(chi_t.value());
        }
        if (!detail::precondition(v, bad)) return v;

        Graph big;
        try {
            big = exponential_graph(complete_graph(m), t, detail::exp_options(cfg));
        } catch (const BudgetExceeded& e) {
            for (const auto* name : {"fold_core_is_complete", "chi", "sphere"}) v.skip(name, true, e.what());
            return v;
        }
        v.instance["exponential_vertices"] = big.size();
        const auto folded = fold_core(big);
        const bool iso = folded.core.size() == m && is_isomorphic(folded.core, complete_graph(m));
        v.add("fold_core_is_complete", true, iso, "exhaustive",
              "core has " + std::to_string(folded.core.size()) + " vertices after " + std::to_string(folded.trace.size()) +
                  " folds");

        std::optional<std::size_t> chi;
        const auto c = chromatic_number(big, cfg.solver_budget_ms);
        if (c.exact) {
            chi = c.value();
            v.add("chi", m, c.value());
        } else {
            v.skip("chi", m, "solver budget: chi in [" + std::to_string(c.lower) + "," + std::to_string(c.upper) + "]");
        }
        std::optional<long long> d;
        detail::sphere_check(v, "sphere", big, static_cast<long long>(m) - 2, cfg, &d);
        detail::consistency_check(v, d, chi);
        // conn(S^d) = d - 1, so the topological bound reads chi >= d + 2
        if (d && chi) v.add("bound_tightness", "tight", *chi == static_cast<std::size_t>(*d + 2) ? "tight" : "slack");
        return v;
    });
}

/// N(K_m^{T_A^r}) against N(K_m^{L_r(A)}).
inline Verdict verify_generalmain(const Graph& t, std::size_t m, const PathSpec& path, const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "generalmain";
        v.instance = {{"T", graph_record(t)}, {"m", m}, {"path", path_record(path)}};
        if (!detail::precondition(v, single_precondition_failure(m, t, path))) return v;

        HomologyProfile right;
        try {
            right = neighborhood_homology(exponential_graph(complete_graph(m), path_with_loops(path), detail::exp_options(cfg)),
                                          cfg.face_budget)
                        .profile;
        } catch (const BudgetExceeded& e) {
            v.skip("homology_folded_vs_path", true, e.what());
            return v;
        }
        auto groups = [](const HomologyProfile& p) {
            HomologyProfile q;
            q.groups = p.nontrivial();
            return homology_to_json(q)["groups"];
        };
        v.instance["path_homology"] = sphere_label(right);

        const auto t1 = folded_exponential_single(m, t, path, false);
        const auto t2 = folded_exponential_single(m, t, path, true);
        detail::guarded(v, "homology_folded_vs_path", groups(right), [&] {
            const auto nh = neighborhood_homology(t1.materialize(detail::exp_options(cfg)), cfg.face_budget);
            v.add("homology_folded_vs_path", groups(right), groups(nh.profile), "exhaustive",
                  "folded graph has " + std::to_string(t1.count()) + " vertices");
        });
        detail::guarded(v, "homology_full_vs_path", groups(right), [&] {
            const auto base = t1.space().base().materialize();
            const auto full = exponential_graph(complete_graph(m), base, detail::exp_options(cfg));
            v.add("homology_full_vs_path", groups(right), groups(neighborhood_homology(full, cfg.face_budget).profile));
        });
        // T2 -> K_m^{L_r(A)} is an isomorphism
        detail::guarded(v, "pruned_isomorphic_to_path_exponential", true, [&] {
            const auto g = t2.materialize(detail::exp_options(cfg));
            const auto small = exponential_graph(complete_graph(m), path_with_loops(path), detail::exp_options(cfg));
            ImplicitExponential e(complete_graph(m), path_with_loops(path));
            std::vector<Vertex> image;
            for (auto c : t2.codes())
                image.push_back(static_cast<Vertex>(e.encode(single_to_path_map(t2.space(), t2.space().decode(c)))));
            bool ok = g.size() == small.size();
            if (ok) ok = is_isomorphism(g, small, VertexMap(small.size(), image));
            v.add("pruned_isomorphic_to_path_exponential", true, ok);
        });
        return v;
    });
}

/// M_r(K_n) with A = {0..i}, m <= n: sphere S^{m-2} and χ = m.
inline Verdict verify_cormain(std::size_t n, std::size_t m, int r, int i, const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "cormain";
        v.instance = {{"n", n}, {"m", m}, {"r", r}, {"i", i}};
        std::optional<std::string> bad;
        if (n < 2) bad = "need n >= 2";
        else if (r < 1) bad = "need r >= 1";
        else if (i < 0 || i > r - 1) bad = "need 0 <= i <= r-1";
        else if (m < 2 || m > n) bad = "need 2 <= m <= n";
        if (!detail::precondition(v, bad)) return v;
        std::set<int> a;
        for (int x = 0; x <= i; ++x) a.insert(x);
        const PathSpec path(r, a);
        const auto t = complete_graph(n);

        const auto t1 = folded_exponential_single(m, t, path, false);
        std::optional<long long> d;
        std::optional<std::size_t> chi;
        detail::guarded(v, "sphere", sphere_name(static_cast<long long>(m) - 2), [&] {
            const auto pruned = prune_isolated(t1.materialize(detail::exp_options(cfg)));
            v.instance["folded_vertices"] = t1.count();
            v.instance["after_pruning"] = pruned.core.size();
            detail::sphere_check(v, "sphere", pruned.core, static_cast<long long>(m) - 2, cfg, &d);
        });

        const auto ec = explicit_coloring_single(m, t, path, 0, false, cfg.vertex_budget, cfg.seed, cfg.sample_pairs);
        const Json chi_folded = detail::chi_observation(ec.check.proper, ec.clique_ok, m);
        v.add("chi_folded", m, chi_folded, ec.check.strength(), detail::violation_note(ec.check.violation));
        if (chi_folded == Json(m)) chi = m;

        detail::guarded(v, "chi_full", m, [&] {
            ImplicitExponential big(complete_graph(m), t1.space().base().materialize());
            const auto r2 = check_full_coloring(big, full_coloring_single(t1.space(), 0), cfg.vertex_budget);
            v.add("chi_full", m, detail::chi_observation(r2.proper, detail::constants_form_clique(big, m), m), "exhaustive",
                  r2.proper ? std::to_string(r2.edges) + " ordered edges checked" : detail::violation_note(r2.violation));
        });
        detail::consistency_check(v, d, chi);
        return v;
    });
}

/// K_m^{M(M(K_n))}, m <= n: sphere S^{m-2} and χ = m.
inline Verdict verify_doubesharp(std::size_t n, std::size_t m, const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "doubesharp";
        v.instance = {{"n", n}, {"m", m}};
        std::optional<std::string> bad;
        if (n < 2) bad = "need n >= 2";
        else if (m < 2 || m > n) bad = "need 2 <= m <= n";
        if (!detail::precondition(v, bad)) return v;

        const auto space = double_space(m, n);
        const auto g = double_family(space, DoubleStage::G);
        const auto cst = double_family(space, DoubleStage::AllConstant);
        ImplicitExponential big(complete_graph(m), space->base().materialize());

        // every map with a homomorphism block is isolated in the full graph
        {
            std::uint64_t checked = 0, failures = 0;
            auto visit = [&](const LeveledMap& f) {
                if (all_blocks_constant(*space, f)) return;
                ++checked;
                if (big.neighbor_count(space->to_vertex_map(f)) != 0) ++failures;
            };
            const auto total = space->vertex_count();
            if (total && *total <= 64 * cfg.vertex_budget) {
                g.for_each_vertex([&](const LeveledMap& f) {
                    visit(f);
                    return true;
                });
                v.add("hom_blocks_isolated", 0, failures, "exhaustive", std::to_string(checked) + " maps");
            } else {
                std::mt19937_64 rng(cfg.seed);
                for (std::uint64_t k = 0; k < cfg.certificate_samples; ++k) visit(space->random_vertex(rng));
                v.add("hom_blocks_isolated", 0, failures,
                      "sampled(" + std::to_string(cfg.seed) + "," + std::to_string(cfg.certificate_samples) + ")");
            }
        }

        std::optional<long long> d;
        std::optional<std::size_t> chi;
        detail::guarded(v, "constant_part_isomorphic_to_exponential_of_M(L2)", true, [&] {
            const auto gc = cst.materialize(detail::exp_options(cfg));
            const auto ml = mycielski_of_looped_path();
            const auto small = exponential_graph(complete_graph(m), ml, detail::exp_options(cfg));
            ImplicitExponential e(complete_graph(m), ml);
            std::vector<Vertex> image;
            for (auto c : cst.codes())
                image.push_back(static_cast<Vertex>(e.encode(double_to_mycielski_path_map(*space, space->decode(c)))));
            v.add("constant_part_isomorphic_to_exponential_of_M(L2)", true,
                  gc.size() == small.size() && is_isomorphism(gc, small, VertexMap(small.size(), image)));
            detail::sphere_check(v, "sphere_folded", gc, static_cast<long long>(m) - 2, cfg, &d);
        });
        detail::guarded(v, "sphere_full", sphere_name(static_cast<long long>(m) - 2), [&] {
            const auto full = exponential_graph(complete_graph(m), space->base().materialize(), detail::exp_options(cfg));
            detail::sphere_check(v, "sphere_full", full, static_cast<long long>(m) - 2, cfg);
        });

        const auto ec = explicit_coloring_double(m, n, cfg.vertex_budget, cfg.seed, cfg.sample_pairs);
        const Json chi_folded = detail::chi_observation(ec.check.proper, ec.clique_ok, m);
        v.add("chi_folded", m, chi_folded, ec.check.strength(), detail::violation_note(ec.check.violation));
        if (chi_folded == Json(m)) chi = m;
        detail::guarded(v, "chi_full", m, [&] {
            const auto r2 = check_full_coloring(big, full_coloring_double(*space), cfg.vertex_budget);
            v.add("chi_full", m, detail::chi_observation(r2.proper, detail::constants_form_clique(big, m), m), "exhaustive",
                  r2.proper ? std::to_string(r2.edges) + " ordered edges checked" : detail::violation_note(r2.violation));
        });
        detail::consistency_check(v, d, chi);
        return v;
    });
}

/// χ(K_m^{M(M(K_n))}) = m for 2 <= m <= n+1, optionally through a host G.
inline Verdict verify_doublenew(std::size_t n, std::size_t m, const std::optional<Graph>& host = std::nullopt,
                                const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "doublenew";
        v.instance = {{"n", n}, {"m", m}};
        if (host) v.instance["host"] = graph_record(*host);
        if (!detail::precondition(v, double_precondition_failure(m, n))) return v;

        const auto space = double_space(m, n);
        const auto g = double_family(space, DoubleStage::G);
        const auto g1 = double_family(space, DoubleStage::G1);
        const auto mm = space->base().materialize();
        ImplicitExponential big(complete_graph(m), mm);
        const std::string sampled = "sampled(" + std::to_string(cfg.seed) + "," + std::to_string(cfg.certificate_samples) + ")";
        const auto total = space->vertex_count();
        const bool small_space = total && *total <= 64 * cfg.vertex_budget;

        // chi of G2 through φ, plus the constant-map clique
        const auto ec = explicit_coloring_double(m, n, cfg.vertex_budget, cfg.seed, cfg.sample_pairs);
        v.add("chi_G2", m, detail::chi_observation(ec.check.proper, ec.clique_ok, m), ec.check.strength(),
              ec.check.proper ? std::to_string(ec.check.pairs) + " adjacent pairs checked" : detail::violation_note(ec.check.violation));
        v.add("constant_maps_clique", true, ec.clique_ok);

        // full graph -> G: folddouble on sampled maps
        {
            std::mt19937_64 rng(cfg.seed);
            std::uniform_int_distribution<Vertex> color(0, static_cast<Vertex>(m - 1));
            std::uint64_t certs = 0, nontrivial = 0, enumerated = 0, failures = 0;
            for (std::uint64_t k = 0; k < cfg.certificate_samples; ++k) {
                std::vector<Vertex> values(mm.size());
                for (auto& x : values) x = color(rng);
                const VertexMap f(m, std::move(values));
                for (int q = 0; q < 2; ++q)
                    for (int p = 0; p < 2; ++p) {
                        const auto w = folddouble_witness(space->base(), f, p, q);
                        if (!w) continue;
                        ++certs;
                        nontrivial += !(*w == f);
                        const auto c = verify_fold_certificate(big, f, *w);
                        enumerated += c.route == CertificateRoute::Enumerated;
                        failures += !c.holds;
                    }
            }
            v.instance["folddouble_certificates"] = certs;
            v.instance["folddouble_nontrivial"] = nontrivial;
            v.add("folddouble_certificates", 0, failures, sampled,
                  std::to_string(certs) + " certificates (" + std::to_string(nontrivial) + " nontrivial, " +
                      std::to_string(enumerated) + " by enumeration)");
        }

        // G -> G1: generalfold; G1 -> G2: U1, U2, U3 are isolated in G
        {
            std::uint64_t certs = 0, failures = 0, u_seen = 0, u_failures = 0;
            auto visit = [&](const LeveledMap& f) {
                if (!g1.contains(f)) {
                    ++certs;
                    const auto w = generalfold_witness(*space, f);
                    if (!w || !g1.contains(*w) || !verify_fold_certificate(*space, f, *w).holds) ++failures;
                    return;
                }
                const DoubleView dv(*space, f);
                if (in_U1(dv) || in_U2(dv) || in_U3(dv)) {
                    ++u_seen;
                    if (space->has_neighbor(f)) ++u_failures;
                }
            };
            std::string strength = "exhaustive";
            if (small_space) {
                g.for_each_vertex([&](const LeveledMap& f) {
                    visit(f);
                    return true;
                });
            } else {
                strength = sampled;
                std::mt19937_64 rng(cfg.seed + 1);
                for (std::uint64_t k = 0; k < cfg.certificate_samples; ++k) visit(space->random_vertex(rng));
            }
            v.instance["generalfold_certificates"] = certs;
            v.add("generalfold_certificates", 0, failures, strength, std::to_string(certs) + " certificates");
            v.add("U_sets_isolated", 0, u_failures, strength, std::to_string(u_seen) + " members of U1, U2, U3");
        }

        // the whole exponential graph, colored by φ after the fold retraction
        detail::guarded(v, "chi_full", m, [&] {
            const auto r2 = check_full_coloring(big, full_coloring_double(*space), cfg.vertex_budget);
            v.add("chi_full", m, detail::chi_observation(r2.proper, detail::constants_form_clique(big, m), m), "exhaustive",
                  r2.proper ? std::to_string(r2.edges) + " ordered edges checked" : detail::violation_note(r2.violation));
        });
        if (m == 2) {
            detail::guarded(v, "full_graph_bipartite", true, [&] {
                v.add("full_graph_bipartite", true, is_bipartite(exponential_graph(complete_graph(2), mm, detail::exp_options(cfg))));
            });
        }

        if (host) {
            std::optional<VertexMap> emb;
            try {
                emb = find_subgraph_embedding(mm, *host);
                v.add("host_contains_MM(K_n)", true, emb.has_value());
            } catch (const BudgetExceeded& e) {
                v.skip("host_contains_MM(K_n)", true, e.what());
            }
            if (emb) {
                // c(F) = φ(ρ(F ∘ e)): restriction to the embedded copy, then the coloring above
                detail::guarded(v, "chi_host", m, [&] {
                    ImplicitExponential hb(complete_graph(m), *host);
                    const auto inner = full_coloring_double(*space);
                    const auto r2 = check_full_coloring(
                        hb,
                        [&](const VertexMap& f) {
                            std::vector<Vertex> restricted(mm.size());
                            for (Vertex x = 0; x < mm.size(); ++x) restricted[x] = f[(*emb)[x]];
                            return inner(VertexMap(m, std::move(restricted)));
                        },
                        cfg.vertex_budget);
                    v.add("chi_host", m, detail::chi_observation(r2.proper, detail::constants_form_clique(hb, m), m),
                          "exhaustive", detail::violation_note(r2.violation));
                });
            }
        }
        return v;
    });
}

/// For G ⊇ M(M(K_n)) and each H: χ(G×H) = n+1 implies min{χ(G),χ(H)} = n+1.
inline Verdict verify_hedetniemi(const Graph& g, const std::vector<std::pair<std::string, Graph>>& pool, std::size_t n = 2,
                                 const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "hedetniemi";
        v.instance = {{"G", graph_record(g)}, {"n", n}};
        std::optional<std::string> bad;
        if (!g.is_simple()) bad = "G must be simple";
        const auto mm = generalized_mycielskian(generalized_mycielskian(complete_graph(n)));
        std::optional<VertexMap> emb;
        if (!bad) {
            try {
                emb = find_subgraph_embedding(mm, g);
                if (!emb) bad = "G does not contain M(M(K_n))";
            } catch (const BudgetExceeded& e) {
                bad = std::string("subgraph search: ") + e.what();
            }
        }
        for (const auto& [name, h] : pool)
            if (!bad && !h.is_simple()) bad = "H '" + name + "' has loops";
        if (!detail::precondition(v, bad)) return v;

        const auto chi_g = chromatic_number(g, cfg.solver_budget_ms);
        if (!chi_g.exact) {
            v.skip("chi_G", n + 2, "solver budget");
            return v;
        }
        v.instance["chi_G"] = chi_g.value();
        // K_{n+1}^{M(M(K_n))} coloring, used to color H through ψ_H
        const auto space = double_space(n + 1, n);
        const auto through = full_coloring_double(*space);

        Json table = Json::array();
        for (const auto& [name, h] : pool) {
            const auto chi_h = chromatic_number(h, cfg.solver_budget_ms);
            const auto prod = categorical_product(g, h);
            const auto chi_p = chromatic_number(prod, cfg.solver_budget_ms);
            if (!chi_h.exact || !chi_p.exact) {
                v.skip(name + ": implication", true, "solver budget");
                continue;
            }
            const std::size_t k = chi_p.value();
            const std::size_t mn = std::min(chi_g.value(), chi_h.value());
            table.push_back({{"H", name}, {"chi_H", chi_h.value()}, {"chi_GxH", k}, {"min", mn}});
            v.add(name + ": implication", true, k != n + 1 || mn == n + 1);
            v.add(name + ": chi_GxH_at_most_min", true, k <= mn);

            // ψ_H : H -> K_k^G and ψ_G : G -> K_k^H from the witness coloring ψ of G × H
            const auto& psi = chi_p.witness.colors;
            auto psi_h = [&](Vertex b) {
                std::vector<Vertex> f(g.size());
                for (Vertex a = 0; a < g.size(); ++a) f[a] = psi[a * h.size() + b];
                return VertexMap(k, std::move(f));
            };
            auto psi_g = [&](Vertex a) {
                std::vector<Vertex> f(h.size());
                for (Vertex b = 0; b < h.size(); ++b) f[b] = psi[a * h.size() + b];
                return VertexMap(k, std::move(f));
            };
            ImplicitExponential kg(complete_graph(k), g), kh(complete_graph(k), h);
            bool hom_h = true, hom_g = true;
            for (const auto& [b, b2] : h.edges()) hom_h = hom_h && kg.adjacent(psi_h(b), psi_h(b2));
            for (const auto& [a, a2] : g.edges()) hom_g = hom_g && kh.adjacent(psi_g(a), psi_g(a2));
            v.add(name + ": psi_H_homomorphism", true, hom_h);
            v.add(name + ": psi_G_homomorphism", true, hom_g);

            if (k == n + 1) {
                // χ(H) <= n+1 constructively: color h by c(ψ_H(h) restricted to M(M(K_n)))
                Coloring ch;
                ch.k = n + 1;
                for (Vertex b = 0; b < h.size(); ++b) {
                    const auto f = psi_h(b);
                    std::vector<Vertex> restricted(mm.size());
                    for (Vertex x = 0; x < mm.size(); ++x) restricted[x] = f[(*emb)[x]];
                    ch.colors.push_back(through(VertexMap(n + 1, std::move(restricted))));
                }
                v.add(name + ": H_colored_through_exponential", true, is_proper_coloring(h, ch));
            }
        }
        v.instance["table"] = table;
        return v;
    });
}

/// χ(G) against the sphere certificate of N(G).
inline Verdict lovasz_report(const Graph& g, const Config& cfg = {}) {
    return timed([&] {
        Verdict v;
        v.theorem_id = "lovasz";
        v.instance = {{"G", graph_record(g)}};
        if (!detail::precondition(v, g.is_simple() ? std::nullopt : std::optional<std::string>("G has loops"))) return v;
        const auto chi = chromatic_number(g, cfg.solver_budget_ms);
        if (chi.exact) v.instance["chi"] = chi.value();
        try {
            const auto nh = neighborhood_homology(g, cfg.face_budget);
            v.instance["homology"] = sphere_label(nh.profile);
            v.instance["folded_first"] = nh.folded_first;
            const auto d = detail::sphere_dim(nh.profile);
            if (!d) {
                v.instance["tightness"] = "no sphere certificate";
                v.skip("lovasz_bound", true, "N(G) is not a homology sphere");
            } else if (!chi.exact) {
                v.skip("lovasz_bound", true, "solver budget");
            } else {
                // conn(S^d) = d - 1, so χ >= d + 2
                const auto bound = *d + 2;
                v.instance["bound"] = bound;
                v.instance["tightness"] = static_cast<long long>(chi.value()) == bound ? "tight" : "slack";
                v.add("lovasz_bound", true, static_cast<long long>(chi.value()) >= bound, "exhaustive",
                      "homology-certificate strength only");
            }
        } catch (const BudgetExceeded& e) {
            v.skip("lovasz_bound", true, e.what());
        }
        return v;
    });
}

}  // namespace foldhom
