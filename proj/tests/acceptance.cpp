// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "foldhom/foldhom.hpp"
#include "test_util.hpp"

using namespace foldhom;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + std::string("FAILED ") + what;
        }
    }
    void note(const std::string& s) { detail += (detail.empty() ? "" : "; ") + s; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double s = seconds_since(t0);
    if (limit_s > 0 && s > limit_s) o.require(false, "runtime " + std::to_string(s) + " s over " + std::to_string(limit_s) + " s");
    if (!o.pass) ++failures;
    std::printf("%-4s %s  %-52s [%7.2f s]  %s\n", id, o.pass ? "PASS" : "FAIL", title, s, o.detail.c_str());
    std::fflush(stdout);
}

std::string observed(const Verdict& v, const std::string& name) {
    const auto* c = v.find(name);
    if (!c) return "<missing>";
    return c->observed.is_string() ? c->observed.get<std::string>() : c->observed.dump();
}

void verdict_passes(Outcome& o, const Verdict& v, const std::string& tag) {
    for (const auto& c : v.checks)
        if (!c.skipped() && !c.pass) o.require(false, tag + " " + c.name + " observed " + c.observed.dump());
    o.require(v.passed(), tag + " verdict");
}

// independent k-colorability oracle: plain backtracking, most-constrained vertex first
bool colorable(const Graph& g, std::size_t k) {
    const auto n = g.size();
    std::vector<int> color(n, -1);
    std::function<bool(std::size_t)> go = [&](std::size_t done) -> bool {
        if (done == n) return true;
        Vertex best = 0;
        int best_free = 1 << 30;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::vector<bool> used(k, false);
            for (Vertex w = 0; w < n; ++w)
                if (g.adjacent(v, w) && color[w] >= 0) used[color[w]] = true;
            int free = 0;
            for (bool u : used) free += !u;
            if (free < best_free) best_free = free, best = v;
        }
        if (best_free == 0) return false;
        for (std::size_t c = 0; c < k; ++c) {
            bool ok = true;
            for (Vertex w = 0; w < n && ok; ++w) ok = !(g.adjacent(best, w) && color[w] == static_cast<int>(c));
            if (!ok) continue;
            color[best] = static_cast<int>(c);
            if (go(done + 1)) return true;
            color[best] = -1;
        }
        return false;
    };
    return go(0);
}

std::size_t oracle_chi(const Graph& g) {
    std::size_t k = 1;
    while (!colorable(g, k)) ++k;
    return k;
}

}  // namespace

int main() {
    std::printf("acceptance run, foldhom %s\n", kVersion);

    criterion("AC1", "sphere certificates for N(K_m), m=2..6", 10, [](Outcome& o) {
        for (std::size_t m = 2; m <= 6; ++m) {
            const auto p = reduced_homology(neighborhood_complex(complete_graph(m)));
            o.require(is_sphere_profile(p, static_cast<int>(m) - 2), "K" + std::to_string(m) + " " + p.to_string());
        }
        if (o.pass) o.note("S^0..S^4");
    });

    criterion("AC2", "K_m^T: fold core K_m, chi = m, sphere S^{m-2}", 180, [](Outcome& o) {
        for (auto [n, m] : {std::pair<std::size_t, std::size_t>{3, 2}, {4, 2}, {4, 3}}) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto v = verify_main2(complete_graph(n), m);
            const std::string tag = "(K" + std::to_string(n) + "," + std::to_string(m) + ")";
            verdict_passes(o, v, tag);
            o.require(observed(v, "fold_core_is_complete") == "true", tag + " fold core");
            o.require(observed(v, "chi") == std::to_string(m), tag + " chi");
            o.require(observed(v, "sphere") == "S^" + std::to_string(m - 2), tag + " sphere");
            const double s = seconds_since(t0);
            o.require(s < 60, tag + " over 60 s");
            o.note(tag + " " + std::to_string(v.instance["exponential_vertices"].get<std::size_t>()) + " vertices ok");
        }
    });

    criterion("AC3", "K_m^{M_r(K_n)} folded: sphere S^{m-2}, chi = m", 1200, [](Outcome& o) {
        struct Case {
            std::size_t n, m;
            int r, i;
        };
        for (auto c : {Case{2, 2, 2, 0}, Case{3, 2, 2, 0}, Case{3, 3, 2, 0}, Case{3, 2, 3, 1}}) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto v = verify_cormain(c.n, c.m, c.r, c.i);
            const std::string tag = "(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," + std::to_string(c.r) + "," +
                                    std::to_string(c.i) + ")";
            verdict_passes(o, v, tag);
            o.require(observed(v, "sphere") == "S^" + std::to_string(c.m - 2), tag + " sphere");
            o.require(observed(v, "chi_folded") == std::to_string(c.m), tag + " chi");
            o.require(seconds_since(t0) < 300, tag + " over 5 min");
            o.note(tag + " " + observed(v, "sphere") + " chi=" + observed(v, "chi_folded"));
        }
    });

    criterion("AC4", "N(K_m^{T_A^r}) and N(K_m^{L_r(A)}) homology equal", 0, [](Outcome& o) {
        struct Case {
            std::size_t t, m;
            PathSpec path;
        };
        for (const auto& c : {Case{3, 2, PathSpec(2, {0})}, Case{2, 2, PathSpec(2, {0, 1})}}) {
            const std::string tag = "(K" + std::to_string(c.t) + "," + std::to_string(c.m) + ")";
            const auto v = verify_generalmain(complete_graph(c.t), c.m, c.path);
            verdict_passes(o, v, tag);
            // both full exponential graphs, directly
            const auto left = exponential_graph(complete_graph(c.m), cone_over(complete_graph(c.t), c.path));
            const auto right = exponential_graph(complete_graph(c.m), path_with_loops(c.path));
            const auto hl = reduced_homology(neighborhood_complex(left));
            const auto hr = reduced_homology(neighborhood_complex(right));
            o.require(same_homology(hl, hr), tag + " direct " + hl.to_string() + " vs " + hr.to_string());
            o.note(tag + " " + sphere_label(hr));
        }
    });

    criterion("AC5", "K_m^{M(M(K_n))}: sphere S^{m-2}", 900, [](Outcome& o) {
        for (auto [n, m] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {3, 3}}) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto v = verify_doubesharp(n, m);
            const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            const std::string want = "S^" + std::to_string(m - 2);
            verdict_passes(o, v, tag);
            o.require(observed(v, "sphere_folded") == want, tag + " folded " + observed(v, "sphere_folded"));
            if (n == 2) {
                o.require(observed(v, "sphere_full") == want, tag + " full 2048-vertex graph");
                const auto full = exponential_graph(complete_graph(2), testutil::grotzsch());
                o.require(full.size() == 2048, "2048 vertices");
                o.require(is_sphere_profile(reduced_homology(neighborhood_complex(full)), 0), tag + " direct N of full graph");
            }
            o.require(seconds_since(t0) < 300, tag + " over 5 min");
            o.note(tag + " " + want + (n == 2 ? " (full + folded)" : " (folded)"));
        }
    });

    criterion("AC6", "chi(K_m^{M(M(K_n))}) = m", 0, [](Outcome& o) {
        const auto full = exponential_graph(complete_graph(2), testutil::grotzsch());
        o.require(full.size() == 2048 && is_bipartite(full), "(2,2) bipartite");
        o.note("(2,2) 2048 vertices bipartite");

        Config cfg;
        cfg.certificate_samples = 10'000;
        const auto v = verify_doublenew(2, 3, std::nullopt, cfg);
        verdict_passes(o, v, "(2,3)");
        const auto* chi = v.find("chi_G2");
        o.require(chi && chi->pass && chi->strength == "exhaustive", "(2,3) chi(G2) = 3 exhaustive");
        o.require(observed(v, "constant_maps_clique") == "true", "(2,3) K3 clique of constants");
        const auto certs = v.instance["folddouble_certificates"].get<std::uint64_t>();
        o.require(certs >= 10'000 && v.find("folddouble_certificates")->pass, "(2,3) >= 1e4 folddouble certificates");
        o.note("(2,3) chi(G2)=3 exhaustive, " + std::to_string(certs) + " folddouble certificates (" +
               std::to_string(v.instance["folddouble_nontrivial"].get<std::uint64_t>()) + " nontrivial), " +
               std::to_string(v.instance["generalfold_certificates"].get<std::uint64_t>()) + " generalfold, full graph " +
               observed(v, "chi_full"));

        // n = 2 blocks never fold nontrivially; n = 3 exercises the lemma for real
        const auto w = verify_doublenew(3, 4, std::nullopt, cfg);
        verdict_passes(o, w, "(3,4)");
        o.note("(3,4) " + w.find("chi_G2")->strength + " chi(G2)=" + observed(w, "chi_G2") + ", " +
               std::to_string(w.instance["folddouble_nontrivial"].get<std::uint64_t>()) + " nontrivial folddouble certificates");
    });

    criterion("AC7", "fold invariance of chi and H(N) on 200 random graphs", 0, [](Outcome& o) {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> size(1, 8);
        std::uniform_real_distribution<double> dens(0.1, 0.9);
        std::size_t folded = 0;
        for (int k = 0; k < 200; ++k) {
            const auto g = testutil::random_graph(size(rng), dens(rng), rng);
            const auto core = fold_core(g).core;
            folded += core.size() < g.size();
            o.require(oracle_chi(g) == oracle_chi(core), "chi on graph " + std::to_string(k));
            o.require(same_homology(reduced_homology(neighborhood_complex(g)), reduced_homology(neighborhood_complex(core))),
                      "homology on graph " + std::to_string(k));
        }
        o.note(std::to_string(folded) + "/200 graphs had a fold");
    });

    criterion("AC8", "property P implies perfect, all graphs on <= 7 vertices", 0, [](Outcome& o) {
        std::uint64_t with_p = 0, checked = 0;
        // graphs on fewer vertices appear as the ones with isolated vertices
        for (std::size_t n = 1; n <= 7; ++n) {
            const std::uint64_t pairs = n * (n - 1) / 2;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
                const auto g = testutil::graph_from_mask(n, mask);
                ++checked;
                if (!property_P(g)) continue;
                ++with_p;
                if (find_odd_hole_or_antihole(g)) {
                    o.require(false, "odd hole/antihole, n=" + std::to_string(n) + " mask=" + std::to_string(mask));
                    continue;
                }
                // ω and χ of every induced subgraph by subset DP
                std::vector<std::uint32_t> nb(n, 0);
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = 0; v < n; ++v)
                        if (g.adjacent(u, v)) nb[u] |= 1u << v;
                const std::uint32_t full = (1u << n) - 1;
                std::vector<int> omega(full + 1, 0), chi(full + 1, 0);
                std::vector<bool> indep(full + 1, true);
                for (std::uint32_t s = 1; s <= full; ++s) {
                    const int v = __builtin_ctz(s);
                    const std::uint32_t rest = s & ~(1u << v);
                    indep[s] = indep[rest] && !(nb[v] & rest);
                    omega[s] = std::max(omega[rest], 1 + omega[rest & nb[v]]);
                    int best = 1 << 20;
                    for (std::uint32_t i = rest;; i = (i - 1) & rest) {  // independent sets through v
                        const std::uint32_t set = i | (1u << v);
                        if (indep[set]) best = std::min(best, 1 + chi[s & ~set]);
                        if (i == 0) break;
                    }
                    chi[s] = best;
                }
                for (std::uint32_t s = 1; s <= full; ++s)
                    if (omega[s] != chi[s]) {
                        o.require(false, "omega != chi, n=" + std::to_string(n) + " mask=" + std::to_string(mask));
                        break;
                    }
            }
        }
        o.note(std::to_string(with_p) + " of " + std::to_string(checked) + " labelled graphs have P, all perfect");
    });

    criterion("AC9", "Hom(K2,G) and N(G) homology agree on 50 random graphs", 0, [](Outcome& o) {
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<std::size_t> size(1, 7);
        std::uniform_real_distribution<double> dens(0.1, 0.9);
        for (int k = 0; k < 50; ++k) {
            const auto g = testutil::random_graph(size(rng), dens(rng), rng);
            const auto a = reduced_homology(hom_k2_complex(g));
            const auto b = reduced_homology(neighborhood_complex(g));
            o.require(same_homology(a, b), "graph " + std::to_string(k) + ": " + a.to_string() + " vs " + b.to_string());
        }
    });

    criterion("AC10", "Hedetniemi spot check, G = Grotzsch", 600, [](Outcome& o) {
        const auto g = testutil::grotzsch();
        std::vector<Vertex> keep;
        for (Vertex v = 0; v + 1 < g.size(); ++v) keep.push_back(v);
        const std::vector<std::pair<std::string, Graph>> pool{{"K3", complete_graph(3)},
                                                              {"K4", complete_graph(4)},
                                                              {"C5", cycle_graph(5)},
                                                              {"C7", cycle_graph(7)},
                                                              {"grotzsch-minus-vertex", induced_subgraph(g, keep)}};
        const auto v = verify_hedetniemi(g, pool, 2);
        verdict_passes(o, v, "verdict");
        // derived table: the independent backtracking oracle
        const std::size_t chi_g = oracle_chi(g);
        o.require(chi_g == 4, "chi(Grotzsch) = 4");
        std::string table;
        for (const auto& row : v.instance["table"]) {
            const auto name = row["H"].get<std::string>();
            const Graph* h = nullptr;
            for (const auto& [n, hh] : pool)
                if (n == name) h = &hh;
            const std::size_t chi_h = oracle_chi(*h);
            const std::size_t chi_p = oracle_chi(categorical_product(g, *h));
            o.require(row["chi_H"] == chi_h && row["chi_GxH"] == chi_p && row["min"] == std::min(chi_g, chi_h),
                      name + " table row " + row.dump());
            o.require(chi_p != 3 || std::min(chi_g, chi_h) == 3, name + " implication");
            table += name + ":" + std::to_string(chi_p) + "/" + std::to_string(std::min(chi_g, chi_h)) + " ";
        }
        o.require(v.instance["table"].size() == pool.size(), "all H evaluated");
        o.note("chi(GxH)/min " + table);
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
