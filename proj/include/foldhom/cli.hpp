#pragma once

// Command-line front end. Every command prints one JSON document to stdout
// (and to report_dir when set). Exit codes: 0 pass, 1 check failure,
// 2 usage/IO error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foldhom/cache.hpp"
#include "foldhom/config.hpp"
#include "foldhom/graph_json.hpp"
#include "foldhom/verify.hpp"

namespace foldhom {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitBudget = 3 };

namespace cli {

struct Session {
    Config cfg;
    bool use_cache = true;
    bool verbose = false;
    bool timing = false;
    std::ostream& out;
    std::ostream& err;

    std::optional<Cache> cache() const {
        if (!use_cache) return std::nullopt;
        return Cache(cfg.cache_dir);
    }

    void emit(const Json& j, const std::string& report_name) const {
        out << j.dump(2) << '\n';
        if (cfg.report_dir.empty()) return;
        std::filesystem::create_directories(cfg.report_dir);
        const auto path = std::filesystem::path(cfg.report_dir) / (report_name + ".json");
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream f(tmp);
            if (!f) throw Error("cannot write report " + tmp.string());
            f << j.dump(2) << '\n';
        }
        std::filesystem::rename(tmp, path);
    }

    /// Runs `compute` through the cache under (graph, op); logs hits with -v.
    template <class Fn>
    Json through_cache(const Graph& g, const std::string& op, Fn&& compute) const {
        // labels matter in the output, so the key is the labelled graph
        const auto c = cache();
        const auto key = Cache::key(graph_to_json(g).dump(), op, cfg);
        bool hit = false;
        Json j = cached(c ? &*c : nullptr, key, std::forward<Fn>(compute), &hit);
        if (verbose && c) err << "cache " << (hit ? "hit" : "miss") << ": " << key << '\n';
        return j;
    }
};

inline std::vector<std::string> labels_of(const Graph& g, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (auto v : vs) out.push_back(g.label(v));
    return out;
}

inline std::string file_stem(const std::string& path) {
    return path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
}

inline Graph grotzsch() { return generalized_mycielskian(generalized_mycielskian(complete_graph(2))); }

/// The fixed H pool for the Hedetniemi spot check.
inline std::vector<std::pair<std::string, Graph>> builtin_hedetniemi_pool() {
    const auto g = grotzsch();
    std::vector<Vertex> keep(g.size() - 1);
    for (Vertex v = 0; v + 1 < g.size(); ++v) keep[v] = v;  // drop the apex
    return {{"K3", complete_graph(3)},
            {"K4", complete_graph(4)},
            {"C5", cycle_graph(5)},
            {"C7", cycle_graph(7)},
            {"grotzsch-minus-vertex", induced_subgraph(g, keep)}};
}

inline int verdict_exit(const Verdict& v) {
    if (v.passed()) return kExitPass;
    for (const auto& c : v.checks)
        if (!c.skipped() && !c.pass) return kExitFail;
    return kExitBudget;  // nothing failed, but only skipped checks remain
}

}  // namespace cli

inline int run_command(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Config cfg;
    try {
        cfg = config_from_env();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    cli::Session s{cfg, true, false, false, out, err};

    CLI::App app{"Folds, neighborhood complexes and colorings of exponential graphs"};
    app.name("foldhom");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));
    app.add_option("--vertex-budget", s.cfg.vertex_budget, "max vertices of a materialized graph");
    app.add_option("--face-budget", s.cfg.face_budget, "max faces of a complex");
    app.add_option("--solver-budget-ms", s.cfg.solver_budget_ms, "time budget of the coloring solver");
    app.add_option("--seed", s.cfg.seed, "seed of every sampled check");
    app.add_option("--sample-pairs", s.cfg.sample_pairs, "sampled adjacent pairs for coloring checks");
    app.add_option("--certificate-samples", s.cfg.certificate_samples, "sampled fold certificates");
    app.add_option("--cache-dir", s.cfg.cache_dir);
    app.add_option("--report-dir", s.cfg.report_dir, "also write every JSON result here");
    app.add_flag("--no-cache", [&](std::int64_t) { s.use_cache = false; });
    app.add_flag("-v,--verbose", s.verbose, "log cache hits to stderr");
    app.add_flag("--timing", s.timing, "include runtime_ms in verdicts");

    // build
    auto* build = app.add_subcommand("build", "named constructions");
    build->require_subcommand(1);
    std::size_t count = 0;
    int mr = 2, path_r = 1;
    std::string file_a, file_b;
    std::vector<int> path_loops;
    auto* b_complete = build->add_subcommand("complete", "K_N");
    b_complete->add_option("N", count)->required();
    auto* b_cycle = build->add_subcommand("cycle", "C_N");
    b_cycle->add_option("N", count)->required()->check(CLI::Range(3, 1 << 20));
    auto* b_myc = build->add_subcommand("mycielskian", "generalized Mycielskian M_r(G)");
    b_myc->add_option("-r", mr, "path length")->check(CLI::Range(2, 64));
    b_myc->add_option("FILE", file_a)->required();
    auto* b_prod = build->add_subcommand("product", "categorical product A x B");
    b_prod->add_option("A", file_a)->required();
    b_prod->add_option("B", file_b)->required();
    auto* b_exp = build->add_subcommand("exponential", "exponential graph H^G");
    b_exp->add_option("H", file_a)->required();
    b_exp->add_option("G", file_b)->required();
    auto* b_path = build->add_subcommand("path", "path of length R with loops at A");
    b_path->add_option("R", path_r)->required();
    b_path->add_option("--loops", path_loops)->expected(0, -1);
    auto* b_grotzsch = build->add_subcommand("grotzsch", "M(M(K_2))");

    // graph commands
    std::string file;
    auto* reduce = app.add_subcommand("reduce", "fold core and fold trace");
    reduce->add_option("FILE", file)->required();
    std::string complex_kind = "nbhd";
    auto* homology = app.add_subcommand("homology", "reduced homology of a graph complex");
    homology->add_option("FILE", file)->required();
    homology->add_option("--complex", complex_kind)->check(CLI::IsMember({"nbhd", "homk2"}));
    auto* chi = app.add_subcommand("chi", "exact chromatic number");
    chi->add_option("FILE", file)->required();
    auto* checkp = app.add_subcommand("check-p", "property P, with a violating quadruple");
    checkp->add_option("FILE", file)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "verification pipelines");
    verify->require_subcommand(1);
    std::size_t vn = 2, vm = 2;
    int vr = 2, vi = 0;
    std::vector<int> va;
    std::string host_file, g_file;
    std::vector<std::string> h_files;
    auto* v_main2 = verify->add_subcommand("main2", "K_m^T for T with property P");
    v_main2->add_option("--T", file)->required();
    v_main2->add_option("--m", vm)->required();
    auto* v_general = verify->add_subcommand("generalmain", "N(K_m^{T_A^r}) against N(K_m^{L_r(A)})");
    v_general->add_option("--T", file)->required();
    v_general->add_option("--m", vm)->required();
    v_general->add_option("--r", vr)->required();
    v_general->add_option("--A", va)->expected(0, -1);
    auto* v_cormain = verify->add_subcommand("cormain", "K_m^{M_r(K_n)}");
    v_cormain->add_option("--n", vn)->required();
    v_cormain->add_option("--m", vm)->required();
    v_cormain->add_option("--r", vr)->required();
    v_cormain->add_option("--i", vi)->required();
    auto* v_sharp = verify->add_subcommand("doubesharp", "K_m^{M(M(K_n))}, m <= n");
    v_sharp->add_option("--n", vn)->required();
    v_sharp->add_option("--m", vm)->required();
    auto* v_new = verify->add_subcommand("doublenew", "chi(K_m^{M(M(K_n))}) = m, m <= n+1");
    v_new->add_option("--n", vn)->required();
    v_new->add_option("--m", vm)->required();
    v_new->add_option("--host", host_file, "graph containing M(M(K_n))");
    auto* v_hed = verify->add_subcommand("hedetniemi", "spot check of chi(G x H) = min");
    v_hed->add_option("--G", g_file, "default: Grotzsch graph");
    v_hed->add_option("--H", h_files, "default: built-in pool")->expected(0, -1);
    v_hed->add_option("--n", vn);
    auto* v_lovasz = verify->add_subcommand("lovasz", "chi(G) against the sphere certificate of N(G)");
    v_lovasz->add_option("--G", g_file)->required();

    // cache
    auto* cache = app.add_subcommand("cache", "result cache");
    cache->require_subcommand(1);
    auto* c_ls = cache->add_subcommand("ls");
    auto* c_clear = cache->add_subcommand("clear");

    std::vector<const char*> argv{"foldhom"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (e.get_name() == "CallForVersion" ? std::string(kVersion) + "\n" : app.help());
            return kExitPass;
        }
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        s.cfg.validate();
        const auto& c = s.cfg;

        if (build->parsed()) {
            Graph g;
            std::string name;
            if (b_complete->parsed()) g = complete_graph(count), name = "K" + std::to_string(count);
            else if (b_cycle->parsed()) g = cycle_graph(count), name = "C" + std::to_string(count);
            else if (b_myc->parsed())
                g = generalized_mycielskian(parse_graph_file(file_a), mr), name = "M" + std::to_string(mr) + "-" + cli::file_stem(file_a);
            else if (b_prod->parsed())
                g = categorical_product(parse_graph_file(file_a), parse_graph_file(file_b)),
                name = cli::file_stem(file_a) + "-x-" + cli::file_stem(file_b);
            else if (b_exp->parsed())
                g = exponential_graph(parse_graph_file(file_a), parse_graph_file(file_b), {c.vertex_budget, kDefaultDenseBitsBudget}),
                name = cli::file_stem(file_a) + "-pow-" + cli::file_stem(file_b);
            else if (b_path->parsed())
                g = path_with_loops(PathSpec(path_r, std::set<int>(path_loops.begin(), path_loops.end()))),
                name = "L" + std::to_string(path_r);
            else if (b_grotzsch->parsed()) g = cli::grotzsch(), name = "grotzsch";
            s.emit(graph_to_json(g), "build-" + name);
            return kExitPass;
        }

        if (reduce->parsed()) {
            const auto g = parse_graph_file(file);
            const auto j = s.through_cache(g, "reduce", [&] {
                const auto r = fold_core(g);
                return Json{{"core", graph_to_json(r.core)}, {"trace", trace_to_json(r.trace)}, {"kept", cli::labels_of(g, r.kept)}};
            });
            s.emit(j, "reduce-" + cli::file_stem(file));
            return kExitPass;
        }

        if (homology->parsed()) {
            const auto g = parse_graph_file(file);
            const auto j = s.through_cache(g, "homology-" + complex_kind, [&] {
                Json r = {{"complex", complex_kind}};
                HomologyProfile p;
                if (complex_kind == "nbhd") {
                    const auto nh = neighborhood_homology(g, c.face_budget);
                    p = nh.profile;
                    r["folded_first"] = nh.folded_first;
                } else {
                    p = reduced_homology(hom_k2_complex(g), c.face_budget);
                }
                r["homology"] = homology_to_json(p);
                r["label"] = sphere_label(p);
                const auto d = detail::sphere_dim(p);
                r["sphere_dim"] = d ? Json(*d) : Json(nullptr);
                return r;
            });
            s.emit(j, "homology-" + complex_kind + "-" + cli::file_stem(file));
            return kExitPass;
        }

        if (chi->parsed()) {
            const auto g = parse_graph_file(file);
            const auto j = s.through_cache(g, "chi", [&] {
                const auto r = chromatic_number(g, c.solver_budget_ms);
                Json o = {{"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper}};
                if (r.exact) o["chi"] = r.value();
                o["coloring"] = coloring_to_json(g, r.witness);
                o["clique"] = cli::labels_of(g, r.clique);
                return o;
            });
            s.emit(j, "chi-" + cli::file_stem(file));
            return j["exact"].get<bool>() ? kExitPass : kExitBudget;
        }

        if (checkp->parsed()) {
            const auto g = parse_graph_file(file);
            const auto w = property_P_violation(g);
            Json j = {{"property_P", !w}};
            if (w)
                j["witness"] = {{"v1", g.label((*w)[0])}, {"w1", g.label((*w)[1])}, {"v2", g.label((*w)[2])}, {"w2", g.label((*w)[3])}};
            else
                j["witness"] = nullptr;
            s.emit(j, "check-p-" + cli::file_stem(file));
            return w ? kExitFail : kExitPass;
        }

        if (verify->parsed()) {
            Verdict v;
            Json params;
            if (v_main2->parsed()) {
                params = {{"T", file}, {"m", vm}};
                v = verify_main2(parse_graph_file(file), vm, c);
            } else if (v_general->parsed()) {
                params = {{"T", file}, {"m", vm}, {"r", vr}, {"A", va}};
                v = verify_generalmain(parse_graph_file(file), vm, PathSpec(vr, std::set<int>(va.begin(), va.end())), c);
            } else if (v_cormain->parsed()) {
                params = {{"n", vn}, {"m", vm}, {"r", vr}, {"i", vi}};
                v = verify_cormain(vn, vm, vr, vi, c);
            } else if (v_sharp->parsed()) {
                params = {{"n", vn}, {"m", vm}};
                v = verify_doubesharp(vn, vm, c);
            } else if (v_new->parsed()) {
                params = {{"n", vn}, {"m", vm}, {"host", host_file.empty() ? Json(nullptr) : Json(host_file)}};
                std::optional<Graph> host;
                if (!host_file.empty()) host = parse_graph_file(host_file);
                v = verify_doublenew(vn, vm, host, c);
            } else if (v_hed->parsed()) {
                params = {{"G", g_file.empty() ? Json("grotzsch") : Json(g_file)}, {"H", h_files}, {"n", vn}};
                const auto g = g_file.empty() ? cli::grotzsch() : parse_graph_file(g_file);
                std::vector<std::pair<std::string, Graph>> pool;
                if (h_files.empty()) pool = cli::builtin_hedetniemi_pool();
                for (const auto& h : h_files) pool.emplace_back(cli::file_stem(h), parse_graph_file(h));
                v = verify_hedetniemi(g, pool, vn, c);
            } else if (v_lovasz->parsed()) {
                params = {{"G", g_file}};
                v = lovasz_report(parse_graph_file(g_file), c);
            }
            Json j = v.to_json(c, s.timing);
            j["params"] = params;
            s.emit(j, "verify-" + v.theorem_id + "-" + hex64(fnv1a(params.dump())).substr(0, 8));
            return cli::verdict_exit(v);
        }

        if (cache->parsed()) {
            const Cache store(c.cache_dir);
            if (c_ls->parsed()) s.emit({{"dir", c.cache_dir}, {"entries", store.list()}}, "cache-ls");
            if (c_clear->parsed()) s.emit({{"dir", c.cache_dir}, {"removed", store.clear()}}, "cache-clear");
            return kExitPass;
        }
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "io error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "no command\n";
    return kExitUsage;
}

inline int run_command(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_command(args, out, err);
}

}  // namespace foldhom
