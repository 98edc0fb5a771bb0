#pragma once

// Run configuration. Every field can be overridden from the environment
// with the FOLDHOM_ prefix (FOLDHOM_VERTEX_BUDGET, FOLDHOM_SEED, ...).

#include <cstdint>
#include <cstdlib>
#include <string>

#include "foldhom/errors.hpp"

namespace foldhom {

inline constexpr const char* kVersion = "0.3.0";

struct Config {
    std::uint64_t vertex_budget = 300'000;
    std::uint64_t face_budget = 2'000'000;
    std::int64_t solver_budget_ms = 60'000;
    std::uint64_t seed = 1;
    std::uint64_t sample_pairs = 1'000'000;       // sampled edge checks of explicit colorings
    std::uint64_t certificate_samples = 10'000;   // sampled fold certificates
    std::string cache_dir = ".foldhom-cache";
    std::string report_dir;  // empty: stdout only

    void validate() const {
        if (vertex_budget == 0 || face_budget == 0 || solver_budget_ms <= 0 || sample_pairs == 0 ||
            certificate_samples == 0)
            throw PreconditionError("budgets must be positive");
    }

    /// Fields that change results; part of every cache key.
    std::string fingerprint() const {
        return "v=" + std::to_string(vertex_budget) + ";f=" + std::to_string(face_budget) +
               ";s=" + std::to_string(solver_budget_ms) + ";seed=" + std::to_string(seed) +
               ";p=" + std::to_string(sample_pairs) + ";c=" + std::to_string(certificate_samples);
    }
};

namespace detail {

template <class T>
void env_number(const char* name, T& field) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    char* end = nullptr;
    const long long x = std::strtoll(v, &end, 10);
    if (*end != '\0' || x <= 0) throw PreconditionError(std::string(name) + " must be a positive integer");
    field = static_cast<T>(x);
}

inline void env_string(const char* name, std::string& field) {
    if (const char* v = std::getenv(name)) field = v;
}

}  // namespace detail

inline Config config_from_env(Config c = {}) {
    detail::env_number("FOLDHOM_VERTEX_BUDGET", c.vertex_budget);
    detail::env_number("FOLDHOM_FACE_BUDGET", c.face_budget);
    detail::env_number("FOLDHOM_SOLVER_BUDGET_MS", c.solver_budget_ms);
    detail::env_number("FOLDHOM_SEED", c.seed);
    detail::env_number("FOLDHOM_SAMPLE_PAIRS", c.sample_pairs);
    detail::env_number("FOLDHOM_CERTIFICATE_SAMPLES", c.certificate_samples);
    detail::env_string("FOLDHOM_CACHE_DIR", c.cache_dir);
    detail::env_string("FOLDHOM_REPORT_DIR", c.report_dir);
    c.validate();
    return c;
}

}  // namespace foldhom
