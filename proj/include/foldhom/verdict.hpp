#pragma once

// Machine-readable outcome of a verification pipeline.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "foldhom/config.hpp"
#include "foldhom/graph_json.hpp"

namespace foldhom {

struct Check {
    std::string name;
    Json expected;
    Json observed;
    bool pass = false;
    std::string strength;  // "exhaustive" | "sampled(seed,k)" | "skipped"
    std::string note;

    bool skipped() const { return strength == "skipped"; }
};

struct Verdict {
    std::string theorem_id;
    Json instance = Json::object();
    std::vector<Check> checks;
    std::int64_t runtime_ms = 0;

    /// pass iff expected == observed
    Check& add(std::string name, Json expected, Json observed, std::string strength = "exhaustive", std::string note = {}) {
        const bool pass = expected == observed;
        checks.push_back({std::move(name), std::move(expected), std::move(observed), pass, std::move(strength), std::move(note)});
        return checks.back();
    }

    Check& skip(std::string name, Json expected, std::string why) {
        checks.push_back({std::move(name), std::move(expected), "skipped", false, "skipped", std::move(why)});
        return checks.back();
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    /// All non-skipped checks pass, and at least one check ran.
    bool passed() const {
        bool ran = false;
        for (const auto& c : checks) {
            if (c.skipped()) continue;
            ran = true;
            if (!c.pass) return false;
        }
        return ran;
    }

    int exit_code() const { return passed() ? 0 : 1; }

    /// Checks sorted by name. runtime_ms is left out when `with_runtime` is
    /// false, so reports can be compared byte for byte.
    Json to_json(const Config& cfg, bool with_runtime = true) const {
        auto sorted = checks;
        std::stable_sort(sorted.begin(), sorted.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
        Json cs = Json::array();
        for (const auto& c : sorted) {
            Json j = {{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"pass", c.pass},
                      {"strength", c.strength}};
            if (!c.note.empty()) j["note"] = c.note;
            cs.push_back(std::move(j));
        }
        Json out = {{"theorem_id", theorem_id},
                    {"instance", instance},
                    {"checks", cs},
                    {"pass", passed()},
                    {"seed", cfg.seed},
                    {"config", cfg.fingerprint()},
                    {"version", kVersion}};
        if (with_runtime) out["runtime_ms"] = runtime_ms;
        return out;
    }
};

/// Times a pipeline body and stores the elapsed milliseconds.
template <class Fn>
Verdict timed(Fn&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = body();
    v.runtime_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

}  // namespace foldhom
