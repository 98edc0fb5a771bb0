#pragma once

// Content-addressed result cache: one JSON file per (graph, operation,
// version, config) key. Writes go through a temporary file and a rename, so
// readers never see partial entries.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "foldhom/config.hpp"
#include "foldhom/graph_json.hpp"

namespace foldhom {

/// 64-bit FNV-1a.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

class Cache {
  public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    const std::filesystem::path& dir() const noexcept { return dir_; }

    /// File name for an operation on an object with the given identity key.
    static std::string key(const std::string& object_key, const std::string& op, const Config& cfg) {
        const auto h = fnv1a(object_key + '\x1f' + op + '\x1f' + kVersion + '\x1f' + cfg.fingerprint());
        return op + "-" + hex64(h) + ".json";
    }

    std::optional<Json> lookup(const std::string& key) const {
        const auto p = dir_ / key;
        std::error_code ec;
        if (!std::filesystem::exists(p, ec)) {
            if (ec) throw Error("cache: cannot stat " + p.string() + ": " + ec.message());
            return std::nullopt;
        }
        std::ifstream in(p);
        if (!in) throw Error("cache: cannot read " + p.string());
        try {
            return Json::parse(in);
        } catch (const Json::parse_error& e) {
            throw Error("cache: corrupt entry " + p.string() + ": " + e.what());
        }
    }

    void store(const std::string& key, const Json& value) const {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw Error("cache: cannot create " + dir_.string() + ": " + ec.message());
        const auto final_path = dir_ / key;
        auto tmp = final_path;
        tmp += ".tmp" + std::to_string(fnv1a(value.dump()) & 0xffff);
        {
            std::ofstream out(tmp);
            if (!out) throw Error("cache: cannot write " + tmp.string());
            out << value.dump();
            if (!out.flush()) throw Error("cache: short write to " + tmp.string());
        }
        std::filesystem::rename(tmp, final_path, ec);
        if (ec) throw Error("cache: rename failed for " + final_path.string() + ": " + ec.message());
    }

    /// [{"file":..., "bytes":...}] sorted by file name.
    Json list() const {
        Json out = Json::array();
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec)) return out;
        std::vector<std::pair<std::string, std::uintmax_t>> entries;
        for (const auto& e : std::filesystem::directory_iterator(dir_))
            if (e.is_regular_file() && e.path().extension() == ".json")
                entries.emplace_back(e.path().filename().string(), e.file_size());
        std::sort(entries.begin(), entries.end());
        for (const auto& [f, n] : entries) out.push_back({{"file", f}, {"bytes", n}});
        return out;
    }

    std::size_t clear() const {
        std::size_t n = 0;
        std::error_code ec;
        if (!std::filesystem::exists(dir_, ec)) return 0;
        for (const auto& e : std::filesystem::directory_iterator(dir_)) {
            const auto ext = e.path().extension().string();
            if (e.is_regular_file() && (ext == ".json" || ext.rfind(".tmp", 0) == 0)) {
                std::filesystem::remove(e.path());
                ++n;
            }
        }
        return n;
    }

  private:
    std::filesystem::path dir_;
};

/// Cached computation: returns the stored value, or computes and stores it.
/// `hit` reports which happened.
template <class Fn>
Json cached(const Cache* cache, const std::string& key, Fn&& compute, bool* hit = nullptr) {
    if (cache) {
        if (auto v = cache->lookup(key)) {
            if (hit) *hit = true;
            return *v;
        }
    }
    if (hit) *hit = false;
    Json v = compute();
    if (cache) cache->store(key, v);
    return v;
}

}  // namespace foldhom
