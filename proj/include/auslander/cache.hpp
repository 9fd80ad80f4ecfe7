#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "auslander/field.hpp"
#include "auslander/rng.hpp"

namespace ausl {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string content_hash(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(s)));
    return std::string(buf);
}

/// Content-addressed JSON store for recomputable results (enumerations, Ext
/// tables, resolutions). Entries are immutable; duplicate puts of equal
/// values are fine. A fraction of hits is re-derived and compared
/// byte-for-byte, so a corrupt cache surfaces as an invariant violation
/// instead of a wrong answer.
class DiskCache {
public:
    DiskCache() = default;
    DiskCache(std::string dir, bool enabled, std::uint32_t audit_percent, std::uint64_t seed)
        : dir_(std::move(dir)), enabled_(enabled && !dir_.empty()),
          audit_percent_(audit_percent), audit_rng_(seed ^ 0x9e3779b97f4a7c15ull) {
        if (enabled_) std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return enabled_; }
    std::uint32_t hits() const { return hits_; }
    std::uint32_t misses() const { return misses_; }
    std::uint32_t audited() const { return audited_; }

    /// Fetch-or-compute. `compute` must be deterministic in the key.
    template <class F>
    nlohmann::ordered_json get_or_compute(const std::string& key, F&& compute) {
        if (!enabled_) return compute();
        std::string path = dir_ + "/" + content_hash(key) + ".json";
        std::ifstream in(path);
        if (in) {
            nlohmann::ordered_json cached;
            try {
                in >> cached;
            } catch (...) {
                throw invariant_error("cache entry unreadable: " + path);
            }
            hits_++;
            if (audit_percent_ && audit_rng_.below(100) < audit_percent_) {
                audited_++;
                nlohmann::ordered_json fresh = compute();
                if (fresh.dump() != cached.dump())
                    throw invariant_error("cache entry differs from recomputation: " + path);
            }
            return cached;
        }
        misses_++;
        nlohmann::ordered_json fresh = compute();
        std::ofstream out(path);
        out << fresh.dump(2) << "\n";
        return fresh;
    }

private:
    std::string dir_;
    bool enabled_ = false;
    std::uint32_t audit_percent_ = 25;
    Rng audit_rng_{0};
    std::uint32_t hits_ = 0, misses_ = 0, audited_ = 0;
};

} // namespace ausl
