#pragma once

#include "metafor/util/csv.hpp"
#include "metafor/util/errors.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>

namespace metafor::util {

// Flat key=value configuration. '#' starts a comment, blank lines ignored.
class Config {
public:
    Config() = default;

    static Config from_file(const std::filesystem::path& path) {
        Config cfg;
        for (const auto& raw : read_lines(path)) {
            std::string line = raw.substr(0, raw.find('#'));
            auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = trim(line.substr(0, eq));
            std::string value = trim(line.substr(eq + 1));
            if (!key.empty()) cfg.values_[key] = value;
        }
        return cfg;
    }

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get(const std::string& key) const {
        auto it = values_.find(key);
        if (it == values_.end()) throw UsageError("missing config key: " + key);
        return it->second;
    }

    std::string get_or(const std::string& key, const std::string& fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : it->second;
    }

    long get_int(const std::string& key) const { return std::stol(get(key)); }

    long get_int_or(const std::string& key, long fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : std::stol(it->second);
    }

    double get_double_or(const std::string& key, double fallback) const {
        auto it = values_.find(key);
        return it == values_.end() ? fallback : std::stod(it->second);
    }

    const std::map<std::string, std::string>& items() const { return values_; }

    // Canonical serialization used for config hashing.
    std::string canonical() const {
        std::string out;
        for (const auto& [k, v] : values_) {
            out += k;
            out += '=';
            out += v;
            out += '\n';
        }
        return out;
    }

private:
    static std::string trim(const std::string& s) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }

    std::map<std::string, std::string> values_;
};

} // namespace metafor::util
