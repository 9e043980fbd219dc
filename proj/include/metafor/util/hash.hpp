#pragma once

#include "metafor/util/csv.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace metafor::util {

// FNV-1a 64-bit; used for artifact change detection, not security.
inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ULL) {
    uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string hash_hex(std::string_view data) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
    return std::string(buf);
}

inline std::string hash_file(const std::filesystem::path& path) {
    return hash_hex(read_text(path));
}

} // namespace metafor::util
