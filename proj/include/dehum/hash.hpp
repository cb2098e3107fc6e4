#ifndef DEHUM_HASH_HPP
#define DEHUM_HASH_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace dehum {

// FNV-1a 64-bit; used for stage cache keys, not for anything adversarial.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hash_hex(std::uint64_t h);

// Streams the file; throws dehum::Error if unreadable.
std::string file_hash_hex(const std::string& path);

} // namespace dehum

#endif
