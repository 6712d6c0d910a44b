#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace coanet {

/// Streaming 64-bit FNV-1a.
class Fnv64 {
public:
    void update(std::string_view bytes) {
        for (unsigned char c : bytes) {
            state_ ^= c;
            state_ *= 0x100000001b3ULL;
        }
    }

    std::uint64_t digest() const { return state_; }

    /// 16 lowercase hex digits.
    std::string hex_digest() const;

private:
    std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

inline std::uint64_t fnv64(std::string_view bytes) {
    Fnv64 h;
    h.update(bytes);
    return h.digest();
}

} // namespace coanet
