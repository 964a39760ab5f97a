#pragma once

#include <cstdint>
#include <string_view>

namespace lhf {

/// Finalizer from the splitmix64 generator. Used as the canonical integer
/// mixer so that hashes and content digests are identical across platforms
/// and standard library implementations.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t v) {
    return mix64(seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

constexpr std::uint64_t hash_value(std::uint64_t v) { return mix64(v); }
constexpr std::uint64_t hash_value(std::int64_t v) { return mix64(static_cast<std::uint64_t>(v)); }
constexpr std::uint64_t hash_value(std::uint32_t v) { return mix64(v); }
constexpr std::uint64_t hash_value(std::int32_t v) { return mix64(static_cast<std::uint64_t>(v)); }

/// FNV-1a over bytes.
inline std::uint64_t hash_value(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return mix64(h);
}

/// Digest of an ordered range of scalar values. This is the wire-level
/// content digest of a non-nested set: engines that materialize the same
/// sorted sequence produce the same digest regardless of representation.
template <typename It>
std::uint64_t digest_scalar_range(It first, It last) {
    std::uint64_t h = 0x243f6a8885a308d3ull; // digest seed, fixed forever
    for (; first != last; ++first)
        h = hash_combine(h, hash_value(static_cast<std::uint64_t>(*first)));
    return h;
}

/// Digest accumulator for nested sets: fold (key, child digests...) pairs in
/// element order. Child digests are content digests, never indices, so the
/// result is independent of any interning scheme.
class NestedDigest {
public:
    void add_element(std::uint64_t key, const std::uint64_t *child_digests, std::size_t n) {
        std::uint64_t eh = hash_combine(0x452821e638d01377ull, hash_value(key));
        for (std::size_t i = 0; i < n; ++i)
            eh = hash_combine(eh, child_digests[i]);
        state_ = hash_combine(state_, eh);
    }
    std::uint64_t result() const { return state_; }

private:
    std::uint64_t state_ = 0x13198a2e03707344ull; // nested digest seed
};

} // namespace lhf
