#pragma once

#include <cstdint>
#include <random>

namespace cdens {

// Fixed seed-splitting rule: one user-facing seed fans out to independent
// per-component streams, so adding parallelism never changes results.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Derives the seed for stream `index` of component `tag` under `root`.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag, std::uint64_t index = 0) {
    return splitmix64(splitmix64(root ^ splitmix64(tag)) + index);
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Component tags for derive_seed; fixed so outputs never shift between runs.
namespace seed_tag {
inline constexpr std::uint64_t kSplit = 1;
inline constexpr std::uint64_t kForestTree = 2;
inline constexpr std::uint64_t kCvFolds = 3;
inline constexpr std::uint64_t kRfe = 4;
inline constexpr std::uint64_t kBootstrap = 5;
}  // namespace seed_tag

// Fisher-Yates shuffle; std::shuffle's draw pattern is unspecified, this one
// is pinned so seeded runs are reproducible across standard libraries.
template <typename Vec, typename Rng>
void deterministic_shuffle(Vec& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(v[i - 1], v[j]);
    }
}

// Uniform draw in [0, n) without std::uniform_int_distribution (whose
// algorithm is implementation-defined).
template <typename Rng>
std::size_t draw_index(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

}  // namespace cdens
