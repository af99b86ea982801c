#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bcjulia {

/// Branch choices draw from std::mt19937_64, whose output sequence is fixed by
/// the standard. Independent streams get seeds from splitmix64.
using Rng = std::mt19937_64;

inline constexpr std::string_view kRngName = "mt19937_64";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed of the `stream`-th independent sub-generator of `seed`.
constexpr std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed ^ splitmix64(stream + 1));
}

}  // namespace bcjulia
