#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

namespace solvlat::testing {

/// Seed for randomized property tests; override with SOLVLAT_SEED=<u64>.
inline std::uint64_t test_seed()
{
    if (const char* s = std::getenv("SOLVLAT_SEED")) return std::stoull(s);
    return 20260101ULL;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64(test_seed() ^ (salt * 0x9E3779B97F4A7C15ULL)); }

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace solvlat::testing
