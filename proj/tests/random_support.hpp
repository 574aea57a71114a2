#pragma once

#include "eisen/bigint.hpp"
#include "eisen/eisenstein.hpp"

#include <cstdint>
#include <random>

namespace eisen::testing {

inline BigInt random_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return BigInt(std::uniform_int_distribution<std::int64_t>(lo, hi)(rng));
}

inline EisensteinInt random_eisenstein(std::mt19937_64& rng, std::int64_t bound = 1'000'000) {
  return {random_int(rng, -bound, bound), random_int(rng, -bound, bound)};
}

}  // namespace eisen::testing
