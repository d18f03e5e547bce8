#pragma once

// Random valid (a, c, d, n) for property tests.

#include <cstdint>
#include <numeric>
#include <random>

#include "semitail/core.hpp"

namespace semitail::testing {

struct RandomParams {
  std::int64_t a, c, d;
  std::size_t n;
  TailMonoid monoid() const { return TailMonoid(validate_params(a, c, d), n); }
};

inline RandomParams random_params(std::mt19937_64& rng, std::int64_t max_a = 6, std::int64_t max_c = 64,
                                  std::size_t max_n = 6) {
  std::uniform_int_distribution<std::int64_t> da(2, max_a), dc(1, max_c);
  std::uniform_int_distribution<std::size_t> dn(1, max_n);
  for (;;) {
    const auto a = da(rng), c = dc(rng);
    std::uniform_int_distribution<std::int64_t> dd(1, c * a - 1);
    const auto d = dd(rng);
    if (std::gcd(d, a) != 1 || std::gcd(d, c) != 1) continue;
    return {a, c, d, dn(rng)};
  }
}

}  // namespace semitail::testing
