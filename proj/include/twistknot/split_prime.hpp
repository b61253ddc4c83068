#pragma once

#include <vector>

#include "twistknot/modular.hpp"

namespace tk {

// Prime r = 1 mod q with b a fixed element of order q; defines Z[zeta_q] -> Z_r, zeta -> b.
struct SplitPrime {
  u64 r = 0;
  u64 q = 0;
  u64 b = 0;
  friend bool operator==(const SplitPrime&, const SplitPrime&) = default;
};

// First `count` primes r = 1 mod q with min_r <= r < max_r, each paired with the
// smallest element of order q.
std::vector<SplitPrime> find_split_primes(u64 q, std::size_t count, u64 min_r = 2, u64 max_r = 10000);

inline SplitPrime split_prime(u64 r, u64 q) { return {r, q, smallest_root_of_order(q, r)}; }

}  // namespace tk
