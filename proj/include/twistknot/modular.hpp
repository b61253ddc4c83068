#pragma once

#include <cstdint>
#include <vector>

namespace tk {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}
inline u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

// Reduce a signed integer into [0, m).
inline u64 to_mod(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

u64 pow_mod(u64 a, u64 e, u64 m);
u64 inv_mod(u64 a, u64 m);  // throws DomainError when not invertible
bool is_prime(u64 n);       // deterministic for 64-bit inputs

// Smallest element of exact order k in (Z/r)^*, k | r-1 and k prime.
u64 smallest_root_of_order(u64 k, u64 r);

// Primes below `below` with r = 1 mod q, descending from the bound.
std::vector<u64> descending_primes_1_mod(u64 q, u64 below, std::size_t count);

// Symmetric lift of a residue into (-m/2, m/2].
inline i64 symmetric_lift(u64 a, u64 m) {
  return a > m / 2 ? static_cast<i64>(a) - static_cast<i64>(m) : static_cast<i64>(a);
}

}  // namespace tk
