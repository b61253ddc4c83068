#include "twistknot/modular.hpp"

#include "twistknot/error.hpp"

namespace tk {

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 qt = r / nr;
    i64 tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = r - qt * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw DomainError("element not invertible modulo " + std::to_string(m));
  return t < 0 ? static_cast<u64>(t + static_cast<i64>(m)) : static_cast<u64>(t);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 smallest_root_of_order(u64 k, u64 r) {
  if ((r - 1) % k != 0) throw DomainError("order does not divide r-1");
  for (u64 b = 2; b < r; ++b) {
    if (pow_mod(b, k, r) == 1) return b;
  }
  throw DomainError("no element of the requested order");
}

std::vector<u64> descending_primes_1_mod(u64 q, u64 below, std::size_t count) {
  std::vector<u64> out;
  u64 r = below - 1;
  r -= (r - 1) % q;
  for (; r > q && out.size() < count; r -= q) {
    if (is_prime(r)) out.push_back(r);
  }
  return out;
}

}  // namespace tk

#include "twistknot/split_prime.hpp"

namespace tk {

std::vector<SplitPrime> find_split_primes(u64 q, std::size_t count, u64 min_r, u64 max_r) {
  if (!is_prime(q)) throw DomainError("split primes need a prime q");
  std::vector<SplitPrime> out;
  for (u64 r = q + 1; r < max_r && out.size() < count; r += q) {
    if (r < min_r || !is_prime(r)) continue;
    out.push_back({r, q, smallest_root_of_order(q, r)});
  }
  return out;
}

}  // namespace tk
