// Copyright 2026 The permdyn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Integer helpers: primality, factorization, Moebius/Euler functions and
// multiplicative orders modulo n.

#ifndef PERMDYN_NUMTHEORY_HPP
#define PERMDYN_NUMTHEORY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "permdyn/errors.hpp"

namespace permdyn {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

/// n together with its prime factorization, primes ascending.
struct OrderFactoring {
  u64 n = 1;
  std::vector<std::pair<u64, unsigned>> factors;

  u64 product() const {
    u64 r = 1;
    for (auto [prime, e] : factors)
      for (unsigned i = 0; i < e; ++i) r *= prime;
    return r;
  }
};

namespace nt {

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw GuardExceeded("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

inline u64 checked_pow(u64 base, u64 e) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = checked_mul(r, base);
  return r;
}

inline u64 mulmod(u64 a, u64 b, u64 n) {
  return static_cast<u64>(static_cast<u128>(a) * b % n);
}

inline u64 powmod(u64 b, u64 e, u64 n) {
  if (n == 1) return 0;
  u64 r = 1;
  b %= n;
  while (e) {
    if (e & 1) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// Brent's variant of Pollard rho; n must be odd and composite.
inline u64 pollard_rho(u64 n, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(1, n - 1);
  for (;;) {
    const u64 c = dist(rng);
    u64 y = dist(rng), g = 1, r = 1, q = 1, x = 0, ys = 0;
    const u64 m = 128;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_into(u64 n, std::vector<u64>& primes, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = pollard_rho(n, rng);
  split_into(d, primes, rng);
  split_into(n / d, primes, rng);
}

}  // namespace detail

/// Trial division up to 10^6, then Pollard rho with a fixed seed.
inline OrderFactoring factorize(u64 n) {
  if (n == 0) throw PreconditionError("cannot factor 0");
  OrderFactoring out;
  out.n = n;
  std::vector<u64> primes;
  u64 m = n;
  for (u64 d = 2; d <= 1000000 && d * d <= m; d += (d == 2 ? 1 : 2)) {
    while (m % d == 0) {
      primes.push_back(d);
      m /= d;
    }
  }
  if (m > 1) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    detail::split_into(m, primes, rng);
  }
  std::sort(primes.begin(), primes.end());
  for (u64 pr : primes) {
    if (!out.factors.empty() && out.factors.back().first == pr)
      ++out.factors.back().second;
    else
      out.factors.emplace_back(pr, 1);
  }
  return out;
}

inline std::vector<u64> divisors(const OrderFactoring& f) {
  std::vector<u64> ds{1};
  for (auto [pr, e] : f.factors) {
    const std::size_t base = ds.size();
    u64 pw = 1;
    for (unsigned i = 0; i < e; ++i) {
      pw *= pr;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

inline int mobius(u64 n) {
  const auto f = factorize(n);
  for (auto [pr, e] : f.factors)
    if (e > 1) return 0;
  return f.factors.size() % 2 ? -1 : 1;
}

inline u64 euler_phi(u64 n) {
  u64 r = n;
  for (auto [pr, e] : factorize(n).factors) r = r / pr * (pr - 1);
  return r;
}

/// ord_n(a): least r > 0 with a^r = 1 mod n. Requires gcd(a, n) = 1.
inline u64 mult_order_mod(u64 a, u64 n) {
  if (n == 0) throw PreconditionError("ord_0 is undefined");
  if (n == 1) return 1;
  if (std::gcd(a % n, n) != 1)
    throw PreconditionError("ord_n(a) needs gcd(a, n) = 1 (a=" + std::to_string(a) +
                            ", n=" + std::to_string(n) + ")");
  u64 e = euler_phi(n);
  for (auto [pr, mult] : factorize(e).factors) {
    (void)mult;
    while (e % pr == 0 && powmod(a, e / pr, n) == 1) e /= pr;
  }
  return e;
}

/// Inverse of a modulo n; requires gcd(a, n) = 1.
inline u64 mod_inverse(u64 a, u64 n) {
  if (n == 1) return 0;
  i128 t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    const i128 qt = r / new_r;
    t -= qt * new_t;
    std::swap(t, new_t);
    r -= qt * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw PreconditionError("no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
  if (t < 0) t += n;
  return static_cast<u64>(t);
}

/// |C_k| = sum_{d | k} mu(k/d) q^d: elements of degree exactly k over F_q.
inline u64 count_degree_k_elements(u64 q, u64 k) {
  i128 total = 0;
  for (u64 d : divisors(k)) total += static_cast<i128>(mobius(k / d)) * checked_pow(q, d);
  return static_cast<u64>(total);
}

/// |I_k|, the necklace count.
inline u64 count_irreducibles(u64 q, u64 k) { return count_degree_k_elements(q, k) / k; }

inline std::string to_string(const OrderFactoring& f) {
  std::string s;
  for (auto [pr, e] : f.factors) {
    if (!s.empty()) s += " * ";
    s += std::to_string(pr);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

}  // namespace nt
}  // namespace permdyn

#endif  // PERMDYN_NUMTHEORY_HPP
