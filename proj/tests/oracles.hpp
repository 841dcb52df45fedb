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

// Brute-force reference implementations over prime fields.
//
// Nothing here uses the library: polynomials are plain integer vectors, the
// field F_{p^k} is F_p[y]/(g) with schoolbook arithmetic, irreducibility is
// trial division, and gcds against x^{p^k} - x materialize that polynomial.

#ifndef PERMDYN_TESTS_ORACLES_HPP
#define PERMDYN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using ll = long long;
using IP = std::vector<ll>;  // ascending coefficients mod p, no trailing zeros

inline ll md(ll a, ll p) { return ((a % p) + p) % p; }

inline IP trim(IP a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline int deg(const IP& a) { return static_cast<int>(a.size()) - 1; }

inline ll inv_mod(ll a, ll p) {
  a = md(a, p);
  for (ll x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  throw std::runtime_error("oracle: no inverse");
}

inline IP add(const IP& a, const IP& b, ll p) {
  IP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] + b[i], p);
  return trim(r);
}

inline IP sub(const IP& a, const IP& b, ll p) {
  IP r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
  return trim(r);
}

inline IP mul(const IP& a, const IP& b, ll p) {
  if (a.empty() || b.empty()) return {};
  IP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

inline std::pair<IP, IP> divmod(IP a, const IP& b, ll p) {
  if (b.empty()) throw std::runtime_error("oracle: division by zero");
  a = trim(a);
  if (deg(a) < deg(b)) return {{}, a};
  IP q(a.size() - b.size() + 1, 0);
  const ll il = inv_mod(b.back(), p);
  for (int i = deg(a); i >= deg(b); --i) {
    const ll t = a[i] * il % p;
    q[i - deg(b)] = t;
    for (int j = 0; j <= deg(b); ++j) a[i - deg(b) + j] = md(a[i - deg(b) + j] - t * b[j], p);
  }
  a.resize(b.size() - 1);
  return {trim(q), trim(a)};
}

inline IP mod(const IP& a, const IP& b, ll p) { return divmod(a, b, p).second; }

inline IP monic(IP a, ll p) {
  if (a.empty()) return a;
  const ll il = inv_mod(a.back(), p);
  for (ll& c : a) c = c * il % p;
  return a;
}

inline IP gcd(IP a, IP b, ll p) {
  while (!b.empty()) {
    IP r = mod(a, b, p);
    a = b;
    b = r;
  }
  return monic(a, p);
}

inline IP xpow(std::size_t n) {
  IP r(n + 1, 0);
  r[n] = 1;
  return r;
}

inline IP powmod(IP b, unsigned long long e, const IP& m, ll p) {
  IP r = mod({1}, m, p);
  b = mod(b, m, p);
  while (e) {
    if (e & 1) r = mod(mul(r, b, p), m, p);
    b = mod(mul(b, b, p), m, p);
    e >>= 1;
  }
  return r;
}

inline IP compose(const IP& f, const IP& P, ll p) {
  IP r;
  for (std::size_t i = f.size(); i-- > 0;) r = add(mul(r, P, p), IP{f[i]}, p);
  return r;
}

inline ll eval(const IP& f, ll x, ll p) {
  ll r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (r * x + f[i]) % p;
  return r;
}

inline ll ipow(ll b, unsigned e) {
  ll r = 1;
  while (e--) r *= b;
  return r;
}

/// Monic degree-k polynomial with lower coefficients the base-p digits of code.
inline IP monic_from_code(ll code, int k, ll p) {
  IP f(k + 1, 0);
  for (int i = 0; i < k; ++i) {
    f[i] = code % p;
    code /= p;
  }
  f[k] = 1;
  return f;
}

/// Trial division by every monic polynomial of degree 1..n/2.
inline bool is_irreducible(const IP& f, ll p) {
  const int n = deg(f);
  if (n < 1) throw std::runtime_error("oracle: constant");
  for (int d = 1; 2 * d <= n; ++d)
    for (ll code = 0; code < ipow(p, d); ++code)
      if (mod(f, monic_from_code(code, d, p), p).empty()) return false;
  return true;
}

inline std::vector<IP> irreducibles(ll p, int k) {
  std::vector<IP> out;
  for (ll code = 0; code < ipow(p, k); ++code) {
    IP f = monic_from_code(code, k, p);
    if (is_irreducible(f, p)) out.push_back(f);
  }
  return out;
}

inline int mobius(ll n) {
  int r = 1;
  for (ll d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

/// F_{p^k} = F_p[y]/(g); elements are codes sum c_i p^i.
struct Field {
  ll p;
  int k;
  IP g;
  ll Q;

  Field(ll p_, const IP& g_) : p(p_), k(deg(g_)), g(g_), Q(ipow(p_, deg(g_))) {}

  IP elem(ll code) const {
    IP e;
    for (int i = 0; i < k; ++i) {
      e.push_back(code % p);
      code /= p;
    }
    return trim(e);
  }
  ll code(const IP& e) const {
    ll c = 0;
    for (std::size_t i = e.size(); i-- > 0;) c = c * p + e[i];
    return c;
  }
  ll mul(ll a, ll b) const { return code(mod(oracle::mul(elem(a), elem(b), p), g, p)); }
  ll add(ll a, ll b) const { return code(oracle::add(elem(a), elem(b), p)); }
  ll pow(ll a, unsigned long long e) const {
    ll r = 1;
    while (e--) r = mul(r, a);
    return r;
  }
  /// P(a) for P over F_p by Horner.
  ll eval(const IP& P, ll a) const {
    ll r = 0;
    for (std::size_t i = P.size(); i-- > 0;) r = add(mul(r, a), P[i]);
    return r;
  }
  /// Least s with a^{p^s} = a.
  int degree(ll a) const {
    ll t = a;
    for (int s = 1;; ++s) {
      t = pow(t, static_cast<unsigned long long>(p));
      if (t == a) return s;
    }
  }
  /// Minimal polynomial by searching irreducibles of degree deg(a) for one vanishing at a.
  IP minpoly(ll a) const {
    for (const IP& f : irreducibles(p, degree(a)))
      if (eval(f, a) == 0) return f;
    throw std::runtime_error("oracle: no minimal polynomial");
  }
};

/// gcd(f(P), x^{p^k} - x) with x^{p^k} - x written out in full.
inline IP star_full_gcd(ll p, int k, const IP& P, const IP& f) {
  const IP field_poly = sub(xpow(static_cast<std::size_t>(ipow(p, k))), xpow(1), p);
  return gcd(compose(f, P, p), field_poly, p);
}

/// (length, count) summary of a permutation table.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_summary(const std::vector<ll>& perm) {
  std::map<std::uint64_t, std::uint64_t> counts;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    std::uint64_t len = 0;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c])) {
      seen[c] = true;
      ++len;
    }
    ++counts[len];
  }
  return {counts.begin(), counts.end()};
}

/// Incremental multiplicative order of a mod n.
inline ll mult_order(ll a, ll n) {
  if (n == 1) return 1;
  ll x = md(a, n), e = 1;
  while (x != 1) {
    x = x * md(a, n) % n;
    ++e;
    if (e > n) throw std::runtime_error("oracle: not a unit");
  }
  return e;
}

}  // namespace oracle

#endif  // PERMDYN_TESTS_ORACLES_HPP
