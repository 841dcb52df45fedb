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

// Orders attached to irreducible polynomials.
//
// All orders are found by factor-and-strip: start from a known multiple
// (q^k - 1, x^k - 1 or Phi_q(g)) and remove prime factors while the
// reduced candidate still annihilates.

#ifndef PERMDYN_ORDERS_HPP
#define PERMDYN_ORDERS_HPP

#include <string>
#include <vector>

#include "permdyn/errors.hpp"
#include "permdyn/numtheory.hpp"
#include "permdyn/poly.hpp"

namespace permdyn {

namespace detail {

inline void require_irreducible(const PolyRing& R, const Poly& f) {
  require(f.degree() >= 1, "expected an irreducible polynomial, got a constant");
  require(f.lead() == R.field().one(), "expected a monic polynomial");
  require(R.is_irreducible(f), "polynomial is reducible");
}

}  // namespace detail

/// ord(f): the multiplicative order of a root of f. f irreducible, f != x.
inline u64 mult_order(const PolyRing& R, const Poly& f) {
  detail::require_irreducible(R, f);
  detail::require(f != R.x(), "ord(x) is undefined");
  const u64 n = nt::checked_pow(R.q(), static_cast<u64>(f.degree())) - 1;
  u64 e = n;
  for (auto [r, mult] : nt::factorize(n).factors) {
    (void)mult;
    while (e % r == 0 && R.powmod(R.x(), e / r, f) == R.one()) e /= r;
  }
  return e;
}

/// L_h(alpha) for the root alpha = y of f, computed in F_q[y]/(f). conj[i] = y^{q^i} mod f.
inline Poly linearized_at_root(const PolyRing& R, const Poly& h, const std::vector<Poly>& conj, const Poly& f) {
  Poly r;
  for (std::size_t i = 0; i < h.c.size(); ++i)
    if (h.c[i].code != 0) r = R.add(r, R.scale(conj[i % conj.size()], h.c[i]));
  return R.mod(r, f);
}

/// Conjugates y^{q^i} mod f for i < deg f.
inline std::vector<Poly> root_conjugates(const PolyRing& R, const Poly& f) {
  std::vector<Poly> conj{R.mod(R.x(), f)};
  for (int i = 1; i < f.degree(); ++i) conj.push_back(R.powmod(conj.back(), R.q(), f));
  return conj;
}

/// Ord(f): the least-degree monic h | x^k - 1 with L_h(alpha) = 0.
inline Poly fq_order(const PolyRing& R, const Poly& f) {
  detail::require_irreducible(R, f);
  const std::size_t k = static_cast<std::size_t>(f.degree());
  const auto conj = root_conjugates(R, f);
  Poly h = R.x_pow_minus_one(k);
  for (const auto& [phi, mult] : R.factor(h)) {
    for (unsigned i = 0; i < mult; ++i) {
      const Poly cand = R.div_exact(h, phi);
      if (!linearized_at_root(R, cand, conj, f).is_zero()) break;
      h = cand;
    }
  }
  return h;
}

/// Phi_q(g) = |(F_q[x]/(g))^*|.
inline u64 phi_q(const PolyRing& R, const Poly& g) {
  detail::require(g.degree() >= 1, "Phi_q of a constant is undefined");
  u64 r = 1;
  for (const auto& [h, s] : R.factor(g)) {
    const u64 qd = nt::checked_pow(R.q(), static_cast<u64>(h.degree()));
    r = nt::checked_mul(r, nt::checked_mul(nt::checked_pow(qd, s - 1), qd - 1));
  }
  return r;
}

/// O(f, g): least j > 0 with f^j = 1 mod g. Requires gcd(f, g) = 1.
inline u64 poly_order(const PolyRing& R, const Poly& f, const Poly& g) {
  detail::require(g.degree() >= 1, "O(f, g) needs deg g >= 1");
  detail::require(!f.is_zero() && R.gcd(f, g) == R.one(), "O(f, g) needs gcd(f, g) = 1");
  const u64 n = phi_q(R, g);
  u64 e = n;
  for (auto [r, mult] : nt::factorize(n).factors) {
    (void)mult;
    while (e % r == 0 && R.powmod(f, e / r, g) == R.mod(R.one(), g)) e /= r;
  }
  return e;
}

/// prod_{i<k} alpha^{q^i} for a root alpha of f.
inline Scalar norm_of(const PolyRing& R, const Poly& f) {
  detail::require_irreducible(R, f);
  Poly r = R.mod(R.one(), f);
  for (const Poly& c : root_conjugates(R, f)) r = R.mulmod(r, c, f);
  detail::ensure(r.degree() <= 0, "norm does not lie in F_q");
  return r[0];
}

/// sum_{i<k} alpha^{q^i} for a root alpha of f.
inline Scalar trace_of(const PolyRing& R, const Poly& f) {
  detail::require_irreducible(R, f);
  Poly r;
  for (const Poly& c : root_conjugates(R, f)) r = R.add(r, c);
  r = R.mod(r, f);
  detail::ensure(r.degree() <= 0, "trace does not lie in F_q");
  return r[0];
}

inline bool is_primitive(const PolyRing& R, const Poly& f) {
  if (f == R.x()) return false;
  return mult_order(R, f) == nt::checked_pow(R.q(), static_cast<u64>(f.degree())) - 1;
}

inline bool is_normal(const PolyRing& R, const Poly& f) {
  return fq_order(R, f) == R.x_pow_minus_one(static_cast<std::size_t>(f.degree()));
}

}  // namespace permdyn

#endif  // PERMDYN_ORDERS_HPP
