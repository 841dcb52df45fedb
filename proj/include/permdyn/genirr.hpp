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

// Iterated construction f_i = P * f_{i-1} and lower bounds on its length.

#ifndef PERMDYN_GENIRR_HPP
#define PERMDYN_GENIRR_HPP

#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permdyn/dynamics.hpp"
#include "permdyn/errors.hpp"
#include "permdyn/field_core.hpp"
#include "permdyn/numtheory.hpp"
#include "permdyn/orders.hpp"
#include "permdyn/permgroup.hpp"

namespace permdyn {

/// num/den in lowest terms.
struct Rational {
  u64 num = 0;
  u64 den = 1;

  static Rational make(u64 n, u64 d) {
    detail::require(d != 0, "zero denominator");
    const u64 g = std::gcd(n, d);
    return {n / (g ? g : 1), d / (g ? g : 1)};
  }
  u64 ceil() const { return (num + den - 1) / den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct GenReport {
  Poly seed;
  PermPoly perm;
  std::vector<Poly> produced;
  std::optional<u64> period;  // absent when max_steps ran out first
  std::optional<Rational> bound;
};

/// Iterates f -> P * f from f0 until it returns to f0, for at most max_steps
/// applications (default |I_k| + 1).
inline GenReport iterate_generation(const FieldCtx& ctx, const PermPoly& P, const Poly& f0,
                                    std::optional<u64> max_steps = std::nullopt,
                                    std::optional<Rational> bound = std::nullopt) {
  const u64 limit = max_steps ? *max_steps : nt::count_irreducibles(ctx.q(), ctx.k()) + 1;
  GenReport rep{f0, P, {f0}, std::nullopt, bound};
  Poly cur = f0;
  for (u64 step = 1; step <= limit; ++step) {
    cur = star(ctx, P, cur);
    if (cur == f0) {
      rep.period = step;
      break;
    }
    rep.produced.push_back(cur);
  }
  if (rep.period && rep.bound)
    detail::ensure(*rep.period >= rep.bound->ceil(), "observed period is below the claimed bound");
  return rep;
}

/// ord_r(n)/k with r = (q^k - 1)/(q - 1) prime.
inline Rational bound_monomial(u64 q, unsigned k, u64 n) {
  const u64 Qm1 = nt::checked_pow(q, k) - 1;
  const u64 r = Qm1 / (q - 1);
  detail::require(nt::is_prime(r), "r = (q^k - 1)/(q - 1) = " + std::to_string(r) + " is not prime");
  detail::require(std::gcd(n, Qm1) == 1, "x^n needs gcd(n, q^k - 1) = 1");
  return Rational::make(nt::mult_order_mod(n, r), k);
}

/// E_k = (x^k - 1)/(x - 1).
inline Poly cyclotomic_E(const PolyRing& R, unsigned k) { return R.div_exact(R.x_pow_minus_one(k), R.from_ints({-1, 1})); }

/// O(g, E_k)/k with E_k irreducible.
inline Rational bound_linearized(const PolyRing& R, unsigned k, const Poly& g) {
  detail::require(k >= 2, "k must be at least 2");
  const Poly E = cyclotomic_E(R, k);
  detail::require(R.is_irreducible(E), "E_k is reducible over F_q");
  detail::require(!g.is_zero() && R.gcd(g, R.x_pow_minus_one(k)) == R.one(), "L_g needs gcd(g, x^k - 1) = 1");
  return Rational::make(poly_order(R, g, E), k);
}

/// Lower bound on the order of x + a modulo E_k, by characteristic.
inline double tau(u64 p, u64 k) {
  detail::require(nt::is_prime(p), "p must be prime");
  detail::require(k >= 2, "tau needs k >= 2");
  const double kd = static_cast<double>(k);
  if (p == 2) return std::pow(2.0, std::sqrt(2.0 * (kd - 2.0)) - 2.0);
  if (p == 3) return std::pow(3.0, std::sqrt(3.0 * (kd - 2.0)) - 2.0);
  return std::pow(5.0, std::sqrt((kd - 2.0) / 2.0) - 2.0);
}

inline u64 tau_ceiling_over_k(u64 p, u64 k) { return static_cast<u64>(std::ceil(tau(p, k) / static_cast<double>(k))); }

/// H with L_H the linearized permutation of the final construction:
/// q = 2 gives H = E_k + x + 1, otherwise H = x - a with a the element of code 2.
inline Poly choose_H(const PolyRing& R, unsigned k) {
  detail::require(nt::is_prime(k), "k must be prime");
  detail::require(std::gcd(R.q(), static_cast<u64>(k)) == 1 && nt::mult_order_mod(R.q() % k, k) == k - 1,
                  "q must be a primitive root modulo k");
  if (R.q() == 2) {
    const Poly H = R.add(cyclotomic_E(R, k), R.from_ints({1, 1}));
    detail::require(R.eval(H, R.field().one()) == R.field().from_int(static_cast<i64>(k)), "H(1) != k");
    return H;
  }
  return R.sub(R.x(), R.constant(Scalar{2}));
}

inline PermPoly choose_LH(const FieldCtx& ctx) {
  const PolyRing& R = ctx.ring();
  const Poly H = choose_H(R, ctx.k());
  detail::require(R.gcd(H, R.x_pow_minus_one(ctx.k())) == R.one(), "gcd(H, x^k - 1) != 1");
  return make_linearized(ctx, H);
}

}  // namespace permdyn

#endif  // PERMDYN_GENIRR_HPP
