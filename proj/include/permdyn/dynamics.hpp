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

// The actions of G_k on I_k and the dynamics they generate.
//
//   star:     P * f = gcd(f(P(x)), x^{q^k} - x) = m_{P^{-1}(alpha)}
//   diamond:  P <> f = m_{P(alpha)}
//
// Fixed points are counted three ways (direct divisibility, the Moebius sum
// over gcd degrees, and deg gcd(R_k[P], Psi_k) / k) and cycle structures of
// monomial, linearized and Moebius maps have closed forms checked against the
// brute-force functional graphs.

#ifndef PERMDYN_DYNAMICS_HPP
#define PERMDYN_DYNAMICS_HPP

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdyn/errors.hpp"
#include "permdyn/field_core.hpp"
#include "permdyn/numtheory.hpp"
#include "permdyn/orders.hpp"
#include "permdyn/permgroup.hpp"
#include "permdyn/poly.hpp"
#include "permdyn/text.hpp"

namespace permdyn {

using CycleSummary = std::vector<std::pair<u64, u64>>;  // (length, count), lengths ascending

namespace detail {

inline void require_in_ik(const FieldCtx& ctx, const Poly& f) {
  require(f.degree() == static_cast<int>(ctx.k()), "expected a polynomial of degree k = " + std::to_string(ctx.k()));
  require(f.lead() == ctx.base().one(), "expected a monic polynomial");
  require(ctx.ring().is_irreducible(f), format_poly(ctx.base(), f) + " is reducible");
}

inline Poly field_poly(const FieldCtx& ctx) {
  const PolyRing& R = ctx.ring();
  return R.sub(R.monomial(ctx.base().one(), ctx.order()), R.x());
}

inline CycleSummary summarize(std::map<u64, u64> counts) {
  CycleSummary out;
  for (auto [len, cnt] : counts)
    if (cnt) out.emplace_back(len, cnt);
  return out;
}

}  // namespace detail

/// P * f by the gcd formula. f(P) is reduced mod x^{q^k} - x first when its
/// degree would exceed q^k; the gcd with x^{q^k} - x is unchanged.
inline Poly star(const FieldCtx& ctx, const PermPoly& P, const Poly& f) {
  require_same_ctx(ctx, P);
  detail::require_in_ik(ctx, f);
  const PolyRing& R = ctx.ring();
  const u64 full_degree = static_cast<u64>(f.degree()) * static_cast<u64>(std::max(P.poly().degree(), 0));
  const Poly g = full_degree <= ctx.order() ? R.compose(f, P.poly())
                                           : R.compose_mod(f, P.poly(), detail::field_poly(ctx));
  detail::ensure(g.degree() >= 1, "f(P) is constant modulo x^{q^k} - x");
  const Poly h = R.gcd(R.sub(R.frobenius_powmod(R.x(), ctx.k(), g), R.x()), g);
  detail::ensure(h.degree() == static_cast<int>(ctx.k()), "P * f does not have degree k");
  return h;
}

/// Inverse of P's value table: inv[code(P(a))] = code(a).
inline std::vector<u64> inverse_table(const FieldCtx& ctx, const PermPoly& P) {
  require_same_ctx(ctx, P);
  const auto t = ctx.value_table(P.poly());
  std::vector<u64> inv(t.size());
  for (u64 code = 0; code < t.size(); ++code) inv[t[code]] = code;
  return inv;
}

/// P * f through roots: m_beta for the unique beta with P(beta) = alpha.
inline Poly star_by_roots(const FieldCtx& ctx, const PermPoly& P, const Poly& f,
                          const std::vector<u64>* inverse = nullptr) {
  require_same_ctx(ctx, P);
  detail::require_in_ik(ctx, f);
  const ExtElement alpha = find_root(ctx, f);
  if (inverse) return ctx.minimal_poly(ctx.decode((*inverse)[ctx.encode(alpha)]));
  ctx.require_guard("star_by_roots");
  for (u64 code = 0; code < ctx.order(); ++code) {
    const ExtElement beta = ctx.decode(code);
    if (ctx.eval(P.poly(), beta) == alpha) return ctx.minimal_poly(beta);
  }
  throw ConsistencyError("no preimage of a root under a certified permutation");
}

/// P <> f = m_{P(alpha)}.
inline Poly diamond(const FieldCtx& ctx, const PermPoly& P, const Poly& f) {
  require_same_ctx(ctx, P);
  detail::require_in_ik(ctx, f);
  const Poly m = ctx.minimal_poly(ctx.eval(P.poly(), find_root(ctx, f)));
  detail::ensure(m.degree() == static_cast<int>(ctx.k()), "P <> f does not have degree k");
  return m;
}

/// f in I_k with f | x^{q^i} - P for some i < k.
inline std::vector<Poly> fixed_points_direct(const FieldCtx& ctx, const PermPoly& P) {
  require_same_ctx(ctx, P);
  ctx.require_guard("fixed_points_direct");
  const PolyRing& R = ctx.ring();
  std::vector<Poly> out;
  for (const Poly& f : R.enumerate_irreducibles(ctx.k(), ctx.guard())) {
    const Poly Pm = R.mod(P.poly(), f);
    Poly xq = R.mod(R.x(), f);
    for (unsigned i = 0; i < ctx.k(); ++i) {
      // f irreducible: gcd(f, x^{q^i} - P) != 1 iff the difference vanishes mod f
      if (xq == Pm) {
        out.push_back(f);
        break;
      }
      xq = R.powmod(xq, R.q(), f);
    }
  }
  return out;
}

namespace detail {

// sum_{d | k} mu(k/d)/d * S(d), where S(d) is integral; exact or ConsistencyError.
template <class S>
u64 mobius_average(unsigned k, S&& term) {
  i128 total = 0;
  for (u64 d : nt::divisors(k)) {
    const int mu = nt::mobius(k / d);
    if (mu == 0) continue;
    total += static_cast<i128>(mu) * static_cast<i128>(k / d) * static_cast<i128>(term(d));
  }
  ensure(total >= 0 && total % k == 0, "Moebius sum is not a nonnegative integer");
  return static_cast<u64>(total / k);
}

}  // namespace detail

/// n_P by two independent evaluations; they must agree.
inline u64 fixed_count_formula(const FieldCtx& ctx, const PermPoly& P) {
  require_same_ctx(ctx, P);
  ctx.require_guard("fixed_count_formula");
  const PolyRing& R = ctx.ring();
  const unsigned k = ctx.k();
  const u64 q = ctx.q();

  // sum_{d | k} mu(k/d)/d sum_{i<d} deg gcd(x^{q^i} - P, x^{q^d} - x)
  const u64 via_gcds = detail::mobius_average(k, [&](u64 d) {
    u64 s = 0;
    for (u64 i = 0; i < d; ++i) {
      const Poly h = R.sub(R.monomial(ctx.base().one(), nt::checked_pow(q, i)), P.poly());
      if (h.is_zero()) {
        s += nt::checked_pow(q, d);
      } else if (h.degree() >= 1) {
        s += static_cast<u64>(R.gcd(R.sub(R.frobenius_powmod(R.x(), d, h), R.x()), h).degree());
      }
    }
    return s;
  });

  // deg gcd(R_k[P] mod Psi_k, Psi_k) / k
  const Poly psi = R.psi(k, ctx.guard());
  Poly prod = R.mod(R.one(), psi), xq = R.mod(R.x(), psi);
  const Poly Pm = R.mod(P.poly(), psi);
  for (unsigned i = 0; i < k; ++i) {
    prod = R.mulmod(prod, R.sub(xq, Pm), psi);
    xq = R.powmod(xq, q, psi);
  }
  const u64 deg_h = static_cast<u64>(R.gcd(prod, psi).degree());
  detail::ensure(deg_h % k == 0, "deg h_P is not a multiple of k");
  const u64 via_psi = deg_h / k;

  if (via_gcds != via_psi)
    throw ConsistencyError("fixed-point formulas disagree: " + std::to_string(via_gcds) + " vs " +
                           std::to_string(via_psi));
  return via_psi;
}

inline u64 ipow_diff_gcd(u64 a, u64 b, u64 m) { return std::gcd(a > b ? a - b : b - a, m); }

/// n_P for P = x^n: eps(k) + sum_{d | k} mu(k/d)/d sum_{i<d} gcd(q^i - n, q^d - 1).
inline u64 fixed_count_monomial(u64 q, unsigned k, u64 n) {
  detail::require(k >= 1, "k must be positive");
  const u64 Qm1 = nt::checked_pow(q, k) - 1;
  detail::require(std::gcd(n, Qm1) == 1, "x^n needs gcd(n, q^k - 1) = 1");
  const u64 avg = detail::mobius_average(k, [&](u64 d) {
    u64 s = 0;
    for (u64 i = 0; i < d; ++i) s += ipow_diff_gcd(nt::checked_pow(q, i), n, nt::checked_pow(q, d) - 1);
    return s;
  });
  return (k == 1 ? 1 : 0) + avg;
}

/// n_P for P = L_h: sum_{d | k} mu(k/d)/d sum_{i<d} q^{r_{i,d}}, r_{i,d} = deg gcd(x^i - h, x^d - 1).
inline u64 fixed_count_linearized(const PolyRing& R, unsigned k, const Poly& h) {
  detail::require(k >= 1, "k must be positive");
  detail::require(!h.is_zero() && R.gcd(h, R.x_pow_minus_one(k)) == R.one(), "L_h needs gcd(h, x^k - 1) = 1");
  return detail::mobius_average(k, [&](u64 d) {
    u64 s = 0;
    for (u64 i = 0; i < d; ++i) {
      const Poly diff = R.sub(R.monomial(R.field().one(), i), h);
      const u64 r = diff.is_zero() ? d : static_cast<u64>(R.gcd(diff, R.x_pow_minus_one(d)).degree());
      s += nt::checked_pow(R.q(), r);
    }
    return s;
  });
}

/// Closed form for x^n when k and r = (q^k - 1)/(q - 1) are prime.
inline u64 fixed_count_prime_monomial(u64 q, unsigned k, u64 n) {
  detail::require(nt::is_prime(k), "k must be prime");
  const u64 Qm1 = nt::checked_pow(q, k) - 1;
  const u64 r = Qm1 / (q - 1);
  detail::require(nt::is_prime(r), "r = (q^k - 1)/(q - 1) = " + std::to_string(r) + " is not prime");
  detail::require(std::gcd(n, Qm1) == 1, "x^n needs gcd(n, q^k - 1) = 1");
  u64 qi = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (n % r == qi % r) return (r - 1) / k * std::gcd(n - 1, q - 1);
    qi *= q;
  }
  return 0;
}

/// Closed form for L_f when k is prime and T = (x^k - 1)/(x - 1) is irreducible.
/// f is taken modulo x^k - 1, which does not change L_f on F_{q^k}.
inline u64 fixed_count_prime_linearized(const PolyRing& R, unsigned k, const Poly& f) {
  detail::require(nt::is_prime(k), "k must be prime");
  const Poly xk1 = R.x_pow_minus_one(k);
  const Poly T = R.div_exact(xk1, R.from_ints({-1, 1}));
  detail::require(R.is_irreducible(T), "T = (x^k - 1)/(x - 1) is reducible");
  detail::require(!f.is_zero() && R.gcd(f, xk1) == R.one(), "L_f needs gcd(f, x^k - 1) = 1");
  const Poly fr = R.mod(f, xk1);
  const u64 q = R.q();
  const Scalar one = R.field().one();
  if (q % 2 == 0 && k == 2) {
    if (fr == R.one() || fr == R.x()) return (q * q - q) / 2;
    return 0;
  }
  for (unsigned i = 0; i < k; ++i)
    if (fr == R.monomial(one, i)) return (nt::checked_pow(q, k) - q) / k;
  for (unsigned i = 0; i < k; ++i) {
    const Poly rest = R.sub(fr, R.monomial(one, i));
    // rest = a T with a in F_q^*: constant coefficient vector of full length k
    if (rest.degree() != static_cast<int>(k) - 1) continue;
    const Scalar a = rest.c[0];
    if (a.code != 0 && rest == R.scale(T, a)) return (nt::checked_pow(q, k - 1) - 1) / k;
  }
  return 0;
}

/// Cycle decomposition of a permutation of an ordered node set.
struct FunctionalGraph {
  std::vector<std::string> nodes;
  std::vector<std::vector<std::string>> cycles;
  CycleSummary summary;
  // same cycles as node indices, and the cycle containing each node
  std::vector<std::vector<std::size_t>> cycle_indices;
  std::vector<std::size_t> cycle_of;

  std::size_t fixed_count() const {
    return static_cast<std::size_t>(std::count_if(cycle_indices.begin(), cycle_indices.end(),
                                                  [](const auto& c) { return c.size() == 1; }));
  }
};

/// Cycles start at their least node in the given node order and are listed by that node.
inline FunctionalGraph build_functional_graph(std::vector<std::string> nodes, const std::vector<std::size_t>& next) {
  detail::require(nodes.size() == next.size(), "node and image lists differ in length");
  {
    std::vector<bool> hit(next.size(), false);
    for (std::size_t t : next) {
      detail::require(t < next.size() && !hit[t], "map is not a permutation of the node set");
      hit[t] = true;
    }
  }
  FunctionalGraph G;
  G.nodes = std::move(nodes);
  const std::size_t n = next.size();
  G.cycle_of.assign(n, n);
  std::map<u64, u64> counts;
  for (std::size_t start = 0; start < n; ++start) {
    if (G.cycle_of[start] != n) continue;
    std::vector<std::size_t> cyc;
    std::size_t cur = start;
    do {
      detail::ensure(G.cycle_of[cur] == n, "cycle walk revisited a node");
      G.cycle_of[cur] = G.cycle_indices.size();
      cyc.push_back(cur);
      cur = next[cur];
    } while (cur != start);
    std::vector<std::string> names;
    for (std::size_t i : cyc) names.push_back(G.nodes[i]);
    ++counts[cyc.size()];
    G.cycles.push_back(std::move(names));
    G.cycle_indices.push_back(std::move(cyc));
  }
  G.summary = detail::summarize(counts);
  return G;
}

/// Evaluation of P on C_k.
inline FunctionalGraph graph_Ck(const FieldCtx& ctx, const PermPoly& P) {
  require_same_ctx(ctx, P);
  const auto ck = ctx.enumerate_ck();
  const auto table = ctx.value_table(P.poly());
  std::vector<std::size_t> index(ctx.order(), ck.size());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ck.size(); ++i) {
    index[ctx.encode(ck[i])] = i;
    names.push_back(ctx.to_string(ck[i]));
  }
  std::vector<std::size_t> next(ck.size());
  for (std::size_t i = 0; i < ck.size(); ++i) {
    next[i] = index[table[ctx.encode(ck[i])]];
    detail::ensure(next[i] < ck.size(), "P does not map C_k into itself");
  }
  return build_functional_graph(std::move(names), next);
}

enum class StarMethod { gcd, roots };

/// f -> P * f on I_k.
inline FunctionalGraph graph_Ik(const FieldCtx& ctx, const PermPoly& P, StarMethod method = StarMethod::gcd) {
  require_same_ctx(ctx, P);
  const auto irr = ctx.ring().enumerate_irreducibles(ctx.k(), ctx.guard());
  std::map<Poly, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < irr.size(); ++i) {
    index.emplace(irr[i], i);
    names.push_back(format_poly(ctx.base(), irr[i]));
  }
  std::vector<u64> inv;
  if (method == StarMethod::roots) inv = inverse_table(ctx, P);
  std::vector<std::size_t> next(irr.size());
  for (std::size_t i = 0; i < irr.size(); ++i) {
    const Poly img = method == StarMethod::gcd ? star(ctx, P, irr[i]) : star_by_roots(ctx, P, irr[i], &inv);
    const auto it = index.find(img);
    detail::ensure(it != index.end(), "P * f left I_k");
    next[i] = it->second;
  }
  return build_functional_graph(std::move(names), next);
}

/// c_P(alpha): least n > 0 with P^{(n)}(alpha) = alpha; alpha must lie in C_k.
inline u64 period_Ck(const FieldCtx& ctx, const PermPoly& P, const ExtElement& alpha) {
  require_same_ctx(ctx, P);
  detail::require(ctx.element_degree(alpha) == ctx.k(), "element is not in C_k");
  ExtElement cur = ctx.eval(P.poly(), alpha);
  u64 n = 1;
  while (cur != alpha) {
    cur = ctx.eval(P.poly(), cur);
    ++n;
    detail::ensure(n <= ctx.order(), "orbit does not close");
  }
  return n;
}

/// c*_P(f): least n > 0 with P^{(n)} * f = f.
inline u64 period_Ik(const FieldCtx& ctx, const PermPoly& P, const Poly& f) {
  Poly cur = star(ctx, P, f);
  u64 n = 1;
  while (cur != f) {
    cur = star(ctx, P, cur);
    ++n;
    detail::ensure(n <= ctx.order(), "orbit does not close");
  }
  return n;
}

/// Period lengths of a functional graph: the multiset, its support S and min mu.
struct CycleSpectrum {
  std::vector<u64> lengths;
  std::vector<u64> S;
  u64 mu = 0;
};

inline CycleSpectrum spectrum(const FunctionalGraph& G) {
  CycleSpectrum sp;
  for (const auto& c : G.cycle_indices) sp.lengths.push_back(c.size());
  std::sort(sp.lengths.begin(), sp.lengths.end());
  sp.S = sp.lengths;
  sp.S.erase(std::unique(sp.S.begin(), sp.S.end()), sp.S.end());
  sp.mu = sp.S.empty() ? 0 : sp.S.front();
  return sp;
}

/// G(x^n, C_k): (ord_e n, phi(e)/ord_e n) over e | q^k - 1 with ord_e q = k.
/// For k = 1 the fixed point 0 in C_1 = F_q is included.
inline CycleSummary monomial_cycle_structure(u64 q, unsigned k, u64 n) {
  detail::require(k >= 1, "k must be positive");
  const u64 Qm1 = nt::checked_pow(q, k) - 1;
  detail::require(std::gcd(n, Qm1) == 1, "x^n needs gcd(n, q^k - 1) = 1");
  std::map<u64, u64> counts;
  if (k == 1) ++counts[1];
  for (u64 e : nt::divisors(Qm1)) {
    if (nt::mult_order_mod(q, e) != k) continue;
    const u64 len = nt::mult_order_mod(n, e);
    counts[len] += nt::euler_phi(e) / len;
  }
  return detail::summarize(counts);
}

/// G(L_f, C_k): (O(f,g), Phi_q(g)/O(f,g)) over monic g | x^k - 1 with O(x, g) = k.
/// g = 1 (the element 0) has Phi_q(1) = 1 and O(., 1) = 1.
inline CycleSummary linearized_cycle_structure(const PolyRing& R, unsigned k, const Poly& f) {
  detail::require(k >= 1, "k must be positive");
  const Poly xk1 = R.x_pow_minus_one(k);
  detail::require(!f.is_zero() && R.gcd(f, xk1) == R.one(), "L_f needs gcd(f, x^k - 1) = 1");
  const auto factors = R.factor(xk1);
  std::map<u64, u64> counts;
  std::vector<unsigned> expo(factors.size(), 0);
  for (;;) {
    Poly g = R.one();
    for (std::size_t j = 0; j < factors.size(); ++j)
      for (unsigned e = 0; e < expo[j]; ++e) g = R.mul(g, factors[j].first);
    const u64 ox = g.degree() == 0 ? 1 : poly_order(R, R.x(), g);
    if (ox == k) {
      const u64 phi = g.degree() == 0 ? 1 : phi_q(R, g);
      const u64 len = g.degree() == 0 ? 1 : poly_order(R, f, g);
      counts[len] += phi / len;
    }
    std::size_t j = 0;
    while (j < factors.size() && expo[j] == factors[j].second) expo[j++] = 0;
    if (j == factors.size()) break;
    ++expo[j];
  }
  return detail::summarize(counts);
}

/// G(gamma_A, C_k) = (|C_k|/D) x Cyc(D) with D the order of [A] in PGL_2(F_q); k >= 3.
inline CycleSummary moebius_cycle_structure(const BaseField& F, unsigned k, const Matrix2& A) {
  detail::require(k >= 3, "the Moebius cycle formula needs k >= 3");
  const u64 D = pgl2_order(F, A);
  const u64 ck = nt::count_degree_k_elements(F.q(), k);
  detail::ensure(ck % D == 0, "D does not divide |C_k|");
  return {{D, ck / D}};
}

/// gamma_A * f = c_f (cx + d)^k f((ax + b)/(cx + d)), made monic.
inline Poly moebius_star(const FieldCtx& ctx, const Matrix2& A, const Poly& f) {
  const PolyRing& R = ctx.ring();
  detail::require(ctx.k() >= 2, "moebius_star needs k >= 2");
  require_invertible(ctx.base(), A);
  detail::require_in_ik(ctx, f);
  const Poly num({A.b, A.a}), den({A.d, A.c});
  const std::size_t k = ctx.k();
  std::vector<Poly> num_pow{R.one()}, den_pow{R.one()};
  for (std::size_t i = 1; i <= k; ++i) {
    num_pow.push_back(R.mul(num_pow.back(), num));
    den_pow.push_back(R.mul(den_pow.back(), den));
  }
  Poly out;
  for (std::size_t i = 0; i <= k; ++i) out = R.add(out, R.scale(R.mul(num_pow[i], den_pow[k - i]), f[i]));
  out = R.monic(out);
  detail::ensure(out.degree() == static_cast<int>(k), "Moebius transform lost degree");
  return out;
}

/// Which of the invariant checks apply to P, and whether they hold for f.
struct InvariantReport {
  std::string family;  // "monomial", "linearized" or "monomial+linearized"
  std::optional<bool> ord_preserved;
  std::optional<bool> norm_relation;
  std::optional<bool> fq_order_preserved;
  std::optional<bool> trace_relation;

  bool all_hold() const {
    for (const auto& v : {ord_preserved, norm_relation, fq_order_preserved, trace_relation})
      if (v && !*v) return false;
    return true;
  }
};

/// n if P = x^n.
inline std::optional<u64> monomial_exponent(const Poly& P) {
  if (P.weight() != 1 || P.degree() < 1 || P.lead().code != 1) return std::nullopt;
  return static_cast<u64>(P.degree());
}

/// g with P = L_g, if P is linearized over F_q.
inline std::optional<Poly> linearized_symbol(const PolyRing& R, const Poly& P) {
  if (P.is_zero() || P.c[0].code != 0) return std::nullopt;
  std::vector<Scalar> g;
  for (std::size_t e = 1; e < P.c.size(); ++e) {
    if (P.c[e].code == 0) continue;
    std::size_t i = 0;
    u64 pw = 1;
    while (pw < e) {
      pw *= R.q();
      ++i;
    }
    if (pw != e) return std::nullopt;
    if (g.size() <= i) g.resize(i + 1);
    g[i] = P.c[e];
  }
  return Poly(std::move(g));
}

inline InvariantReport invariant_report(const FieldCtx& ctx, const PermPoly& P, const Poly& f) {
  require_same_ctx(ctx, P);
  detail::require_in_ik(ctx, f);
  const PolyRing& R = ctx.ring();
  const auto n = monomial_exponent(P.poly());
  const auto g = linearized_symbol(R, P.poly());
  if (!n && !g) throw PreconditionError("no invariant check applies to " + format_poly(ctx.base(), P.poly()));
  InvariantReport rep;
  rep.family = n && g ? "monomial+linearized" : n ? "monomial" : "linearized";
  const Poly image = star(ctx, P, f);
  if (n) {
    if (f != R.x()) rep.ord_preserved = mult_order(R, image) == mult_order(R, f);
    const u64 n0 = nt::mod_inverse(*n % (ctx.order() - 1), ctx.order() - 1);
    rep.norm_relation = norm_of(R, image) == ctx.base().pow(norm_of(R, f), n0);
  }
  if (g) {
    rep.fq_order_preserved = fq_order(R, image) == fq_order(R, f);
    const Scalar g1 = R.eval(*g, ctx.base().one());
    rep.trace_relation = trace_of(R, image) == ctx.base().mul(ctx.base().inv(g1), trace_of(R, f));
  }
  return rep;
}

}  // namespace permdyn

#endif  // PERMDYN_DYNAMICS_HPP
