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

// The extension F_{q^k} = F_q[y]/(g) and polynomials over it.
//
// FieldCtx is immutable once built. An element is its length-k coefficient
// vector; its code is sum_i code(c_i) q^i, which is also the enumeration
// order of enumerate_ck().

#ifndef PERMDYN_FIELD_CORE_HPP
#define PERMDYN_FIELD_CORE_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "permdyn/base_field.hpp"
#include "permdyn/errors.hpp"
#include "permdyn/numtheory.hpp"
#include "permdyn/poly.hpp"
#include "permdyn/text.hpp"

namespace permdyn {

/// Element of F_{q^k}: coefficients of 1, y, ..., y^{k-1}.
struct ExtElement {
  std::vector<Scalar> c;

  bool is_zero() const {
    return std::all_of(c.begin(), c.end(), [](Scalar s) { return s.code == 0; });
  }
  friend bool operator==(const ExtElement&, const ExtElement&) = default;
};

class FieldCtx {
 public:
  FieldCtx(BaseField base, unsigned k, Poly modulus, u64 guard)
      : ring_(std::move(base)), k_(k), g_(std::move(modulus)), guard_(guard) {
    Q_ = nt::checked_pow(ring_.q(), k_);
    // y^{iq} mod g for i < k: Frobenius is then a k x k linear map
    const Poly yq = ring_.powmod(ring_.x(), ring_.q(), g_);
    Poly cur = ring_.one();
    for (unsigned i = 0; i < k_; ++i) {
      frob_rows_.push_back(from_poly(cur));
      cur = ring_.mulmod(cur, yq, g_);
    }
  }

  const BaseField& base() const { return ring_.field(); }
  const PolyRing& ring() const { return ring_; }
  unsigned k() const { return k_; }
  u64 q() const { return ring_.q(); }
  /// Q = q^k.
  u64 order() const { return Q_; }
  const Poly& modulus() const { return g_; }
  u64 guard() const { return guard_; }

  /// Identifies (F_q, F_{q^k}) up to representation.
  std::string key() const {
    std::string s = base().key() + ",k=" + std::to_string(k_) + ",g=";
    for (Scalar c : g_.c) s += std::to_string(c.code) + ".";
    return s;
  }

  void require_guard(const std::string& what) const {
    if (Q_ > guard_)
      throw GuardExceeded(what + ": q^k = " + std::to_string(Q_) + " exceeds guard " + std::to_string(guard_));
  }

  ExtElement zero() const { return {std::vector<Scalar>(k_)}; }
  ExtElement one() const { return from_scalar(base().one()); }
  /// The class of y.
  ExtElement gen() const { return from_poly(ring_.x()); }

  ExtElement from_scalar(Scalar s) const {
    ExtElement e = zero();
    e.c[0] = s;
    return e;
  }

  ExtElement from_poly(const Poly& f) const {
    const Poly r = ring_.mod(f, g_);
    ExtElement e = zero();
    for (std::size_t i = 0; i < r.c.size(); ++i) e.c[i] = r.c[i];
    return e;
  }

  Poly to_poly(const ExtElement& a) const { return Poly(a.c); }

  ExtElement add(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = base().add(a.c[i], b.c[i]);
    return r;
  }

  ExtElement sub(const ExtElement& a, const ExtElement& b) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = base().sub(a.c[i], b.c[i]);
    return r;
  }

  ExtElement neg(const ExtElement& a) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = base().neg(a.c[i]);
    return r;
  }

  ExtElement scale(const ExtElement& a, Scalar s) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < k_; ++i) r.c[i] = base().mul(a.c[i], s);
    return r;
  }

  ExtElement mul(const ExtElement& a, const ExtElement& b) const {
    const BaseField& F = base();
    std::vector<Scalar> prod(2 * k_ - 1);
    if (F.m() == 1) {
      const u64 p = F.p();
      std::vector<u64> acc(2 * k_ - 1, 0);
      for (unsigned i = 0; i < k_; ++i) {
        const u64 ai = a.c[i].code;
        if (ai == 0) continue;
        for (unsigned j = 0; j < k_; ++j) acc[i + j] += ai * b.c[j].code;
      }
      // q^k < 2^64 bounds k * (p-1)^2, so the sums cannot overflow
      for (std::size_t i = 0; i < acc.size(); ++i) prod[i] = {static_cast<std::uint32_t>(acc[i] % p)};
    } else {
      for (unsigned i = 0; i < k_; ++i) {
        if (a.c[i].code == 0) continue;
        for (unsigned j = 0; j < k_; ++j) prod[i + j] = F.add(prod[i + j], F.mul(a.c[i], b.c[j]));
      }
    }
    for (std::size_t i = prod.size(); i-- > k_;) {
      const Scalar t = prod[i];
      if (t.code == 0) continue;
      for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] = F.sub(prod[i - k_ + j], F.mul(t, g_.c[j]));
    }
    prod.resize(k_);
    return {std::move(prod)};
  }

  ExtElement pow(ExtElement a, u64 e) const {
    ExtElement r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      e >>= 1;
      if (e) a = mul(a, a);
    }
    return r;
  }

  ExtElement inv(const ExtElement& a) const {
    if (a.is_zero()) throw PreconditionError("inverse of zero in F_" + std::to_string(Q_));
    return pow(a, Q_ - 2);
  }

  ExtElement div(const ExtElement& a, const ExtElement& b) const { return mul(a, inv(b)); }

  /// a^q.
  ExtElement frobenius(const ExtElement& a) const {
    ExtElement r = zero();
    for (unsigned i = 0; i < k_; ++i) {
      if (a.c[i].code == 0) continue;
      for (unsigned j = 0; j < k_; ++j)
        r.c[j] = base().add(r.c[j], base().mul(a.c[i], frob_rows_[i].c[j]));
    }
    return r;
  }

  ExtElement frobenius_pow(ExtElement a, u64 j) const {
    for (u64 i = 0; i < j % k_; ++i) a = frobenius(a);
    return a;
  }

  u64 encode(const ExtElement& a) const {
    u64 code = 0;
    for (unsigned i = k_; i-- > 0;) code = code * q() + a.c[i].code;
    return code;
  }

  ExtElement decode(u64 code) const {
    ExtElement e = zero();
    for (unsigned i = 0; i < k_; ++i) {
      e.c[i] = {static_cast<std::uint32_t>(code % q())};
      code /= q();
    }
    return e;
  }

  bool in_base(const ExtElement& a) const {
    return std::all_of(a.c.begin() + 1, a.c.end(), [](Scalar s) { return s.code == 0; });
  }

  Scalar to_scalar(const ExtElement& a) const {
    detail::require(in_base(a), "element does not lie in F_q");
    return a.c[0];
  }

  /// Least s with a^{q^s} = a; it divides k.
  unsigned element_degree(const ExtElement& a) const {
    ExtElement t = a;
    for (unsigned s = 1; s <= k_; ++s) {
      t = frobenius(t);
      if (t == a) return s;
    }
    throw ConsistencyError("Frobenius does not have order dividing k");
  }

  /// prod_{i<d} (x - a^{q^i}), projected to F_q[x].
  Poly minimal_poly(const ExtElement& a) const {
    const unsigned d = element_degree(a);
    std::vector<ExtElement> m{one()};  // ascending coefficients over F_{q^k}
    ExtElement conj = a;
    for (unsigned i = 0; i < d; ++i) {
      std::vector<ExtElement> next(m.size() + 1, zero());
      const ExtElement nc = neg(conj);
      for (std::size_t j = 0; j < m.size(); ++j) {
        next[j + 1] = add(next[j + 1], m[j]);
        next[j] = add(next[j], mul(m[j], nc));
      }
      m = std::move(next);
      conj = frobenius(conj);
    }
    std::vector<Scalar> out;
    for (const ExtElement& e : m) {
      detail::ensure(in_base(e), "minimal polynomial has a coefficient outside F_q");
      out.push_back(e.c[0]);
    }
    return Poly(std::move(out));
  }

  /// Elements of degree exactly k, by increasing code.
  std::vector<ExtElement> enumerate_ck() const {
    require_guard("enumerate C_k");
    std::vector<ExtElement> out;
    for (u64 code = 0; code < Q_; ++code) {
      ExtElement a = decode(code);
      if (element_degree(a) == k_) out.push_back(std::move(a));
    }
    return out;
  }

  /// P(a) for P over F_q. Sparse polynomials go term by term.
  ExtElement eval(const Poly& P, const ExtElement& a) const {
    if (P.is_zero()) return zero();
    const std::size_t w = P.weight();
    if (w * 24 < P.c.size()) {
      ExtElement r = zero();
      for (std::size_t i = 0; i < P.c.size(); ++i)
        if (P.c[i].code != 0) r = add(r, scale(pow(a, i), P.c[i]));
      return r;
    }
    ExtElement r = zero();
    for (std::size_t i = P.c.size(); i-- > 0;) {
      r = mul(r, a);
      r.c[0] = base().add(r.c[0], P.c[i]);
    }
    return r;
  }

  /// Codes of P(a) for every a, indexed by the code of a.
  std::vector<u64> value_table(const Poly& P) const {
    require_guard("exhaustive evaluation");
    std::vector<u64> t(Q_);
    for (u64 code = 0; code < Q_; ++code) t[code] = encode(eval(P, decode(code)));
    return t;
  }

  /// L_g(a) = sum g_i a^{q^i}.
  ExtElement linearized_eval(const Poly& g, const ExtElement& a) const {
    ExtElement r = zero(), t = a;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      if (g.c[i].code != 0) r = add(r, scale(t, g.c[i]));
      if (i + 1 < g.c.size()) t = frobenius(t);
    }
    return r;
  }

  /// Human form in the variable y.
  std::string to_string(const ExtElement& a) const { return format_poly(base(), to_poly(a), 'y'); }

 private:
  PolyRing ring_;
  unsigned k_;
  Poly g_;
  u64 guard_;
  u64 Q_ = 0;
  std::vector<ExtElement> frob_rows_;
};

/// Polynomials over F_{q^k}, ascending, without trailing zeros.
using ExtPoly = std::vector<ExtElement>;

/// Arithmetic on ExtPoly; used by interpolation and by root finding.
class ExtPolyOps {
 public:
  explicit ExtPolyOps(const FieldCtx& ctx) : F_(ctx) {}

  void trim(ExtPoly& a) const {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }

  ExtPoly lift(const Poly& f) const {
    ExtPoly r;
    for (Scalar s : f.c) r.push_back(F_.from_scalar(s));
    return r;
  }

  ExtPoly add(const ExtPoly& a, const ExtPoly& b) const {
    ExtPoly r(std::max(a.size(), b.size()), F_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F_.add(r[i], b[i]);
    trim(r);
    return r;
  }

  ExtPoly sub(const ExtPoly& a, const ExtPoly& b) const {
    ExtPoly r(std::max(a.size(), b.size()), F_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = F_.sub(r[i], b[i]);
    trim(r);
    return r;
  }

  ExtPoly scale(const ExtPoly& a, const ExtElement& s) const {
    ExtPoly r;
    for (const ExtElement& e : a) r.push_back(F_.mul(e, s));
    trim(r);
    return r;
  }

  ExtPoly mul(const ExtPoly& a, const ExtPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ExtPoly r(a.size() + b.size() - 1, F_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F_.add(r[i + j], F_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }

  ExtPoly mod(ExtPoly a, const ExtPoly& b) const {
    if (b.empty()) throw PreconditionError("polynomial division by zero");
    const ExtElement inv_lead = F_.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const ExtElement t = F_.mul(a.back(), inv_lead);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) a[shift + j] = F_.sub(a[shift + j], F_.mul(t, b[j]));
      a.pop_back();
      trim(a);
    }
    return a;
  }

  ExtPoly monic(const ExtPoly& a) const { return a.empty() ? a : scale(a, F_.inv(a.back())); }

  ExtPoly gcd(ExtPoly a, ExtPoly b) const {
    while (!b.empty()) {
      ExtPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  ExtPoly powmod(ExtPoly b, u64 e, const ExtPoly& M) const {
    ExtPoly r = mod({F_.one()}, M);
    b = mod(b, M);
    while (e) {
      if (e & 1) r = mod(mul(r, b), M);
      e >>= 1;
      if (e) b = mod(mul(b, b), M);
    }
    return r;
  }

  ExtElement eval(const ExtPoly& f, const ExtElement& a) const {
    ExtElement r = F_.zero();
    for (std::size_t i = f.size(); i-- > 0;) r = F_.add(F_.mul(r, a), f[i]);
    return r;
  }

 private:
  const FieldCtx& F_;
};

/// The smallest-code root in F_{q^k} of f, which must be irreducible over F_q
/// with degree dividing k.
inline ExtElement find_root(const FieldCtx& ctx, const Poly& f) {
  detail::require(f.degree() >= 1, "a constant has no roots");
  const unsigned d = static_cast<unsigned>(f.degree());
  detail::require(ctx.k() % d == 0, "degree of f must divide k");
  const ExtPolyOps ops(ctx);
  const ExtPoly F = ops.monic(ops.lift(f));
  ExtElement root;
  if (d == 1) {
    root = ctx.neg(F[0]);
  } else {
    std::mt19937_64 rng(kFactorSeed);
    std::uniform_int_distribution<u64> pick(0, ctx.order() - 1);
    ExtPoly cur = F;
    while (cur.size() > 2) {
      const ExtElement beta = ctx.decode(pick(rng));
      ExtPoly probe;
      if (ctx.base().p() == 2) {
        ExtPoly t = ops.mod({ctx.zero(), beta}, cur), acc = t;
        for (u64 s = 2; s < ctx.order(); s *= 2) {
          t = ops.mod(ops.mul(t, t), cur);
          acc = ops.add(acc, t);
        }
        probe = acc;
      } else {
        probe = ops.sub(ops.powmod({beta, ctx.one()}, (ctx.order() - 1) / 2, cur), {ctx.one()});
      }
      if (probe.empty()) continue;
      ExtPoly h = ops.gcd(cur, probe);
      if (h.size() <= 1 || h.size() == cur.size()) continue;
      cur = std::move(h);
    }
    root = ctx.neg(ctx.div(cur[0], cur[1]));
  }
  detail::ensure(ops.eval(F, root).is_zero(), "root finding produced a non-root");
  ExtElement best = root, t = root;
  for (unsigned i = 1; i < d; ++i) {
    t = ctx.frobenius(t);
    if (ctx.encode(t) < ctx.encode(best)) best = t;
  }
  return best;
}

/// F_{q^k} over F_q with q = p^m. Without an explicit modulus the least monic
/// irreducible of degree k in canonical order is used.
inline FieldCtx make_field_ctx(const BaseField& base, unsigned k, std::optional<Poly> ext_modulus = std::nullopt,
                               u64 guard = kDefaultGuard) {
  detail::require(k >= 1, "k must be positive");
  const u64 Q = nt::checked_pow(base.q(), k);
  if (Q > guard)
    throw GuardExceeded("q^k = " + std::to_string(Q) + " exceeds guard " + std::to_string(guard));
  const PolyRing ring(base);
  Poly g;
  if (ext_modulus) {
    g = *ext_modulus;
    detail::require(g.degree() == static_cast<int>(k), "extension modulus must have degree k");
    detail::require(g.lead() == base.one(), "extension modulus must be monic");
    detail::require(ring.is_irreducible(g), "extension modulus is reducible over F_q");
  } else {
    for (u64 code = 0; code < Q; ++code) {
      Poly f = ring.monic_from_code(code, k);
      if (k > 1 && f.c[0].code == 0) continue;
      if (ring.is_irreducible(f)) {
        g = std::move(f);
        break;
      }
    }
  }
  return FieldCtx(base, k, std::move(g), guard);
}

inline FieldCtx make_field_ctx(std::uint32_t p, std::uint32_t m, unsigned k,
                               std::optional<Poly> ext_modulus = std::nullopt, u64 guard = kDefaultGuard) {
  return make_field_ctx(make_base_field(p, m), k, std::move(ext_modulus), guard);
}

}  // namespace permdyn

#endif  // PERMDYN_FIELD_CORE_HPP
