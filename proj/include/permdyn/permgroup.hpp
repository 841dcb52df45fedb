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

// G_k: permutation polynomials of F_{q^k} with coefficients in F_q, reduced
// modulo x^{q^k} - x.
//
// Membership is always certified by exhaustive evaluation. The monomial,
// linearized and Moebius constructors also evaluate their algebraic criterion
// and throw ConsistencyError if the two ever disagree.

#ifndef PERMDYN_PERMGROUP_HPP
#define PERMDYN_PERMGROUP_HPP

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "permdyn/errors.hpp"
#include "permdyn/field_core.hpp"
#include "permdyn/numtheory.hpp"
#include "permdyn/poly.hpp"
#include "permdyn/text.hpp"

namespace permdyn {

class PermPoly {
 public:
  const Poly& poly() const { return poly_; }
  const std::string& ctx_key() const { return ctx_key_; }

  friend bool operator==(const PermPoly&, const PermPoly&) = default;

 private:
  PermPoly(Poly p, std::string key) : poly_(std::move(p)), ctx_key_(std::move(key)) {}
  friend PermPoly certify_perm(const FieldCtx&, const Poly&);

  Poly poly_;
  std::string ctx_key_;
};

/// Element of GL_2(F_q), acting by z -> (az + b)/(cz + d).
struct Matrix2 {
  Scalar a, b, c, d;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// P mod x^Q - x: exponents e >= Q fold to 1 + (e - 1) mod (Q - 1).
inline Poly reduce_mod_field(const FieldCtx& ctx, const Poly& P) {
  const u64 Q = ctx.order();
  if (P.c.size() <= Q) return P;
  std::vector<Scalar> c(Q);
  for (std::size_t e = 0; e < P.c.size(); ++e) {
    if (P.c[e].code == 0) continue;
    const std::size_t t = e < Q ? e : 1 + (e - 1) % (Q - 1);
    c[t] = ctx.base().add(c[t], P.c[e]);
  }
  return Poly(std::move(c));
}

inline bool is_bijection(const std::vector<u64>& table) {
  std::vector<bool> hit(table.size(), false);
  for (u64 v : table) {
    if (v >= table.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

/// Reduces P and accepts it iff its evaluation map on F_{q^k} is a bijection.
inline PermPoly certify_perm(const FieldCtx& ctx, const Poly& P) {
  ctx.require_guard("certify_perm");
  const Poly R = reduce_mod_field(ctx, P);
  if (!is_bijection(ctx.value_table(R)))
    throw PreconditionError(format_poly(ctx.base(), P) + " does not permute F_" + std::to_string(ctx.order()));
  return PermPoly(R, ctx.key());
}

inline bool is_perm(const FieldCtx& ctx, const Poly& P) {
  ctx.require_guard("is_perm");
  return is_bijection(ctx.value_table(reduce_mod_field(ctx, P)));
}

inline void require_same_ctx(const FieldCtx& ctx, const PermPoly& P) {
  if (P.ctx_key() != ctx.key()) throw PreconditionError("permutation polynomial belongs to another field context");
}

inline bool coefficients_in_base(const FieldCtx& ctx, const ExtPoly& f) {
  return std::all_of(f.begin(), f.end(), [&](const ExtElement& e) { return ctx.in_base(e); });
}

/// Projects f to F_q[x]; throws PreconditionError if a coefficient lies outside F_q.
inline Poly project_to_base(const FieldCtx& ctx, const ExtPoly& f) {
  if (!coefficients_in_base(ctx, f)) throw PreconditionError("coefficients outside F_q");
  std::vector<Scalar> c;
  for (const ExtElement& e : f) c.push_back(e.c[0]);
  return Poly(std::move(c));
}

inline PermPoly certify_perm(const FieldCtx& ctx, const ExtPoly& f) { return certify_perm(ctx, project_to_base(ctx, f)); }

/// The unique polynomial of degree < Q taking value values[code(a)] at a.
///
/// Closed form of the Lagrange basis over all of F_Q: c_0 = v(0),
/// c_j = -sum_{a != 0} v(a) a^{-j} for 0 < j < Q-1, c_{Q-1} = -sum_a v(a).
inline ExtPoly interpolate(const FieldCtx& ctx, const std::vector<ExtElement>& values) {
  const u64 Q = ctx.order();
  detail::require(values.size() == Q, "interpolation needs one value per field element");
  ExtPoly c(Q, ctx.zero());
  c[0] = values[0];
  if (Q == 2) {
    c[1] = ctx.sub(values[1], values[0]);
  } else {
    ExtElement total = ctx.zero();
    for (const ExtElement& v : values) total = ctx.add(total, v);
    c[Q - 1] = ctx.neg(total);
    std::vector<ExtElement> acc(Q, ctx.zero());
    for (u64 code = 1; code < Q; ++code) {
      if (values[code].is_zero()) continue;
      const ExtElement ainv = ctx.inv(ctx.decode(code));
      ExtElement term = values[code];
      for (u64 j = 1; j + 1 < Q; ++j) {
        term = ctx.mul(term, ainv);
        acc[j] = ctx.add(acc[j], term);
      }
    }
    for (u64 j = 1; j + 1 < Q; ++j) c[j] = ctx.neg(acc[j]);
  }
  ExtPolyOps(ctx).trim(c);
  return c;
}

/// f(a^q) = f(a)^q for every a in F_{q^k}.
inline bool frobenius_stable(const FieldCtx& ctx, const ExtPoly& f) {
  ctx.require_guard("frobenius_stable");
  detail::require(f.size() <= ctx.order(), "frobenius_stable expects degree < q^k");
  const ExtPolyOps ops(ctx);
  for (u64 code = 0; code < ctx.order(); ++code) {
    const ExtElement a = ctx.decode(code);
    if (ops.eval(f, ctx.frobenius(a)) != ctx.frobenius(ops.eval(f, a))) return false;
  }
  return true;
}

inline PermPoly gk_identity(const FieldCtx& ctx) { return certify_perm(ctx, ctx.ring().x()); }

/// P o Q mod x^Q - x.
inline PermPoly gk_compose(const FieldCtx& ctx, const PermPoly& P, const PermPoly& Q) {
  require_same_ctx(ctx, P);
  require_same_ctx(ctx, Q);
  const PolyRing& R = ctx.ring();
  const Poly field_poly = R.sub(R.monomial(ctx.base().one(), ctx.order()), R.x());
  return certify_perm(ctx, R.compose_mod(P.poly(), Q.poly(), field_poly));
}

/// The compositional inverse, by interpolating the inverse value table.
inline PermPoly gk_inverse(const FieldCtx& ctx, const PermPoly& P) {
  require_same_ctx(ctx, P);
  const auto table = ctx.value_table(P.poly());
  std::vector<ExtElement> values(ctx.order());
  for (u64 code = 0; code < ctx.order(); ++code) values[table[code]] = ctx.decode(code);
  const ExtPoly inv = interpolate(ctx, values);
  if (!coefficients_in_base(ctx, inv)) throw ConsistencyError("inverse permutation has coefficients outside F_q");
  return certify_perm(ctx, inv);
}

/// An explicit bijection of I_k: sigma[i] is the index of the image of the
/// i-th polynomial in canonical order.
inline void require_bijection(const std::vector<std::size_t>& sigma, std::size_t n) {
  detail::require(sigma.size() == n, "sigma must list " + std::to_string(n) + " images");
  std::vector<bool> hit(n, false);
  for (std::size_t v : sigma) {
    detail::require(v < n && !hit[v], "sigma is not a bijection of I_k");
    hit[v] = true;
  }
}

/// A P in G_k with P (diamond) f_i = f_{sigma(i)} for every f_i in I_k.
/// Roots are sent conjugate by conjugate; F_{q^k} \ C_k is fixed pointwise.
inline PermPoly realize_permutation(const FieldCtx& ctx, const std::vector<std::size_t>& sigma) {
  ctx.require_guard("realize_permutation");
  const auto irr = ctx.ring().enumerate_irreducibles(ctx.k(), ctx.guard());
  require_bijection(sigma, irr.size());
  std::vector<ExtElement> roots;
  for (const Poly& f : irr) roots.push_back(find_root(ctx, f));
  std::vector<ExtElement> values(ctx.order());
  for (u64 code = 0; code < ctx.order(); ++code) values[code] = ctx.decode(code);
  for (std::size_t i = 0; i < irr.size(); ++i) {
    ExtElement from = roots[i], to = roots[sigma[i]];
    for (unsigned j = 0; j < ctx.k(); ++j) {
      values[ctx.encode(from)] = to;
      from = ctx.frobenius(from);
      to = ctx.frobenius(to);
    }
  }
  const ExtPoly P = interpolate(ctx, values);
  if (!coefficients_in_base(ctx, P)) throw ConsistencyError("interpolated permutation is not defined over F_q");
  return certify_perm(ctx, P);
}

inline Scalar det(const BaseField& F, const Matrix2& A) { return F.sub(F.mul(A.a, A.d), F.mul(A.b, A.c)); }

inline Matrix2 matmul(const BaseField& F, const Matrix2& A, const Matrix2& B) {
  return {F.add(F.mul(A.a, B.a), F.mul(A.b, B.c)), F.add(F.mul(A.a, B.b), F.mul(A.b, B.d)),
          F.add(F.mul(A.c, B.a), F.mul(A.d, B.c)), F.add(F.mul(A.c, B.b), F.mul(A.d, B.d))};
}

inline void require_invertible(const BaseField& F, const Matrix2& A) {
  detail::require(det(F, A).code != 0, "singular matrix");
}

/// The Moebius map on F_{q^k} with the pole sent to a/c.
inline ExtElement moebius_apply(const FieldCtx& ctx, const Matrix2& A, const ExtElement& z) {
  const ExtElement num = ctx.add(ctx.scale(z, A.a), ctx.from_scalar(A.b));
  const ExtElement den = ctx.add(ctx.scale(z, A.c), ctx.from_scalar(A.d));
  if (den.is_zero()) return ctx.from_scalar(ctx.base().div(A.a, A.c));
  return ctx.div(num, den);
}

/// tau_A(z) = (az+b)/d if c = 0, else (az+b)[(cz+d)^{Q-2} + eps (z^Q - z)/(z + d/c)], eps = a/det.
inline PermPoly moebius_poly_rep(const FieldCtx& ctx, const Matrix2& A) {
  const BaseField& F = ctx.base();
  const PolyRing& R = ctx.ring();
  require_invertible(F, A);
  ctx.require_guard("moebius_poly_rep");
  const Poly lin({A.b, A.a});
  Poly P;
  if (A.c.code == 0) {
    P = R.scale(lin, F.inv(A.d));
  } else {
    const u64 Q = ctx.order();
    const Poly field_poly = R.sub(R.monomial(F.one(), Q), R.x());
    // (cz+d)^{Q-2} must vanish at the pole; for Q = 2 that needs exponent 1
    const u64 e = Q > 2 ? Q - 2 : 1;
    const Poly inv_part = R.powmod(Poly({A.d, A.c}), e, field_poly);
    const Poly pole_part = R.div_exact(field_poly, Poly({F.div(A.d, A.c), F.one()}));
    const Scalar eps = F.div(A.a, det(F, A));
    P = R.mulmod(lin, R.add(inv_part, R.scale(pole_part, eps)), field_poly);
  }
  PermPoly rep = certify_perm(ctx, P);
  const auto table = ctx.value_table(rep.poly());
  for (u64 code = 0; code < ctx.order(); ++code)
    detail::ensure(table[code] == ctx.encode(moebius_apply(ctx, A, ctx.decode(code))),
                   "Moebius representative disagrees with the Moebius map");
  return rep;
}

/// Order of [A] in PGL_2(F_q).
inline u64 pgl2_order(const BaseField& F, const Matrix2& A) {
  require_invertible(F, A);
  Matrix2 M = A;
  for (u64 D = 1;; ++D) {
    if (M.b.code == 0 && M.c.code == 0 && M.a == M.d) return D;
    M = matmul(F, M, A);
  }
}

/// F = a x^{p^h} + b with a != 0.
inline bool is_degree_preserving_form(const BaseField& F, const Poly& P) {
  detail::require(P.degree() >= 1, "degree-preserving check needs a non-constant polynomial");
  u64 n = static_cast<u64>(P.degree());
  for (u64 i = 1; i < n; ++i)
    if (P.c[i].code != 0) return false;
  while (n % F.p() == 0) n /= F.p();
  return n == 1;
}

/// The least j <= bound for which some f in I_j has deg(P (diamond) f) != j, if any.
inline std::optional<unsigned> degree_preserving_failure(const PolyRing& R, const Poly& P, unsigned bound,
                                                         u64 guard = kDefaultGuard) {
  detail::require(P.degree() >= 1, "degree-preserving check needs a non-constant polynomial");
  for (unsigned j = 1; j <= bound; ++j) {
    for (const Poly& f : R.enumerate_irreducibles(j, guard)) {
      // beta = P(alpha) in F_q[y]/(f); its degree is the least s with beta^{q^s} = beta
      const Poly beta = R.mod(P, f);
      Poly t = beta;
      unsigned s = 0;
      do {
        t = R.powmod(t, R.q(), f);
        ++s;
      } while (t != beta);
      if (s != j) return j;
    }
  }
  return std::nullopt;
}

/// deg(P (diamond) f) = deg(f) for every f in I_j, j <= bound.
inline bool check_degree_preserving(const PolyRing& R, const Poly& P, unsigned bound, u64 guard = kDefaultGuard) {
  return !degree_preserving_failure(R, P, bound, guard).has_value();
}

/// x^n; the criterion is gcd(n, q^k - 1) = 1.
inline PermPoly make_monomial(const FieldCtx& ctx, u64 n) {
  detail::require(n >= 1, "monomial exponent must be positive");
  const bool criterion = std::gcd(n, ctx.order() - 1) == 1;
  const Poly P = ctx.ring().monomial(ctx.base().one(), static_cast<std::size_t>(n));
  const bool certified = is_perm(ctx, P);
  detail::ensure(criterion == certified, "monomial criterion disagrees with exhaustive certification");
  if (!criterion)
    throw PreconditionError("x^" + std::to_string(n) + " is not a permutation: gcd(n, q^k - 1) != 1");
  return certify_perm(ctx, P);
}

/// L_h; the criterion is gcd(h, x^k - 1) = 1. h is first reduced mod x^k - 1.
inline PermPoly make_linearized(const FieldCtx& ctx, const Poly& h) {
  const PolyRing& R = ctx.ring();
  detail::require(!h.is_zero(), "L_0 is not a permutation");
  const Poly xk1 = R.x_pow_minus_one(ctx.k());
  const Poly hr = R.mod(h, xk1);
  const bool criterion = !hr.is_zero() && R.gcd(hr, xk1) == R.one();
  const Poly L = hr.is_zero() ? Poly{} : R.q_associate(hr, ctx.order());
  const bool certified = !L.is_zero() && is_perm(ctx, L);
  detail::ensure(criterion == certified, "linearized criterion disagrees with exhaustive certification");
  if (!criterion)
    throw PreconditionError("L_h is not a permutation: gcd(h, x^k - 1) != 1 for h = " + format_poly(ctx.base(), h));
  return certify_perm(ctx, L);
}

/// The polynomial representative of a Moebius map; the criterion is det(A) != 0.
inline PermPoly make_moebius(const FieldCtx& ctx, const Matrix2& A) { return moebius_poly_rep(ctx, A); }

}  // namespace permdyn

#endif  // PERMDYN_PERMGROUP_HPP
