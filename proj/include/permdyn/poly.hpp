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

// Dense univariate polynomials over F_q.
//
// PolyRing carries the ground field and implements the arithmetic: Euclid
// gcd, modular powering (including x^{q^j} by repeated q-th powers, so no
// big integers are needed for Frobenius exponents), modular composition,
// Rabin's irreducibility test, enumeration of I_k in canonical order,
// Cantor-Zassenhaus factorization and q-associates.

#ifndef PERMDYN_POLY_HPP
#define PERMDYN_POLY_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permdyn/base_field.hpp"
#include "permdyn/errors.hpp"
#include "permdyn/numtheory.hpp"

namespace permdyn {

/// Default desk-scale guard on q^k for exhaustive operations.
inline constexpr u64 kDefaultGuard = u64{1} << 20;

/// Seed of the Cantor-Zassenhaus generator; fixed so factorizations are reproducible.
inline constexpr u64 kFactorSeed = 0x5eedf00dcafeull;

/// Ascending coefficients without trailing zeros; the zero polynomial is empty.
struct Poly {
  std::vector<Scalar> c;

  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back().code == 0) c.pop_back();
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Scalar lead() const { return c.empty() ? Scalar{} : c.back(); }
  Scalar operator[](std::size_t i) const { return i < c.size() ? c[i] : Scalar{}; }

  std::size_t weight() const {
    return static_cast<std::size_t>(std::count_if(c.begin(), c.end(), [](Scalar s) { return s.code != 0; }));
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Canonical order: by degree, then coefficients from the top down. For monic
  /// polynomials of one degree this is the order of the mixed-radix code with the
  /// constant term least significant.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return a.c.size() <=> b.c.size();
    for (std::size_t i = a.c.size(); i-- > 0;)
      if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
    return std::strong_ordering::equal;
  }
};

/// A factorization entry: monic irreducible factor and its multiplicity.
using Factor = std::pair<Poly, unsigned>;

class PolyRing {
 public:
  explicit PolyRing(BaseField field) : F_(std::move(field)) {}

  const BaseField& field() const { return F_; }
  u64 q() const { return F_.q(); }

  Poly zero() const { return {}; }
  Poly one() const { return constant(F_.one()); }
  Poly x() const { return monomial(F_.one(), 1); }
  Poly constant(Scalar s) const { return Poly({s}); }

  Poly monomial(Scalar s, std::size_t n) const {
    if (s.code == 0) return {};
    std::vector<Scalar> c(n + 1);
    c[n] = s;
    return Poly(std::move(c));
  }

  /// Ascending integer coefficients, each mapped into the prime subfield.
  Poly from_ints(std::initializer_list<i64> coeffs) const {
    std::vector<Scalar> c;
    for (i64 v : coeffs) c.push_back(F_.from_int(v));
    return Poly(std::move(c));
  }

  /// x^n - 1.
  Poly x_pow_minus_one(std::size_t n) const { return sub(monomial(F_.one(), n), one()); }

  /// The monic degree-k polynomial whose lower coefficients are the base-q digits of code.
  Poly monic_from_code(u64 code, unsigned k) const {
    std::vector<Scalar> c(k + 1);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = {static_cast<std::uint32_t>(code % F_.q())};
      code /= F_.q();
    }
    c[k] = F_.one();
    return Poly(std::move(c));
  }

  Poly add(const Poly& a, const Poly& b) const {
    std::vector<Scalar> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.add(a[i], b[i]);
    return Poly(std::move(r));
  }

  Poly neg(const Poly& a) const {
    std::vector<Scalar> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.neg(a.c[i]);
    return Poly(std::move(r));
  }

  Poly sub(const Poly& a, const Poly& b) const {
    std::vector<Scalar> r(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.sub(a[i], b[i]);
    return Poly(std::move(r));
  }

  Poly scale(const Poly& a, Scalar s) const {
    if (s.code == 0) return {};
    std::vector<Scalar> r(a.c.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F_.mul(a.c[i], s);
    return Poly(std::move(r));
  }

  Poly monic(const Poly& a) const {
    if (a.is_zero()) return a;
    return scale(a, F_.inv(a.lead()));
  }

  Poly mul(const Poly& a, const Poly& b) const {
    if (a.is_zero() || b.is_zero()) return {};
    const std::size_t n = a.c.size(), m = b.c.size();
    if (F_.m() == 1) {
      const u64 p = F_.p();
      const u64 sq = (p - 1) * (p - 1);
      // rows accumulated before a forced reduction, keeping sums below 2^63
      const u64 burst = sq == 0 ? n : std::max<u64>(1, (u64{1} << 62) / sq);
      std::vector<u64> acc(n + m - 1, 0);
      u64 pending = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const u64 ai = a.c[i].code;
        if (ai == 0) continue;
        u64* row = acc.data() + i;
        for (std::size_t j = 0; j < m; ++j) row[j] += ai * b.c[j].code;
        if (++pending >= burst) {
          for (u64& v : acc) v %= p;
          pending = 0;
        }
      }
      std::vector<Scalar> r(n + m - 1);
      for (std::size_t i = 0; i < r.size(); ++i) r[i] = {static_cast<std::uint32_t>(acc[i] % p)};
      return Poly(std::move(r));
    }
    std::vector<Scalar> r(n + m - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (a.c[i].code == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i + j] = F_.add(r[i + j], F_.mul(a.c[i], b.c[j]));
    }
    return Poly(std::move(r));
  }

  /// Quotient and remainder; the divisor may be any nonzero polynomial.
  std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) const {
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly{}, a};
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const Scalar inv_lead = F_.inv(b.lead());
    std::vector<std::pair<std::size_t, Scalar>> terms;  // -b_j for the nonzero lower terms
    for (std::size_t j = 0; j < db; ++j)
      if (b.c[j].code != 0) terms.emplace_back(j, F_.neg(b.c[j]));
    std::vector<Scalar> r = a.c;
    std::vector<Scalar> quo(r.size() - db);
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i].code == 0) continue;
      const Scalar t = F_.mul(r[i], inv_lead);
      quo[i - db] = t;
      r[i] = {};
      const std::size_t base = i - db;
      for (auto [j, nb] : terms) r[base + j] = F_.add(r[base + j], F_.mul(t, nb));
    }
    r.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(r))};
  }

  Poly mod(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

  /// a / b, which must be exact.
  Poly div_exact(const Poly& a, const Poly& b) const {
    auto [quo, rem] = divmod(a, b);
    if (!rem.is_zero()) throw ConsistencyError("inexact polynomial division");
    return quo;
  }

  bool divides(const Poly& d, const Poly& a) const { return mod(a, d).is_zero(); }

  /// Monic gcd by Euclid's algorithm.
  Poly gcd(Poly a, Poly b) const {
    if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
      Poly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  Poly mulmod(const Poly& a, const Poly& b, const Poly& M) const { return mod(mul(a, b), M); }

  Poly powmod(const Poly& base, u64 e, const Poly& M) const {
    require_modulus(M);
    Poly r = mod(one(), M), b = mod(base, M);
    while (e) {
      if (e & 1) r = mulmod(r, b, M);
      e >>= 1;
      if (e) b = mulmod(b, b, M);
    }
    return r;
  }

  /// Arbitrary-size exponents (e.g. q^k beyond 64 bits).
  Poly powmod(const Poly& base, const boost::multiprecision::cpp_int& e, const Poly& M) const {
    require_modulus(M);
    if (e < 0) throw PreconditionError("negative exponent");
    Poly r = mod(one(), M), b = mod(base, M);
    const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
    for (std::size_t i = 0; i < bits; ++i) {
      if (boost::multiprecision::bit_test(e, i)) r = mulmod(r, b, M);
      if (i + 1 < bits) b = mulmod(b, b, M);
    }
    return r;
  }

  /// base^(q^j) mod M, by j successive q-th powers.
  Poly frobenius_powmod(const Poly& base, u64 j, const Poly& M) const {
    Poly r = mod(base, M);
    for (u64 i = 0; i < j; ++i) r = powmod(r, q(), M);
    return r;
  }

  /// f(P(x)) in full, by Horner.
  Poly compose(const Poly& f, const Poly& P) const {
    Poly r;
    for (std::size_t i = f.c.size(); i-- > 0;) r = add(mul(r, P), constant(f.c[i]));
    return r;
  }

  /// f(P(x)) mod M, by Horner over P modulo M.
  Poly compose_mod(const Poly& f, const Poly& P, const Poly& M) const {
    require_modulus(M);
    const Poly Pm = mod(P, M);
    Poly r;
    for (std::size_t i = f.c.size(); i-- > 0;) r = mod(add(mul(r, Pm), constant(f.c[i])), M);
    return r;
  }

  Scalar eval(const Poly& f, Scalar s) const {
    Scalar r{};
    for (std::size_t i = f.c.size(); i-- > 0;) r = F_.add(F_.mul(r, s), f.c[i]);
    return r;
  }

  Poly derivative(const Poly& f) const {
    if (f.c.size() <= 1) return {};
    std::vector<Scalar> r(f.c.size() - 1);
    for (std::size_t i = 1; i < f.c.size(); ++i) r[i - 1] = F_.mul(F_.from_int(static_cast<i64>(i % F_.p())), f.c[i]);
    return Poly(std::move(r));
  }

  /// Rabin's test: x^{q^n} = x mod f and gcd(x^{q^{n/r}} - x, f) = 1 for every prime r | n.
  bool is_irreducible(const Poly& f) const {
    if (f.degree() < 1) throw PreconditionError("irreducibility of a constant is undefined");
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == 1) return true;
    const Poly g = monic(f);
    std::vector<Poly> xq(n + 1);
    xq[0] = x();
    for (unsigned j = 1; j <= n; ++j) xq[j] = powmod(xq[j - 1], q(), g);
    if (xq[n] != x()) return false;
    for (auto [r, e] : nt::factorize(n).factors) {
      (void)e;
      if (gcd(g, sub(xq[n / r], x())).degree() != 0) return false;
    }
    return true;
  }

  /// All monic irreducibles of degree k, in canonical (code) order.
  std::vector<Poly> enumerate_irreducibles(unsigned k, u64 guard = kDefaultGuard) const {
    if (k == 0) throw PreconditionError("degree must be positive");
    const u64 total = nt::checked_pow(q(), k);
    if (total > guard)
      throw GuardExceeded("q^k = " + std::to_string(total) + " exceeds guard " + std::to_string(guard));
    std::vector<Poly> out;
    out.reserve(static_cast<std::size_t>(nt::count_irreducibles(q(), k)));
    for (u64 code = 0; code < total; ++code) {
      Poly f = monic_from_code(code, k);
      if (k > 1 && f.c[0].code == 0) continue;  // divisible by x
      if (is_irreducible(f)) out.push_back(std::move(f));
    }
    return out;
  }

  /// Psi_d: the product of all monic irreducibles of degree d.
  Poly psi(unsigned d, u64 guard = kDefaultGuard) const {
    Poly r = one();
    for (const Poly& f : enumerate_irreducibles(d, guard)) r = mul(r, f);
    return r;
  }

  /// Monic factorization: square-free split, distinct-degree, then Cantor-Zassenhaus.
  std::vector<Factor> factor(const Poly& f, u64 seed = kFactorSeed) const {
    if (f.degree() < 1) throw PreconditionError("cannot factor a constant");
    std::mt19937_64 rng(seed);
    std::vector<Factor> out;
    for (auto& [sq, mult] : squarefree(monic(f))) {
      for (auto& [block, d] : distinct_degree(sq)) {
        std::vector<Poly> pieces;
        equal_degree(block, d, rng, pieces);
        for (Poly& piece : pieces) out.emplace_back(std::move(piece), mult);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// L_g = sum g_i x^{q^i}.
  Poly q_associate(const Poly& g, u64 guard = kDefaultGuard) const {
    if (g.is_zero()) return {};
    const u64 top = nt::checked_pow(q(), static_cast<u64>(g.degree()));
    if (top > guard) throw GuardExceeded("q-associate degree " + std::to_string(top) + " exceeds guard");
    std::vector<Scalar> c(top + 1);
    u64 e = 1;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      c[e] = g.c[i];
      if (i + 1 < g.c.size()) e *= q();
    }
    return Poly(std::move(c));
  }

 private:
  static void require_modulus(const Poly& M) {
    if (M.degree() < 1) throw PreconditionError("modulus must have degree >= 1");
  }

  // p-th root of a polynomial whose derivative vanishes.
  Poly pth_root(const Poly& f) const {
    const std::size_t p = F_.p();
    const u64 root_exp = F_.q() / F_.p();  // a^{q/p} is the p-th root of a in F_q
    std::vector<Scalar> r(f.c.size() / p + 1);
    for (std::size_t i = 0; i < f.c.size(); i += p) r[i / p] = F_.pow(f.c[i], root_exp);
    return Poly(std::move(r));
  }

  std::vector<Factor> squarefree(const Poly& f) const {
    std::vector<Factor> out;
    if (f.degree() < 1) return out;
    const Poly fp = derivative(f);
    Poly c;
    if (!fp.is_zero()) {
      c = gcd(f, fp);
      Poly w = div_exact(f, c);
      unsigned i = 1;
      while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = div_exact(w, y);
        if (fac.degree() > 0) out.emplace_back(std::move(fac), i);
        c = div_exact(c, y);
        w = std::move(y);
        ++i;
      }
    } else {
      c = f;
    }
    if (c.degree() > 0) {
      for (auto& [g, e] : squarefree(pth_root(c))) out.emplace_back(std::move(g), e * F_.p());
    }
    return out;
  }

  std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly g) const {
    std::vector<std::pair<Poly, unsigned>> out;
    Poly h = x();
    for (unsigned d = 1; g.degree() >= 2 * static_cast<int>(d); ++d) {
      h = powmod(h, q(), g);
      Poly fac = gcd(g, sub(h, x()));
      if (fac.degree() > 0) {
        g = div_exact(g, fac);
        h = mod(h, g);
        out.emplace_back(std::move(fac), d);
      }
    }
    if (g.degree() > 0) out.emplace_back(g, static_cast<unsigned>(g.degree()));
    return out;
  }

  void equal_degree(const Poly& f, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) const {
    if (f.degree() == static_cast<int>(d)) {
      out.push_back(f);
      return;
    }
    std::uniform_int_distribution<std::uint32_t> coeff(0, F_.q() - 1);
    for (;;) {
      std::vector<Scalar> c(static_cast<std::size_t>(f.degree()));
      for (Scalar& s : c) s = {coeff(rng)};
      const Poly a(std::move(c));
      if (a.degree() < 1) continue;
      Poly probe;
      if (F_.p() == 2) {
        // absolute trace a + a^2 + ... + a^{2^{md-1}}
        Poly t = a, acc = a;
        for (unsigned i = 1; i < F_.m() * d; ++i) {
          t = mulmod(t, t, f);
          acc = add(acc, t);
        }
        probe = acc;
      } else {
        // a^{(q^d-1)/2} = (prod_{i<d} a^{q^i})^{(q-1)/2}
        Poly t = mod(a, f), prod = mod(a, f);
        for (unsigned i = 1; i < d; ++i) {
          t = powmod(t, q(), f);
          prod = mulmod(prod, t, f);
        }
        probe = sub(powmod(prod, (q() - 1) / 2, f), one());
      }
      if (probe.is_zero()) continue;
      Poly g = gcd(f, probe);
      if (g.degree() > 0 && g.degree() < f.degree()) {
        equal_degree(g, d, rng, out);
        equal_degree(div_exact(f, g), d, rng, out);
        return;
      }
    }
  }

  BaseField F_;
};

/// F_q with q = p^m; for m > 1 the base modulus is the least monic irreducible of
/// degree m over F_p in canonical order, unless one is supplied.
inline BaseField make_base_field(std::uint32_t p, std::uint32_t m = 1,
                                 std::optional<std::vector<std::uint32_t>> modulus = std::nullopt) {
  if (m == 0) throw PreconditionError("m must be positive");
  if (m == 1) return BaseField(p);
  const PolyRing prime_ring{BaseField(p)};
  if (modulus) {
    std::vector<Scalar> c;
    for (std::uint32_t v : *modulus) c.push_back({v % p});
    const Poly h(std::move(c));
    detail::require(h.degree() == static_cast<int>(m) && h.lead().code == 1, "base modulus must be monic of degree m");
    detail::require(prime_ring.is_irreducible(h), "base modulus is reducible over F_p");
    return BaseField(p, *modulus);
  }
  const Poly h = prime_ring.enumerate_irreducibles(m, u64{1} << 24).front();
  std::vector<std::uint32_t> digits;
  for (Scalar s : h.c) digits.push_back(s.code);
  return BaseField(p, std::move(digits));
}

}  // namespace permdyn

#endif  // PERMDYN_POLY_HPP
