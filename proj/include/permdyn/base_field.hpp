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

// The ground field F_q, q = p^m.
//
// An element is stored as its canonical code: the mixed-radix integer
// sum_i d_i p^i of its coefficient vector (d_0, ..., d_{m-1}) in F_p[z]/(h),
// constant term least significant. For m = 1 the code is the residue itself.
// Multiplication for m > 1 goes through discrete log tables, which keeps every
// operation O(1) or O(m).

#ifndef PERMDYN_BASE_FIELD_HPP
#define PERMDYN_BASE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "permdyn/errors.hpp"
#include "permdyn/numtheory.hpp"

namespace permdyn {

/// An element of F_q, identified by its canonical code in [0, q).
struct Scalar {
  std::uint32_t code = 0;

  friend auto operator<=>(const Scalar&, const Scalar&) = default;
};

class BaseField {
 public:
  /// The prime field F_p.
  explicit BaseField(std::uint32_t p) : p_(p), m_(1), q_(p), modulus_{0, 1} {
    detail::require(nt::is_prime(p), "p = " + std::to_string(p) + " is not prime");
  }

  /// F_p[z]/(modulus); modulus is ascending, monic, of degree m >= 2 and must be
  /// irreducible over F_p (a reducible modulus is detected and rejected).
  BaseField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p), modulus_(std::move(modulus)) {
    detail::require(nt::is_prime(p), "p = " + std::to_string(p) + " is not prime");
    detail::require(modulus_.size() >= 2 && modulus_.back() == 1, "base modulus must be monic");
    m_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    const u64 q = nt::checked_pow(p, m_);
    if (q > (u64{1} << 24)) throw GuardExceeded("base field F_q with q = " + std::to_string(q) + " is too large");
    q_ = static_cast<std::uint32_t>(q);
    if (m_ > 1) build_tables();
  }

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Ascending coefficients of the defining polynomial of F_q over F_p (x itself when m = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Scalar zero() const { return {0}; }
  Scalar one() const { return {1}; }

  /// Image of an integer in the prime subfield.
  Scalar from_int(i64 v) const {
    i64 r = v % static_cast<i64>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  Scalar add(Scalar a, Scalar b) const {
    if (m_ == 1) {
      const std::uint32_t s = a.code + b.code;
      return {s >= p_ ? s - p_ : s};
    }
    if (p_ == 2) return {a.code ^ b.code};
    std::uint32_t r = 0, w = 1, x = a.code, y = b.code;
    while (x | y) {
      r += ((x % p_ + y % p_) % p_) * w;
      x /= p_;
      y /= p_;
      w *= p_;
    }
    return {r};
  }

  Scalar neg(Scalar a) const {
    if (m_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    if (p_ == 2) return a;
    std::uint32_t r = 0, w = 1, x = a.code;
    while (x) {
      r += ((p_ - x % p_) % p_) * w;
      x /= p_;
      w *= p_;
    }
    return {r};
  }

  Scalar sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

  Scalar mul(Scalar a, Scalar b) const {
    if (m_ == 1) return {static_cast<std::uint32_t>(static_cast<u64>(a.code) * b.code % p_)};
    if (a.code == 0 || b.code == 0) return {0};
    const auto& t = *tables_;
    std::uint32_t e = t.log[a.code] + t.log[b.code];
    if (e >= q_ - 1) e -= q_ - 1;
    return {t.exp[e]};
  }

  Scalar inv(Scalar a) const {
    if (a.code == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(q_));
    if (m_ == 1) return {static_cast<std::uint32_t>(nt::mod_inverse(a.code, p_))};
    const auto& t = *tables_;
    const std::uint32_t l = t.log[a.code];
    return {t.exp[l == 0 ? 0 : q_ - 1 - l]};
  }

  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

  Scalar pow(Scalar a, u64 e) const {
    Scalar r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  /// Coefficient vector over F_p, length m, constant term first.
  std::vector<std::uint32_t> digits(Scalar a) const {
    std::vector<std::uint32_t> d(m_);
    std::uint32_t x = a.code;
    for (std::uint32_t i = 0; i < m_; ++i) {
      d[i] = x % p_;
      x /= p_;
    }
    return d;
  }

  Scalar from_digits(std::span<const std::uint32_t> d) const {
    detail::require(d.size() <= m_, "too many p-ary digits for an element of F_" + std::to_string(q_));
    std::uint32_t r = 0, w = 1;
    for (std::uint32_t v : d) {
      r += (v % p_) * w;
      w *= p_;
    }
    return {r};
  }

  bool in_prime_subfield(Scalar a) const { return a.code < p_; }

  /// Identifies the field up to representation: p, m and the base modulus.
  std::string key() const {
    std::string s = "p=" + std::to_string(p_) + ",m=" + std::to_string(m_);
    if (m_ > 1) {
      s += ",h=";
      for (std::uint32_t c : modulus_) s += std::to_string(c) + ".";
    }
    return s;
  }

  friend bool operator==(const BaseField& a, const BaseField& b) {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  struct Tables {
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, i < q-1
    std::vector<std::uint32_t> log;  // log[exp[i]] = i; log[0] unused
  };

  // Multiplication on codes by schoolbook product modulo the base modulus.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    std::vector<u64> prod(2 * m_ - 1, 0);
    const auto da = digits({a}), db = digits({b});
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + u64{da[i]} * db[j]) % p_;
    for (std::size_t i = prod.size(); i-- > m_;) {
      const u64 t = prod[i];
      if (t == 0) continue;
      for (std::uint32_t j = 0; j <= m_; ++j)
        prod[i - m_ + j] = (prod[i - m_ + j] + (p_ - t) * modulus_[j]) % p_;
    }
    std::uint32_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      r += static_cast<std::uint32_t>(prod[i]) * w;
      w *= p_;
    }
    return r;
  }

  void build_tables() {
    auto t = std::make_shared<Tables>();
    t->exp.resize(q_ - 1);
    t->log.assign(q_, 0);
    for (std::uint32_t g = 2; g < q_; ++g) {
      std::uint32_t cur = 1;
      bool primitive = true;
      for (std::uint32_t i = 0; i + 1 < q_; ++i) {
        if (i > 0 && cur == 1) {
          primitive = false;
          break;
        }
        t->exp[i] = cur;
        cur = slow_mul(cur, g);
      }
      if (primitive && cur == 1) {
        for (std::uint32_t i = 0; i + 1 < q_; ++i) t->log[t->exp[i]] = i;
        tables_ = std::move(t);
        return;
      }
    }
    throw PreconditionError("base modulus is not irreducible over F_" + std::to_string(p_));
  }

  std::uint32_t p_ = 2;
  std::uint32_t m_ = 1;
  std::uint32_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

}  // namespace permdyn

#endif  // PERMDYN_BASE_FIELD_HPP
