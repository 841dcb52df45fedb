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

// Polynomial text format.
//
// Human form: "x^4+x^3+1", "2x^2-x+1", "[1,2]x^2+x". Integer coefficients are
// reduced mod p; a bracketed list is an element of F_q given by its ascending
// p-ary digits. CSV form: ascending coefficients "1,0,0,1,1". Printers always
// emit human form, highest degree first, with residues in [0, p).

#ifndef PERMDYN_TEXT_HPP
#define PERMDYN_TEXT_HPP

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "permdyn/base_field.hpp"
#include "permdyn/errors.hpp"
#include "permdyn/poly.hpp"

namespace permdyn {

inline std::string format_scalar(const BaseField& F, Scalar s) {
  if (F.in_prime_subfield(s)) return std::to_string(s.code);
  std::string out = "[";
  const auto d = F.digits(s);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d[i]);
  }
  return out + "]";
}

inline std::string format_poly(const BaseField& F, const Poly& f, char var = 'x') {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.c.size(); i-- > 0;) {
    const Scalar s = f.c[i];
    if (s.code == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || s.code != 1) out += format_scalar(F, s);
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(const BaseField& F, std::string_view text, char var) : F_(F), var_(var) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  Poly parse() {
    if (s_.empty()) fail("empty polynomial");
    const bool human = s_.find(var_) != std::string::npos || !has_top_level_comma();
    return human ? parse_human() : parse_csv();
  }

  Scalar parse_scalar_only() {
    const Scalar s = scalar();
    if (pos_ != s_.size()) fail("trailing characters");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + s_ + "': " + why);
  }

  bool has_top_level_comma() const {
    int depth = 0;
    for (char ch : s_) {
      if (ch == '[') ++depth;
      if (ch == ']') --depth;
      if (ch == ',' && depth == 0) return true;
    }
    return false;
  }

  bool at(char ch) const { return pos_ < s_.size() && s_[pos_] == ch; }

  u64 number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number at position " + std::to_string(start));
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc()) fail("number out of range");
    return v;
  }

  Scalar scalar() {
    bool negative = false;
    if (at('-')) {
      negative = true;
      ++pos_;
    }
    Scalar s;
    if (at('[')) {
      ++pos_;
      std::vector<std::uint32_t> digits;
      for (;;) {
        digits.push_back(static_cast<std::uint32_t>(number() % F_.p()));
        if (at(',')) {
          ++pos_;
          continue;
        }
        if (at(']')) {
          ++pos_;
          break;
        }
        fail("unterminated digit list");
      }
      if (digits.size() > F_.m()) fail("digit list longer than m = " + std::to_string(F_.m()));
      s = F_.from_digits(digits);
    } else {
      s = F_.from_int(static_cast<i64>(number() % F_.p()));
    }
    return negative ? F_.neg(s) : s;
  }

  void accumulate(std::vector<Scalar>& c, std::size_t deg, Scalar s) {
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] = F_.add(c[deg], s);
  }

  Poly parse_human() {
    std::vector<Scalar> c;
    bool first = true;
    while (pos_ < s_.size()) {
      bool negative = false;
      if (at('+') || at('-')) {
        negative = at('-');
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-' at position " + std::to_string(pos_));
      }
      first = false;
      Scalar coeff = F_.one();
      bool have_coeff = false;
      if (at('[') || (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        coeff = scalar();
        have_coeff = true;
        if (at('*')) ++pos_;
      }
      std::size_t deg = 0;
      if (at(var_)) {
        ++pos_;
        deg = 1;
        if (at('^')) {
          ++pos_;
          deg = static_cast<std::size_t>(number());
        }
      } else if (!have_coeff) {
        fail("expected a term at position " + std::to_string(pos_));
      }
      accumulate(c, deg, negative ? F_.neg(coeff) : coeff);
    }
    return Poly(std::move(c));
  }

  Poly parse_csv() {
    std::vector<Scalar> c;
    for (;;) {
      c.push_back(scalar());
      if (pos_ == s_.size()) break;
      if (!at(',')) fail("expected ',' at position " + std::to_string(pos_));
      ++pos_;
    }
    return Poly(std::move(c));
  }

  const BaseField& F_;
  char var_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses either text form; throws ParseError on malformed input.
inline Poly parse_poly(const BaseField& F, std::string_view text, char var = 'x') {
  return detail::PolyParser(F, text, var).parse();
}

/// An integer (reduced mod p, may be negative) or a bracketed digit list.
inline Scalar parse_scalar(const BaseField& F, std::string_view text) {
  return detail::PolyParser(F, text, 'x').parse_scalar_only();
}

}  // namespace permdyn

#endif  // PERMDYN_TEXT_HPP
