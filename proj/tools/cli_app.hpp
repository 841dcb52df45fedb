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

// The permdyn command line, as a function so tests can drive it in-process.
//
// Exit codes: 0 ok, 1 malformed input, 2 precondition violated, 3 guard
// exceeded, 4 internal consistency failure.

#ifndef PERMDYN_TOOLS_CLI_APP_HPP
#define PERMDYN_TOOLS_CLI_APP_HPP

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "permdyn/dynamics.hpp"
#include "permdyn/field_core.hpp"
#include "permdyn/genirr.hpp"
#include "permdyn/io.hpp"
#include "permdyn/orders.hpp"
#include "permdyn/permgroup.hpp"
#include "permdyn/text.hpp"

namespace permdyn::cli {

enum ExitCode { kOk = 0, kMalformed = 1, kPrecondition = 2, kGuard = 3, kConsistency = 4 };

struct CliConfig {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  unsigned k = 1;
  std::string modulus;
  std::string base_modulus;
  std::optional<u64> guard;
  std::string format = "text";
  u64 seed = kFactorSeed;
};

inline BaseField base_of(const CliConfig& cfg) {
  if (cfg.m > 1 && !cfg.base_modulus.empty()) {
    const Poly h = parse_poly(BaseField(cfg.p), cfg.base_modulus);
    std::vector<std::uint32_t> digits;
    for (Scalar s : h.c) digits.push_back(s.code);
    return make_base_field(cfg.p, cfg.m, digits);
  }
  return make_base_field(cfg.p, cfg.m);
}

inline FieldCtx ctx_of(const CliConfig& cfg) {
  const BaseField F = base_of(cfg);
  std::optional<Poly> g;
  if (!cfg.modulus.empty()) g = parse_poly(F, cfg.modulus);
  return make_field_ctx(F, cfg.k, g, cfg.guard.value_or(kDefaultGuard));
}

/// Splits on top-level commas (brackets nest).
inline std::vector<std::string> split_top_level(const std::string& s) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : s) {
    if (ch == '[') ++depth;
    if (ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.emplace_back();
      continue;
    }
    out.back() += ch;
  }
  return out;
}

/// EXPR: x^N (monomial), L[POLY] (linearized), M[a,b,c,d] (Moebius) or a raw polynomial.
inline PermPoly parse_perm(const FieldCtx& ctx, const std::string& raw) {
  std::string e;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) e += ch;
  static const std::regex monomial(R"(x(\^([0-9]+))?)");
  std::smatch m;
  if (std::regex_match(e, m, monomial)) return make_monomial(ctx, m[2].matched ? std::stoull(m[2].str()) : 1);
  if (e.size() > 3 && (e[0] == 'L' || e[0] == 'M') && e[1] == '[' && e.back() == ']') {
    const std::string inner = e.substr(2, e.size() - 3);
    if (e[0] == 'L') return make_linearized(ctx, parse_poly(ctx.base(), inner));
    const auto parts = split_top_level(inner);
    if (parts.size() != 4) throw ParseError("M[a,b,c,d] needs four entries");
    const Matrix2 A{parse_scalar(ctx.base(), parts[0]), parse_scalar(ctx.base(), parts[1]),
                    parse_scalar(ctx.base(), parts[2]), parse_scalar(ctx.base(), parts[3])};
    return make_moebius(ctx, A);
  }
  return certify_perm(ctx, parse_poly(ctx.base(), e));
}

inline std::string summary_text(const CycleSummary& s) {
  std::string out;
  for (auto [len, cnt] : s) out += (out.empty() ? "" : " ") + ("(" + std::to_string(len) + "," + std::to_string(cnt) + ")");
  return out;
}

inline std::string set_text(const std::vector<u64>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

inline void add_field_options(CLI::App* sub, CliConfig& cfg, bool need_k = true) {
  sub->add_option("--p", cfg.p, "characteristic (prime)")->capture_default_str();
  sub->add_option("--m", cfg.m, "q = p^m")->capture_default_str();
  auto* k = sub->add_option("--k", cfg.k, "extension degree");
  if (need_k) k->required();
  sub->add_option("--modulus", cfg.modulus, "degree-k irreducible defining F_{q^k} (default: least in canonical order)");
  sub->add_option("--base-modulus", cfg.base_modulus, "degree-m irreducible over F_p defining F_q");
  sub->add_option("--guard", cfg.guard, "limit on q^k for exhaustive operations (default 2^20)");
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}))->capture_default_str();
  sub->add_option("--seed", cfg.seed, "seed for randomized factorization")->capture_default_str();
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permdyn: permutation polynomials acting on irreducible polynomials over finite fields"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string perm, fpoly, method = "both", on = "ik", family, sigma_file, npoly, gpoly, seed_poly;
  std::optional<u64> max_steps, nexp;

  auto* enumerate = app.add_subcommand("enumerate", "list I_k in canonical order");
  add_field_options(enumerate, cfg);

  auto* star_cmd = app.add_subcommand("star", "P * f = gcd(f(P), x^{q^k} - x)");
  auto* diamond_cmd = app.add_subcommand("diamond", "P <> f = minimal polynomial of P(alpha)");
  for (auto* sub : {star_cmd, diamond_cmd}) {
    add_field_options(sub, cfg);
    sub->add_option("--perm", perm, "x^N | L[POLY] | M[a,b,c,d] | POLY")->required();
    sub->add_option("--f", fpoly, "polynomial in I_k")->required();
  }

  auto* fixed = app.add_subcommand("fixed", "fixed points of f -> P * f on I_k");
  add_field_options(fixed, cfg);
  fixed->add_option("--perm", perm)->required();
  fixed->add_option("--method", method)->check(CLI::IsMember({"direct", "formula", "both"}))->capture_default_str();

  auto* graph = app.add_subcommand("graph", "functional graph on C_k or I_k");
  add_field_options(graph, cfg);
  graph->add_option("--perm", perm)->required();
  graph->add_option("--on", on)->check(CLI::IsMember({"ck", "ik"}))->capture_default_str();

  auto* spec_cmd = app.add_subcommand("spectrum", "period spectra on C_k and I_k");
  add_field_options(spec_cmd, cfg);
  spec_cmd->add_option("--perm", perm)->required();

  auto* generate = app.add_subcommand("generate", "iterate f_i = P * f_{i-1}");
  add_field_options(generate, cfg);
  generate->add_option("--perm", perm)->required();
  generate->add_option("--seed-poly", seed_poly, "f_0 in I_k")->required();
  generate->add_option("--max-steps", max_steps, "default |I_k| + 1");

  auto* realize = app.add_subcommand("realize", "interpolate a P in G_k inducing sigma on I_k");
  add_field_options(realize, cfg);
  realize->add_option("--sigma", sigma_file, "JSON file of [from, to] index pairs ('-' for stdin)")->required();

  auto* bounds = app.add_subcommand("bounds", "lower bounds for the iterated construction");
  add_field_options(bounds, cfg);
  bounds->add_option("--family", family)->check(CLI::IsMember({"monomial", "linearized", "tau"}))->required();
  bounds->add_option("--n", nexp, "monomial exponent");
  bounds->add_option("--g", gpoly, "linearized symbol g");

  auto* orders_cmd = app.add_subcommand("orders", "ord, Ord, norm and trace of f in I_k");
  add_field_options(orders_cmd, cfg, false);
  orders_cmd->add_option("--f", fpoly)->required();

  auto* invariants = app.add_subcommand("invariants", "check order/norm/trace preservation for P and f");
  add_field_options(invariants, cfg);
  invariants->add_option("--perm", perm)->required();
  invariants->add_option("--f", fpoly)->required();

  auto* factor_cmd = app.add_subcommand("factor", "factor a polynomial over F_q");
  add_field_options(factor_cmd, cfg, false);
  factor_cmd->add_option("--poly", npoly)->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kMalformed;
  }

  const bool json = cfg.format == "json";
  try {
    if (enumerate->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const auto irr = ctx.ring().enumerate_irreducibles(ctx.k(), ctx.guard());
      if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Poly& f : irr) j.push_back(format_poly(ctx.base(), f));
        out << j.dump() << "\n";
      } else {
        for (const Poly& f : irr) out << format_poly(ctx.base(), f) << "\n";
      }
    } else if (star_cmd->parsed() || diamond_cmd->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      const Poly f = parse_poly(ctx.base(), fpoly);
      const Poly r = star_cmd->parsed() ? star(ctx, P, f) : diamond(ctx, P, f);
      out << format_poly(ctx.base(), r) << "\n";
    } else if (fixed->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      std::optional<std::vector<Poly>> direct;
      std::optional<u64> formula;
      if (method != "formula") direct = fixed_points_direct(ctx, P);
      if (method != "direct") formula = fixed_count_formula(ctx, P);
      if (direct && formula && direct->size() != *formula)
        throw ConsistencyError("direct count " + std::to_string(direct->size()) + " != formula count " +
                               std::to_string(*formula));
      const u64 n = formula ? *formula : direct->size();
      if (json) {
        nlohmann::json j = {{"count", n}};
        if (direct) {
          j["fixed"] = nlohmann::json::array();
          for (const Poly& f : *direct) j["fixed"].push_back(format_poly(ctx.base(), f));
        }
        out << j.dump() << "\n";
      } else {
        if (direct)
          for (const Poly& f : *direct) out << format_poly(ctx.base(), f) << "\n";
        out << n << " fixed points\n";
      }
    } else if (graph->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      const FunctionalGraph G = on == "ck" ? graph_Ck(ctx, P) : graph_Ik(ctx, P);
      if (cfg.format == "dot") {
        out << to_dot(G, on == "ck" ? "C_k" : "I_k");
      } else if (json) {
        out << to_json(G).dump() << "\n";
      } else {
        out << "nodes: " << G.nodes.size() << "\n";
        out << "summary: " << summary_text(G.summary) << "\n";
        for (const auto& cyc : G.cycles) {
          out << "(";
          for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
          out << ")\n";
        }
      }
    } else if (spec_cmd->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      const CycleSpectrum ck = spectrum(graph_Ck(ctx, P)), ik = spectrum(graph_Ik(ctx, P));
      if (json) {
        out << nlohmann::json{{"S_P", ck.S}, {"mu_k", ck.mu}, {"S_P_star", ik.S}, {"mu_k_star", ik.mu}}.dump() << "\n";
      } else {
        out << "S_P = " << set_text(ck.S) << "\n";
        out << "mu_k = " << ck.mu << "\n";
        out << "S*_P = " << set_text(ik.S) << "\n";
        out << "mu*_k = " << ik.mu << "\n";
      }
    } else if (generate->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      const Poly f0 = parse_poly(ctx.base(), seed_poly);
      detail::require_in_ik(ctx, f0);
      std::optional<Rational> bound;
      try {
        if (const auto n = monomial_exponent(P.poly())) {
          bound = bound_monomial(ctx.q(), ctx.k(), *n);
        } else if (const auto g = linearized_symbol(ctx.ring(), P.poly())) {
          bound = bound_linearized(ctx.ring(), ctx.k(), *g);
        }
      } catch (const PreconditionError&) {
        bound.reset();  // hypotheses of the bound do not hold
      }
      const GenReport r = iterate_generation(ctx, P, f0, max_steps, bound);
      if (json) {
        out << to_json(ctx.base(), r).dump() << "\n";
      } else {
        for (const Poly& f : r.produced) out << format_poly(ctx.base(), f) << "\n";
        out << "period = " << (r.period ? std::to_string(*r.period) : "none (max steps reached)") << "\n";
        if (r.bound) out << "bound = " << r.bound->to_string() << "\n";
      }
    } else if (realize->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      std::string text;
      if (sigma_file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
      } else {
        std::ifstream in(sigma_file);
        if (!in) throw ParseError("cannot read " + sigma_file);
        text.assign(std::istreambuf_iterator<char>(in), {});
      }
      const std::size_t n = static_cast<std::size_t>(nt::count_irreducibles(ctx.q(), ctx.k()));
      const PermPoly P = realize_permutation(ctx, parse_sigma_json(text, n));
      out << format_poly(ctx.base(), P.poly()) << "\n";
    } else if (bounds->parsed()) {
      if (family == "tau") {
        detail::require(nt::is_prime(cfg.k), "tau needs k prime");
        out << "tau(" << cfg.p << "," << cfg.k << ") = " << tau(cfg.p, cfg.k) << "\n";
        out << "ceil(tau/k) = " << tau_ceiling_over_k(cfg.p, cfg.k) << "\n";
      } else if (family == "monomial") {
        if (!nexp) throw ParseError("--family monomial needs --n");
        const BaseField F = base_of(cfg);
        out << "bound = ord_r(n)/k = " << bound_monomial(F.q(), cfg.k, *nexp).to_string() << "\n";
      } else {
        if (gpoly.empty()) throw ParseError("--family linearized needs --g");
        const PolyRing R(base_of(cfg));
        out << "bound = O(g,E_k)/k = " << bound_linearized(R, cfg.k, parse_poly(R.field(), gpoly)).to_string() << "\n";
      }
    } else if (orders_cmd->parsed()) {
      const PolyRing R(base_of(cfg));
      const Poly f = parse_poly(R.field(), fpoly);
      detail::require_irreducible(R, f);
      const std::string ord = f == R.x() ? "undefined" : std::to_string(mult_order(R, f));
      const std::string Ord = format_poly(R.field(), fq_order(R, f));
      if (json) {
        out << nlohmann::json{{"ord", ord}, {"Ord", Ord}, {"norm", format_scalar(R.field(), norm_of(R, f))},
                              {"trace", format_scalar(R.field(), trace_of(R, f))}, {"primitive", is_primitive(R, f)},
                              {"normal", is_normal(R, f)}}
                   .dump()
            << "\n";
      } else {
        out << "ord = " << ord << "\n";
        out << "Ord = " << Ord << "\n";
        out << "norm = " << format_scalar(R.field(), norm_of(R, f)) << "\n";
        out << "trace = " << format_scalar(R.field(), trace_of(R, f)) << "\n";
        out << "primitive = " << (is_primitive(R, f) ? "yes" : "no") << "\n";
        out << "normal = " << (is_normal(R, f) ? "yes" : "no") << "\n";
      }
    } else if (invariants->parsed()) {
      const FieldCtx ctx = ctx_of(cfg);
      const PermPoly P = parse_perm(ctx, perm);
      const InvariantReport rep = invariant_report(ctx, P, parse_poly(ctx.base(), fpoly));
      auto show = [&](const char* name, const std::optional<bool>& v) {
        if (v) out << name << " = " << (*v ? "holds" : "FAILS") << "\n";
      };
      out << "family = " << rep.family << "\n";
      show("ord_preserved", rep.ord_preserved);
      show("norm_relation", rep.norm_relation);
      show("fq_order_preserved", rep.fq_order_preserved);
      show("trace_relation", rep.trace_relation);
      if (!rep.all_hold()) throw ConsistencyError("an invariant check failed");
    } else if (factor_cmd->parsed()) {
      const PolyRing R(base_of(cfg));
      for (const auto& [g, e] : R.factor(parse_poly(R.field(), npoly), cfg.seed))
        out << "(" << format_poly(R.field(), g) << ")" << (e > 1 ? "^" + std::to_string(e) : "") << "\n";
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kMalformed;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return kGuard;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << "\n";
    return kConsistency;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConsistency;
  }
  return kOk;
}

}  // namespace permdyn::cli

#endif  // PERMDYN_TOOLS_CLI_APP_HPP
