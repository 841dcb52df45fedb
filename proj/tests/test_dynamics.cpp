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

#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "permdyn/dynamics.hpp"
#include "test_util.hpp"

using namespace permdyn;
using testutil::P;
using testutil::S;
using testutil::to_ip;

namespace {

using Summary = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

// G(P, C_k) by oracle evaluation restricted to elements of full degree.
Summary brute_ck_summary(const FieldCtx& ctx, const Poly& Pm) {
  const oracle::Field O(ctx.q(), to_ip(ctx.modulus()));
  std::vector<long long> ck;
  std::map<long long, long long> idx;
  for (long long a = 0; a < O.Q; ++a)
    if (O.degree(a) == O.k) {
      idx[a] = static_cast<long long>(ck.size());
      ck.push_back(a);
    }
  std::vector<long long> perm;
  for (long long a : ck) perm.push_back(idx.at(O.eval(to_ip(Pm), a)));
  return oracle::cycle_summary(perm);
}

// G(P, I_k) with the star computed against the fully written x^{q^k} - x.
Summary brute_ik_summary(const FieldCtx& ctx, const Poly& Pm) {
  const auto irr = oracle::irreducibles(ctx.q(), ctx.k());
  std::map<oracle::IP, long long> idx;
  for (std::size_t i = 0; i < irr.size(); ++i) idx[irr[i]] = static_cast<long long>(i);
  std::vector<long long> perm;
  for (const auto& f : irr) perm.push_back(idx.at(oracle::star_full_gcd(ctx.q(), ctx.k(), to_ip(Pm), f)));
  return oracle::cycle_summary(perm);
}

std::vector<Matrix2> all_gl2(const BaseField& F) {
  std::vector<Matrix2> out;
  for (std::uint32_t a = 0; a < F.q(); ++a)
    for (std::uint32_t b = 0; b < F.q(); ++b)
      for (std::uint32_t c = 0; c < F.q(); ++c)
        for (std::uint32_t d = 0; d < F.q(); ++d)
          if (det(F, {{a}, {b}, {c}, {d}}).code != 0) out.push_back({{a}, {b}, {c}, {d}});
  return out;
}

std::vector<PermPoly> battery_perms(const FieldCtx& ctx) {
  auto out = testutil::monomial_perms(ctx);
  const auto lin = testutil::linearized_perms(ctx);
  out.insert(out.end(), lin.begin(), lin.end());
  return out;
}

}  // namespace

TEST(Star, MonomialX7OnI4) {
  const FieldCtx ctx = make_field_ctx(2, 1, 4);
  const PermPoly p7 = certify_perm(ctx, P(ctx, "x^7"));
  EXPECT_EQ(S(ctx, star(ctx, p7, P(ctx, "x^4+x+1"))), "x^4+x^3+1");
  EXPECT_EQ(S(ctx, star(ctx, p7, P(ctx, "x^4+x^3+1"))), "x^4+x+1");
  EXPECT_EQ(S(ctx, star(ctx, p7, P(ctx, "x^4+x^3+x^2+x+1"))), "x^4+x^3+x^2+x+1");
  EXPECT_EQ(S(ctx, diamond(ctx, p7, P(ctx, "x^4+x^3+1"))), "x^4+x+1");
}

TEST(Star, LinearizedXPlus1OnI3) {
  const FieldCtx ctx = make_field_ctx(3, 1, 3);
  const PermPoly L = make_linearized(ctx, P(ctx, "x+1"));
  EXPECT_EQ(S(ctx, L.poly()), "x^3+x");
  EXPECT_EQ(S(ctx, star(ctx, L, P(ctx, "x^3-x+1"))), S(ctx, P(ctx, "x^3-x-1")));
  // (1 2)(3 8 4 6 5 7) in the canonical listing
  const auto G = graph_Ik(ctx, L);
  std::vector<std::vector<std::size_t>> cycles = G.cycle_indices;
  EXPECT_EQ(cycles, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 7, 3, 5, 4, 6}}));
  EXPECT_EQ(G.summary, (CycleSummary{{2, 1}, {6, 1}}));
}

TEST(Star, RejectsBadInput) {
  const FieldCtx ctx = make_field_ctx(2, 1, 4);
  const PermPoly p7 = make_monomial(ctx, 7);
  EXPECT_THROW(star(ctx, p7, P(ctx, "x^4+1")), PreconditionError);
  EXPECT_THROW(star(ctx, p7, P(ctx, "x^3+x+1")), PreconditionError);
  const FieldCtx other = make_field_ctx(2, 1, 4, P(ctx, "x^4+x^3+1"));
  EXPECT_THROW(star(other, p7, P(ctx, "x^4+x+1")), PreconditionError);
}

TEST(Star, MatchesFullFieldGcdOracle) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const PermPoly& Pm : battery_perms(ctx))
      for (const Poly& f : ctx.ring().enumerate_irreducibles(k))
        EXPECT_EQ(to_ip(star(ctx, Pm, f)), oracle::star_full_gcd(p, k, to_ip(Pm.poly()), to_ip(f)))
            << S(ctx, Pm.poly()) << " * " << S(ctx, f);
  }
}

TEST(Star, GcdAndRootRoutesAgreeAndDualityHolds) {
  std::mt19937_64 rng(31);
  for (auto [p, m, k] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}, {3u, 2u, 2u}, {2u, 1u, 6u}}) {
    const FieldCtx ctx = make_field_ctx(p, m, k);
    const auto irr = ctx.ring().enumerate_irreducibles(k);
    std::vector<PermPoly> perms = battery_perms(ctx);
    std::vector<std::size_t> sigma(irr.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    perms.push_back(realize_permutation(ctx, sigma));
    perms = testutil::thin(perms, 40);
    for (const PermPoly& Pm : perms) {
      const auto inv = inverse_table(ctx, Pm);
      for (const Poly& f : irr) {
        const Poly s = star(ctx, Pm, f);
        EXPECT_EQ(s, star_by_roots(ctx, Pm, f, &inv));
        EXPECT_EQ(diamond(ctx, Pm, s), f);
        EXPECT_EQ(star(ctx, Pm, diamond(ctx, Pm, f)), f);
      }
    }
  }
}

TEST(Star, LargeDegreeUsesReduction) {
  // deg f * deg P > q^k takes the reduced route
  const FieldCtx ctx = make_field_ctx(2, 1, 5);
  const PermPoly Pm = make_monomial(ctx, 29);
  for (const Poly& f : ctx.ring().enumerate_irreducibles(5))
    EXPECT_EQ(to_ip(star(ctx, Pm, f)), oracle::star_full_gcd(2, 5, to_ip(Pm.poly()), to_ip(f)));
  EXPECT_EQ(star_by_roots(ctx, Pm, P(ctx, "x^5+x^2+1")), star(ctx, Pm, P(ctx, "x^5+x^2+1")));
}

TEST(Star, IdentityAndFrobenius) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    const PermPoly id = gk_identity(ctx);
    const PermPoly frob = make_monomial(ctx, p);
    for (const Poly& f : ctx.ring().enumerate_irreducibles(k)) {
      EXPECT_EQ(star(ctx, id, f), f);
      EXPECT_EQ(diamond(ctx, id, f), f);
      EXPECT_EQ(star(ctx, frob, f), f);
    }
    EXPECT_EQ(fixed_points_direct(ctx, frob).size(), nt::count_irreducibles(p, k));
    EXPECT_EQ(fixed_count_formula(ctx, frob), nt::count_irreducibles(p, k));
  }
}

TEST(Star, CompositionIsAnAntiHomomorphism) {
  const FieldCtx ctx = make_field_ctx(3, 1, 3);
  const auto perms = battery_perms(ctx);
  for (std::size_t i = 0; i < perms.size(); i += 3)
    for (std::size_t j = 1; j < perms.size(); j += 5) {
      const PermPoly PQ = gk_compose(ctx, perms[i], perms[j]);
      for (const Poly& f : ctx.ring().enumerate_irreducibles(3))
        EXPECT_EQ(star(ctx, PQ, f), star(ctx, perms[j], star(ctx, perms[i], f)));
    }
}

TEST(FixedPoints, Examples) {
  const FieldCtx c24 = make_field_ctx(2, 1, 4);
  const PermPoly p7 = make_monomial(c24, 7);
  const auto fp = fixed_points_direct(c24, p7);
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(S(c24, fp[0]), "x^4+x^3+x^2+x+1");
  EXPECT_EQ(fixed_count_formula(c24, p7), 1u);
  EXPECT_EQ(fixed_count_monomial(2, 4, 7), 1u);

  const FieldCtx c33 = make_field_ctx(3, 1, 3);
  const PermPoly L = make_linearized(c33, P(c33, "x+1"));
  EXPECT_TRUE(fixed_points_direct(c33, L).empty());
  EXPECT_EQ(fixed_count_formula(c33, L), 0u);
  EXPECT_EQ(fixed_count_linearized(c33.ring(), 3, P(c33, "x+1")), 0u);

  const BaseField F2(2);
  EXPECT_EQ(fixed_count_linearized(PolyRing(F2), 3, P(F2, "x^2")), 2u);
  EXPECT_EQ(fixed_count_linearized(PolyRing(F2), 4, P(F2, "1")), 3u);
  EXPECT_EQ(fixed_count_monomial(2, 5, 33), 6u);
  EXPECT_EQ(fixed_count_monomial(3, 1, 1), 3u);
  EXPECT_EQ(fixed_count_prime_monomial(2, 5, 33), 6u);
  EXPECT_EQ(fixed_count_prime_monomial(2, 5, 3), 0u);
  const BaseField F3(3);
  EXPECT_EQ(fixed_count_prime_linearized(PolyRing(F3), 5, P(F3, "x^2")), 48u);
}

TEST(FixedPoints, AllRoutesAgreeOnBattery) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    const PolyRing& R = ctx.ring();
    for (const PermPoly& Pm : battery_perms(ctx)) {
      const u64 direct = fixed_points_direct(ctx, Pm).size();
      EXPECT_EQ(fixed_count_formula(ctx, Pm), direct);
      EXPECT_EQ(graph_Ik(ctx, Pm).fixed_count(), direct);
      if (auto n = monomial_exponent(Pm.poly())) {
        EXPECT_EQ(fixed_count_monomial(p, k, *n), direct);
      }
      if (auto g = linearized_symbol(R, Pm.poly())) {
        EXPECT_EQ(fixed_count_linearized(R, k, *g), direct);
      }
    }
  }
}

TEST(FixedPoints, PrimeCaseClosedForms) {
  // (2,3): r = 7; (2,5): r = 31; (3,3): r = 13
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 3u}}) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const PermPoly& Pm : testutil::monomial_perms(ctx)) {
      const u64 n = *monomial_exponent(Pm.poly());
      EXPECT_EQ(fixed_count_prime_monomial(p, k, n), fixed_points_direct(ctx, Pm).size()) << n;
    }
  }
  // T irreducible: (2,3), (2,5), (3,5)
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 5u}, {3u, 5u}}) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    const PolyRing& R = ctx.ring();
    std::mt19937_64 rng(p * 100 + k);
    auto lin = testutil::linearized_perms(ctx);
    std::shuffle(lin.begin(), lin.end(), rng);
    lin = testutil::thin(lin, 30);
    for (const PermPoly& Pm : lin) {
      const Poly g = *linearized_symbol(R, Pm.poly());
      EXPECT_EQ(fixed_count_prime_linearized(R, k, g), fixed_points_direct(ctx, Pm).size()) << S(ctx, g);
    }
  }
}

TEST(FixedPoints, PrimeCaseHypotheses) {
  EXPECT_THROW(fixed_count_prime_monomial(2, 4, 7), PreconditionError);
  EXPECT_THROW(fixed_count_prime_monomial(2, 5, 31), PreconditionError);
  const BaseField F2(2);
  EXPECT_THROW(fixed_count_prime_linearized(PolyRing(F2), 7, P(F2, "x")), PreconditionError);
}

TEST(FixedPoints, RandomInterpolatedPermutations) {
  const FieldCtx ctx = make_field_ctx(2, 1, 5);
  const auto irr = ctx.ring().enumerate_irreducibles(5);
  std::mt19937_64 rng(77);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::size_t> sigma(irr.size());
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const PermPoly Pm = realize_permutation(ctx, sigma);
    u64 expected = 0;
    for (std::size_t i = 0; i < sigma.size(); ++i) expected += sigma[i] == i;
    EXPECT_EQ(fixed_points_direct(ctx, Pm).size(), expected);
    EXPECT_EQ(fixed_count_formula(ctx, Pm), expected);
  }
}

TEST(Graphs, MonomialX7OnI4) {
  const FieldCtx ctx = make_field_ctx(2, 1, 4);
  const PermPoly p7 = make_monomial(ctx, 7);
  const auto G = graph_Ik(ctx, p7);
  EXPECT_EQ(G.summary, (CycleSummary{{1, 1}, {2, 1}}));
  EXPECT_EQ(G.cycles[0], (std::vector<std::string>{"x^4+x+1", "x^4+x^3+1"}));
  EXPECT_EQ(period_Ik(ctx, p7, P(ctx, "x^4+x+1")), 2u);
  EXPECT_EQ(graph_Ck(ctx, p7).summary, (CycleSummary{{4, 3}}));
  EXPECT_EQ(graph_Ik(ctx, p7, StarMethod::roots).summary, G.summary);
}

TEST(Graphs, IdentityPeriods) {
  const FieldCtx ctx = make_field_ctx(3, 1, 2);
  const PermPoly id = gk_identity(ctx);
  EXPECT_EQ(period_Ik(ctx, id, P(ctx, "x^2+1")), 1u);
  EXPECT_EQ(period_Ck(ctx, id, ctx.gen()), 1u);
  EXPECT_THROW(period_Ck(ctx, id, ctx.one()), PreconditionError);
}

TEST(Graphs, MatchBruteForce) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    auto perms = battery_perms(ctx);
    perms = testutil::thin(perms, 40);
    for (const PermPoly& Pm : perms) {
      EXPECT_EQ(graph_Ck(ctx, Pm).summary, brute_ck_summary(ctx, Pm.poly()));
      EXPECT_EQ(graph_Ik(ctx, Pm).summary, brute_ik_summary(ctx, Pm.poly()));
    }
  }
}

TEST(Graphs, BuildFunctionalGraph) {
  const auto G = build_functional_graph({"a", "b", "c", "d"}, {2, 1, 0, 3});
  EXPECT_EQ(G.cycles, (std::vector<std::vector<std::string>>{{"a", "c"}, {"b"}, {"d"}}));
  EXPECT_EQ(G.summary, (CycleSummary{{1, 2}, {2, 1}}));
  EXPECT_EQ(G.cycle_of, (std::vector<std::size_t>{0, 1, 0, 2}));
  EXPECT_THROW(build_functional_graph({"a", "b"}, {0, 0}), PreconditionError);
  const auto sp = spectrum(G);
  EXPECT_EQ(sp.S, (std::vector<u64>{1, 2}));
  EXPECT_EQ(sp.mu, 1u);
}

TEST(Graphs, ContractionForFigures) {
  const FieldCtx ctx = make_field_ctx(2, 1, 6);
  const PermPoly Pm = certify_perm(ctx, P(ctx, "x^13+1"));
  const auto Gc = graph_Ck(ctx, Pm);
  const auto Gi = graph_Ik(ctx, Pm);
  std::map<std::string, std::size_t> ik_index;
  for (std::size_t i = 0; i < Gi.nodes.size(); ++i) ik_index[Gi.nodes[i]] = i;
  const auto ck = ctx.enumerate_ck();
  for (const auto& cyc : Gc.cycle_indices) {
    const Poly m = ctx.minimal_poly(ck[cyc[0]]);
    const auto& icyc = Gi.cycle_indices[Gi.cycle_of[ik_index.at(S(ctx, m))]];
    EXPECT_EQ(cyc.size(), 6 * icyc.size());
  }
}

TEST(Graphs, DivisibilitySandwich) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    auto perms = battery_perms(ctx);
    perms = testutil::thin(perms, 30);
    for (const PermPoly& Pm : perms) {
      const auto Gc = graph_Ck(ctx, Pm);
      const auto Gi = graph_Ik(ctx, Pm);
      std::map<std::string, u64> ik_period;
      for (const auto& cyc : Gi.cycles)
        for (const auto& n : cyc) ik_period[n] = cyc.size();
      const auto ck = ctx.enumerate_ck();
      for (std::size_t i = 0; i < ck.size(); ++i) {
        const u64 c = Gc.cycle_indices[Gc.cycle_of[i]].size();
        const u64 cs = ik_period.at(S(ctx, ctx.minimal_poly(ck[i])));
        EXPECT_EQ(c % cs, 0u);
        EXPECT_EQ(cs % (c / std::gcd(c, u64{k})), 0u);
        if (cs == 1) {
          EXPECT_EQ(k % c, 0u);
        }
        if (std::gcd(c, u64{k}) == 1) {
          EXPECT_EQ(cs, c);
        }
      }
      const u64 mu = spectrum(Gc).mu, mus = spectrum(Gi).mu;
      EXPECT_LE(mu, k * mus);
      EXPECT_LE(mus, mu);
    }
  }
}

TEST(ClosedForms, MonomialExamples) {
  EXPECT_EQ(monomial_cycle_structure(2, 4, 7), (CycleSummary{{4, 3}}));
  // C_1 = F_2 includes 0, so the identity has two fixed points
  EXPECT_EQ(monomial_cycle_structure(2, 1, 1), (CycleSummary{{1, 2}}));
  EXPECT_THROW(monomial_cycle_structure(2, 4, 3), PreconditionError);
}

TEST(ClosedForms, MonomialMatchesBruteForce) {
  for (auto [p, k] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 2u}, {3u, 3u}, {2u, 6u}}) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const PermPoly& Pm : testutil::monomial_perms(ctx))
      EXPECT_EQ(monomial_cycle_structure(p, k, *monomial_exponent(Pm.poly())), brute_ck_summary(ctx, Pm.poly()));
  }
}

TEST(ClosedForms, LinearizedMatchesBruteForce) {
  const BaseField F3(3);
  const FieldCtx c33 = make_field_ctx(3, 1, 3);
  const auto s = linearized_cycle_structure(c33.ring(), 3, P(F3, "x+1"));
  EXPECT_EQ(s, brute_ck_summary(c33, P(F3, "x^3+x")));
  u64 total = 0;
  for (auto [len, cnt] : s) total += len * cnt;
  EXPECT_EQ(total, 24u);
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const PermPoly& Pm : testutil::linearized_perms(ctx)) {
      const Poly g = *linearized_symbol(ctx.ring(), Pm.poly());
      EXPECT_EQ(linearized_cycle_structure(ctx.ring(), k, g), brute_ck_summary(ctx, Pm.poly())) << S(ctx, g);
    }
  }
}

TEST(ClosedForms, MoebiusExamplesAndBruteForce) {
  const BaseField F3(3), F2(2);
  EXPECT_EQ(moebius_cycle_structure(F3, 3, {{0}, {1}, {1}, {0}}), (CycleSummary{{2, 12}}));
  EXPECT_EQ(moebius_cycle_structure(F2, 3, {{1}, {1}, {0}, {1}}), (CycleSummary{{2, 3}}));
  EXPECT_EQ(moebius_cycle_structure(F2, 4, {{1}, {0}, {0}, {1}}), (CycleSummary{{1, 12}}));
  EXPECT_THROW(moebius_cycle_structure(F3, 2, {{0}, {1}, {1}, {0}}), PreconditionError);
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 4u}, {3u, 3u}}) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const Matrix2& A : all_gl2(ctx.base()))
      EXPECT_EQ(moebius_cycle_structure(ctx.base(), k, A), brute_ck_summary(ctx, make_moebius(ctx, A).poly()));
  }
}

TEST(ClosedForms, MoebiusFixedPointVanishing) {
  for (auto [p, k] : {std::pair{2u, 3u}, {2u, 4u}, {2u, 5u}, {3u, 3u}}) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const Matrix2& A : all_gl2(ctx.base())) {
      const u64 D = pgl2_order(ctx.base(), A);
      if (k % D == 0) continue;
      EXPECT_EQ(graph_Ik(ctx, make_moebius(ctx, A)).fixed_count(), 0u);
    }
  }
}

TEST(MoebiusStar, MatchesStarOfRepresentative) {
  const FieldCtx c24 = make_field_ctx(2, 1, 4);
  EXPECT_EQ(S(c24, moebius_star(c24, {{1}, {1}, {0}, {1}}, P(c24, "x^4+x+1"))), "x^4+x+1");
  EXPECT_EQ(moebius_star(c24, {{1}, {0}, {0}, {1}}, P(c24, "x^4+x^3+1")), P(c24, "x^4+x^3+1"));
  for (auto [p, m, k] : {std::tuple{2u, 1u, 3u}, {2u, 1u, 4u}, {3u, 1u, 2u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    const FieldCtx ctx = make_field_ctx(p, m, k);
    const auto mats = all_gl2(ctx.base());
    const auto irr = ctx.ring().enumerate_irreducibles(k);
    for (std::size_t i = 0; i < mats.size(); i += (mats.size() > 60 ? 7 : 1)) {
      const PermPoly rep = make_moebius(ctx, mats[i]);
      for (const Poly& f : irr) EXPECT_EQ(moebius_star(ctx, mats[i], f), star(ctx, rep, f));
    }
  }
}

TEST(MoebiusStar, ActionComposesInReverse) {
  const FieldCtx ctx = make_field_ctx(3, 1, 3);
  const BaseField& F = ctx.base();
  const auto mats = all_gl2(F);
  for (std::size_t i = 0; i < mats.size(); i += 5)
    for (std::size_t j = 0; j < mats.size(); j += 7)
      for (const Poly& f : ctx.ring().enumerate_irreducibles(3))
        EXPECT_EQ(moebius_star(ctx, mats[i], moebius_star(ctx, mats[j], f)),
                  moebius_star(ctx, matmul(F, mats[j], mats[i]), f));
}

TEST(Invariants, Examples) {
  const FieldCtx ctx = make_field_ctx(2, 1, 4);
  const PermPoly p7 = make_monomial(ctx, 7);
  const Poly f = P(ctx, "x^4+x+1");
  EXPECT_EQ(mult_order(ctx.ring(), f), 15u);
  EXPECT_EQ(mult_order(ctx.ring(), star(ctx, p7, f)), 15u);
  const auto rep = invariant_report(ctx, p7, f);
  EXPECT_EQ(rep.family, "monomial");
  EXPECT_TRUE(rep.all_hold());
  EXPECT_FALSE(rep.trace_relation.has_value());
  const FieldCtx c33 = make_field_ctx(3, 1, 3);
  EXPECT_THROW(invariant_report(c33, certify_perm(c33, P(c33, "x^5+x")), P(c33, "x^3-x+1")), PreconditionError);
}

TEST(Invariants, HoldOnBattery) {
  for (auto [p, k] : testutil::battery()) {
    const FieldCtx ctx = make_field_ctx(p, 1, k);
    for (const PermPoly& Pm : battery_perms(ctx))
      for (const Poly& f : ctx.ring().enumerate_irreducibles(k)) {
        const auto rep = invariant_report(ctx, Pm, f);
        EXPECT_TRUE(rep.all_hold()) << S(ctx, Pm.poly()) << " on " << S(ctx, f);
      }
  }
}

TEST(Invariants, SymbolDetection) {
  const BaseField F3(3);
  const PolyRing R{F3};
  EXPECT_EQ(monomial_exponent(P(F3, "x^5")), std::optional<u64>(5));
  EXPECT_FALSE(monomial_exponent(P(F3, "2x^5")).has_value());
  EXPECT_EQ(linearized_symbol(R, P(F3, "x^9+2x")), std::optional<Poly>(P(F3, "x^2+2")));
  EXPECT_FALSE(linearized_symbol(R, P(F3, "x^2+x")).has_value());
}
