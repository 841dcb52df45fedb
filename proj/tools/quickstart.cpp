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


// Generates irreducible polynomials of degree 5 over F_2 by iterating x^3.

#include <iostream>

#include "permdyn/permdyn.hpp"

int main() {
  using namespace permdyn;
  const FieldCtx ctx = make_field_ctx(2, 1, 5);
  const PermPoly P = make_monomial(ctx, 3);
  const Poly f0 = parse_poly(ctx.base(), "x^5+x^2+1");

  const auto rep = iterate_generation(ctx, P, f0, std::nullopt, bound_monomial(2, 5, 3));
  for (const Poly& f : rep.produced) std::cout << format_poly(ctx.base(), f) << '\n';
  std::cout << "period " << *rep.period << '\n';

  const auto G = graph_Ik(ctx, P);
  std::cout << G.cycle_indices.size() << " cycles on I_5\n";
  return 0;
}
