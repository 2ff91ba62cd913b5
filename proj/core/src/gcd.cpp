// Copyright 2026 The deplocus Authors
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

// Multivariate gcd over F_p by primitive polynomial remainder sequences.
// A polynomial is viewed densely in its highest occurring variable v, with
// coefficients in F_p[x_0..x_{v-1}]; contents are extracted by folding gcd
// over those coefficients, and the primitive parts run a pseudo-remainder
// Euclid loop that re-primitivizes after every step.

#include <utility>

#include "deplocus/poly.hpp"

namespace deplocus {

namespace {

// Highest variable index occurring in f or g, or -1 if both are constant.
int top_variable(const Polynomial& f, const Polynomial& g) {
  int v = -1;
  for (const Polynomial* h : {&f, &g})
    for (const auto& [m, c] : h->terms())
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m.exponent(i) > 0 && static_cast<int>(i) > v)
          v = static_cast<int>(i);
  return v;
}

std::uint32_t degree_in(const Polynomial& f, std::size_t v) {
  std::uint32_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.exponent(v));
  return d;
}

// Coefficient of x_v^k in f, as a polynomial free of x_v.
Polynomial coefficient_in(const Polynomial& f, std::size_t v,
                          std::uint32_t k) {
  PolyBuilder b(f.context());
  for (const auto& [m, c] : f.terms()) {
    if (m.exponent(v) != k) continue;
    auto exps = m.exponents();
    exps[v] = 0;
    b.add(Monomial(std::move(exps)), c);
  }
  return b.build();
}

Polynomial gcd_impl(const Polynomial& f, const Polynomial& g);

// gcd of the x_v-coefficients of f (f nonzero).
Polynomial content_in(const Polynomial& f, std::size_t v) {
  Polynomial acc = Polynomial::zero(f.context());
  std::uint32_t d = degree_in(f, v);
  for (std::uint32_t k = 0; k <= d; ++k) {
    Polynomial c = coefficient_in(f, v, k);
    if (c.is_zero()) continue;
    acc = acc.is_zero() ? normalized(c) : gcd_impl(acc, c);
    if (acc.is_one()) break;
  }
  return acc;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  auto q = divide_exact(f, g);
  if (!q) throw InternalError("expected exact divisibility in gcd");
  return *q;
}

// Pseudo-remainder of a by b in the variable x_v (deg_v b >= 1). Each round
// scales by lc_v(b) so the leading x_v-terms cancel exactly.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b,
                            std::size_t v) {
  const auto& ctx = r.context();
  std::uint32_t db = degree_in(b, v);
  Polynomial bl = coefficient_in(b, v, db);
  while (!r.is_zero()) {
    std::uint32_t dr = degree_in(r, v);
    if (dr < db) break;
    Polynomial rl = coefficient_in(r, v, dr);
    std::vector<std::uint32_t> shift(ctx->nvars(), 0);
    shift[v] = dr - db;
    r = bl * r - rl * Polynomial::monomial(ctx, Monomial(std::move(shift)), 1) * b;
  }
  return r;
}

// f, g nonzero; result not yet normalized.
Polynomial gcd_impl(const Polynomial& f, const Polynomial& g) {
  const auto& ctx = f.context();
  int vi = top_variable(f, g);
  if (vi < 0) return Polynomial::constant(ctx, 1);
  std::size_t v = static_cast<std::size_t>(vi);

  std::uint32_t df = degree_in(f, v), dg = degree_in(g, v);
  // If one side is free of x_v, so is the gcd, and it must divide every
  // x_v-coefficient of the other side.
  if (df == 0) return gcd_impl(f, content_in(g, v));
  if (dg == 0) return gcd_impl(content_in(f, v), g);

  Polynomial cf = content_in(f, v);
  Polynomial cg = content_in(g, v);
  Polynomial c = gcd_impl(cf, cg);
  Polynomial a = exact_quotient(f, cf);
  Polynomial b = exact_quotient(g, cg);
  if (degree_in(a, v) < degree_in(b, v)) std::swap(a, b);

  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) {
      // Coprime primitive parts: only the content survives.
      return c;
    }
    r = exact_quotient(r, content_in(r, v));
    a = std::move(b);
    b = std::move(r);
  }
  return c * b;
}

}  // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  require_same_context(f.context(), g.context());
  if (f.is_zero() && g.is_zero())
    throw ZeroInputError("gcd of two zero polynomials");
  if (f.is_zero()) return normalized(g);
  if (g.is_zero()) return normalized(f);
  return normalized(gcd_impl(f, g));
}

}  // namespace deplocus
