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

// Brute-force searches on a dense exponent grid. Monic candidates are walked
// in odometer order so that each step updates X(F) and a few sampled point
// values by a single precomputed prefix-sum vector; cheap necessary
// conditions (point evaluations on the zero set, leading-term divisibility)
// reject most candidates before the exact division runs.

#include "deplocus/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace deplocus {

bool polynomial_order_less(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  while (ia != a.terms().end() && ib != b.terms().end()) {
    if (ia->first != ib->first) return grlex_less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return ib != b.terms().end();
}

namespace {

// All exponent vectors of total degree <= max_degree, graded-lex ascending.
std::vector<Monomial> monomials_up_to(std::size_t nvars,
                                      std::uint32_t max_degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  while (true) {
    std::uint32_t total = std::accumulate(e.begin(), e.end(), 0u);
    if (total <= max_degree) out.push_back(Monomial(e));
    // odometer over the box [0, max_degree]^n
    std::size_t i = 0;
    while (i < nvars && e[i] == max_degree) e[i++] = 0;
    if (i == nvars) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grlex_less(a, b); });
  return out;
}

void require_search_budget(std::uint32_t p, std::size_t nmons,
                           std::uint64_t budget) {
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < nmons; ++i) {
    if (space > budget / p) {
      throw BudgetError("search space of " + std::to_string(nmons) +
                        " monomial coefficients over F_" + std::to_string(p) +
                        " exceeds the budget");
    }
    space *= p;
  }
  if (space > budget)
    throw BudgetError("search space exceeds the budget");
}

bool is_squarefree(const Polynomial& f) {
  const auto& ctx = f.context();
  Polynomial g = f;
  bool all_zero = true;
  for (std::size_t i = 0; i < ctx->nvars(); ++i) {
    Polynomial d = partial_derivative(f, i);
    if (d.is_zero()) continue;
    all_zero = false;
    g = gcd(g, d);
    if (g.is_one()) return true;
  }
  if (all_zero) return false;  // a perfect p-th power
  return g.is_constant();
}

// Dense layout: exponents bounded by grid_edge per variable.
struct Grid {
  std::size_t nvars;
  std::uint32_t edge;                // inclusive max exponent
  std::vector<std::size_t> strides;  // strides[v] = (edge+1)^v
  std::size_t cells;

  Grid(std::size_t n, std::uint32_t e) : nvars(n), edge(e), strides(n) {
    std::size_t s = 1;
    for (std::size_t v = 0; v < n; ++v) {
      strides[v] = s;
      s *= edge + 1;
    }
    cells = s;
  }

  std::size_t index(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t v = 0; v < nvars; ++v) idx += m.exponent(v) * strides[v];
    return idx;
  }

  Monomial decode(std::size_t idx) const {
    std::vector<std::uint32_t> e(nvars);
    for (std::size_t v = 0; v < nvars; ++v) {
      e[v] = static_cast<std::uint32_t>(idx % (edge + 1));
      idx /= edge + 1;
    }
    return Monomial(std::move(e));
  }

  std::vector<std::uint32_t> to_dense(const Polynomial& f) const {
    std::vector<std::uint32_t> out(cells, 0);
    for (const auto& [m, c] : f.terms()) out[index(m)] = c;
    return out;
  }
};

void add_mod(std::vector<std::uint32_t>& dst,
             const std::vector<std::uint32_t>& src, std::uint32_t p) {
  for (std::size_t i = 0; i < dst.size(); ++i) {
    std::uint32_t s = dst[i] + src[i];
    dst[i] = s >= p ? s - p : s;
  }
}

}  // namespace

std::vector<Polynomial> enumerate_invariant_hypersurfaces(
    const VectorField& X, const SearchBound& bound) {
  const auto& ctx = X.context();
  if (bound.max_degree < 1)
    throw PreconditionError("search degree bound must be at least 1");
  std::size_t n = ctx->nvars();
  std::uint32_t p = ctx->p();

  std::vector<Monomial> mons = monomials_up_to(n, bound.max_degree);
  std::size_t m = mons.size();
  require_search_budget(p, m, bound.budget);

  std::uint32_t image_degree =
      bound.max_degree + static_cast<std::uint32_t>(std::max(X.degree(), 0));
  Grid grid(n, image_degree);
  if (grid.cells > bound.budget)
    throw BudgetError("dense search grid exceeds the budget");

  // Images of the basis monomials under X, plus their running prefix sums.
  std::vector<std::vector<std::uint32_t>> image(m), image_prefix(m);
  for (std::size_t i = 0; i < m; ++i) {
    image[i] =
        grid.to_dense(apply(X, Polynomial::monomial(ctx, mons[i], 1)));
    image_prefix[i] = image[i];
    if (i > 0) add_mod(image_prefix[i], image_prefix[i - 1], p);
  }
  std::vector<std::size_t> mon_cell(m);
  for (std::size_t i = 0; i < m; ++i) mon_cell[i] = grid.index(mons[i]);

  // Grid cells in descending graded-lex order, for leading-term scans.
  std::vector<std::size_t> desc(grid.cells);
  std::iota(desc.begin(), desc.end(), std::size_t{0});
  std::sort(desc.begin(), desc.end(), [&](std::size_t a, std::size_t b) {
    return grlex_less(grid.decode(b), grid.decode(a));
  });
  std::vector<std::size_t> desc_pos(grid.cells);
  for (std::size_t i = 0; i < grid.cells; ++i) desc_pos[desc[i]] = i;

  // Sample points: every rational point when there are few of them. On the
  // zero set of a divisor of X(F), X(F) must vanish too.
  std::size_t npoints = 1;
  for (std::size_t v = 0; v < n && npoints <= 64; ++v) npoints *= p;
  bool use_points = npoints <= 64;
  std::vector<std::vector<std::uint32_t>> val_prefix, img_val_prefix;
  if (use_points) {
    PrimeModulus mod = ctx->modulus();
    std::vector<std::vector<Fp>> points;
    std::vector<std::uint32_t> coord(n, 0);
    for (std::size_t i = 0; i < npoints; ++i) {
      std::vector<Fp> pt;
      for (std::size_t v = 0; v < n; ++v) pt.emplace_back(coord[v], mod);
      points.push_back(std::move(pt));
      std::size_t v = 0;
      while (v < n && ++coord[v] == p) coord[v++] = 0;
    }
    val_prefix.assign(m, std::vector<std::uint32_t>(npoints, 0));
    img_val_prefix.assign(m, std::vector<std::uint32_t>(npoints, 0));
    for (std::size_t i = 0; i < m; ++i) {
      Polynomial mono = Polynomial::monomial(ctx, mons[i], 1);
      Polynomial img = apply(X, mono);
      for (std::size_t a = 0; a < npoints; ++a) {
        val_prefix[i][a] = evaluate(mono, points[a]).value();
        img_val_prefix[i][a] = evaluate(img, points[a]).value();
      }
      if (i > 0) {
        add_mod(val_prefix[i], val_prefix[i - 1], p);
        add_mod(img_val_prefix[i], img_val_prefix[i - 1], p);
      }
    }
  }

  std::vector<Polynomial> found;
  std::vector<std::uint32_t> digits, xf, fvals, xfvals, scratch;
  std::vector<std::pair<std::size_t, std::uint32_t>> f_terms;

  for (std::size_t lead = 1; lead < m; ++lead) {
    digits.assign(lead, 0);
    xf = image[lead];
    if (use_points) {
      // prefix differences give the values of the single monomial m_lead
      fvals.assign(npoints, 0);
      xfvals.assign(npoints, 0);
      for (std::size_t a = 0; a < npoints; ++a) {
        fvals[a] = (val_prefix[lead][a] + p - val_prefix[lead - 1][a]) % p;
        xfvals[a] =
            (img_val_prefix[lead][a] + p - img_val_prefix[lead - 1][a]) % p;
      }
    }

    while (true) {
      bool rejected = false;
      if (use_points) {
        for (std::size_t a = 0; a < npoints; ++a) {
          if (fvals[a] == 0 && xfvals[a] != 0) {
            rejected = true;
            break;
          }
        }
      }

      if (!rejected) {
        // leading-cell scan of X(F); empty means F is a first integral
        std::size_t pos = 0;
        while (pos < desc.size() && xf[desc[pos]] == 0) ++pos;
        bool divisible = true;
        if (pos != desc.size()) {
          if (!mons[lead].divides(grid.decode(desc[pos]))) {
            divisible = false;
          } else {
            scratch = xf;
            f_terms.clear();
            for (std::size_t j = 0; j < lead; ++j)
              if (digits[j]) f_terms.emplace_back(mon_cell[j], digits[j]);
            f_terms.emplace_back(mon_cell[lead], 1);
            std::size_t lead_cell = mon_cell[lead];
            // the running lead only moves down, so one pass over desc suffices
            std::size_t cursor = pos;
            while (true) {
              while (cursor < desc.size() && scratch[desc[cursor]] == 0)
                ++cursor;
              if (cursor == desc.size()) break;
              std::size_t t = desc[cursor];
              if (!mons[lead].divides(grid.decode(t))) {
                divisible = false;
                break;
              }
              std::size_t shift = t - lead_cell;
              std::uint32_t q = scratch[t];  // divisor is monic
              for (const auto& [cell, c] : f_terms) {
                std::size_t target = cell + shift;
                std::uint32_t sub =
                    static_cast<std::uint32_t>(
                        static_cast<std::uint64_t>(q) * c % p);
                std::uint32_t v = scratch[target];
                scratch[target] = v >= sub ? v - sub : v + p - sub;
              }
            }
          }
        }

        if (divisible) {
          PolyBuilder b(ctx);
          for (std::size_t j = 0; j < lead; ++j)
            if (digits[j]) b.add(mons[j], digits[j]);
          b.add(mons[lead], 1);
          Polynomial F = b.build();
          if (is_squarefree(F)) found.push_back(std::move(F));
        }
      }

      // odometer step
      std::size_t i = 0;
      while (i < lead && digits[i] == p - 1) digits[i++] = 0;
      if (i == lead) break;
      ++digits[i];
      add_mod(xf, image_prefix[i], p);
      if (use_points) {
        add_mod(fvals, val_prefix[i], p);
        add_mod(xfvals, img_val_prefix[i], p);
      }
    }
  }

  std::sort(found.begin(), found.end(), polynomial_order_less);
  return found;
}

std::vector<Polynomial> first_integral_kernel(const VectorField& X,
                                              const SearchBound& bound) {
  const auto& ctx = X.context();
  if (bound.max_degree < 1)
    throw PreconditionError("search degree bound must be at least 1");
  std::size_t n = ctx->nvars();
  std::uint32_t p = ctx->p();
  PrimeModulus mod = ctx->modulus();

  // Columns: monomials of degree <= D that are not already constants of
  // every derivation (i.e. some exponent is prime to p).
  std::vector<Monomial> cols;
  for (const Monomial& m : monomials_up_to(n, bound.max_degree)) {
    bool trivial = true;
    for (std::size_t v = 0; v < n; ++v)
      if (m.exponent(v) % p != 0) trivial = false;
    if (!trivial) cols.push_back(m);
  }

  std::vector<Polynomial> images;
  images.reserve(cols.size());
  std::map<Monomial, std::size_t, GrlexGreater> row_of;
  for (const Monomial& c : cols) {
    images.push_back(apply(X, Polynomial::monomial(ctx, c, 1)));
    for (const auto& [rm, coeff] : images.back().terms()) row_of.emplace(rm, 0);
  }
  std::size_t idx = 0;
  for (auto& [rm, r] : row_of) r = idx++;

  std::size_t nrows = row_of.size(), ncols = cols.size();
  if (nrows * ncols > bound.budget)
    throw BudgetError("elimination matrix exceeds the budget");

  std::vector<std::vector<std::uint32_t>> a(
      nrows, std::vector<std::uint32_t>(ncols, 0));
  for (std::size_t c = 0; c < ncols; ++c)
    for (const auto& [rm, coeff] : images[c].terms()) a[row_of[rm]][c] = coeff;

  // reduced row echelon form over F_p
  std::vector<std::size_t> pivot_of_row;
  std::vector<bool> is_pivot(ncols, false);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
    std::size_t sel = rank;
    while (sel < nrows && a[sel][c] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(a[rank], a[sel]);
    std::uint32_t inv = Fp(a[rank][c], mod).inv().value();
    for (auto& v : a[rank])
      v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * inv % p);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint64_t f = a[r][c];
      for (std::size_t cc = 0; cc < ncols; ++cc) {
        std::uint64_t v = a[r][cc] + (p - a[rank][cc]) * f % p;
        a[r][cc] = static_cast<std::uint32_t>(v % p);
      }
    }
    is_pivot[c] = true;
    pivot_of_row.push_back(c);
    ++rank;
  }

  std::vector<Polynomial> basis;
  for (std::size_t fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    PolyBuilder b(ctx);
    b.add(cols[fc], 1);
    for (std::size_t r = 0; r < rank; ++r) {
      std::uint32_t v = a[r][fc];
      if (v) b.add(cols[pivot_of_row[r]], p - v);
    }
    basis.push_back(normalized(b.build()));
  }
  std::sort(basis.begin(), basis.end(), polynomial_order_less);
  return basis;
}

}  // namespace deplocus
