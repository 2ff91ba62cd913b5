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

#ifndef DEPLOCUS_ORACLE_HPP
#define DEPLOCUS_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "deplocus/derivation.hpp"
#include "deplocus/poly.hpp"

namespace deplocus {

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

/// Degree bound and work budget for the brute-force searches. Candidates are
/// normalized to graded-lex leading coefficient 1; the raw search space
/// p^(number of monomials of degree <= max_degree) must fit the budget.
struct SearchBound {
  std::uint32_t max_degree = 1;
  std::uint64_t budget = kDefaultSearchBudget;
};

/// Every nonconstant squarefree monic F with total degree <= max_degree such
/// that F divides X(F), in a deterministic order. Exhaustive by
/// construction; used to cross-check the analysis pipeline.
std::vector<Polynomial> enumerate_invariant_hypersurfaces(
    const VectorField& X, const SearchBound& bound);

/// Basis of the null space of F -> X(F) on the coefficient space of degree
/// <= max_degree polynomials, after deleting the columns of monomials whose
/// exponents are all divisible by p (those are constants of any derivation).
/// Exact Gaussian elimination over F_p; basis elements are monic, sorted.
std::vector<Polynomial> first_integral_kernel(const VectorField& X,
                                              const SearchBound& bound);

/// Deterministic order used for oracle results: by leading terms under
/// graded-lex, then term by term.
bool polynomial_order_less(const Polynomial& a, const Polynomial& b);

}  // namespace deplocus

#endif  // DEPLOCUS_ORACLE_HPP
