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

#ifndef DEPLOCUS_INVARIANTS_HPP
#define DEPLOCUS_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "deplocus/derivation.hpp"
#include "deplocus/poly.hpp"

namespace deplocus {

/// Result of testing whether (F = 0) is invariant: F divides X(F). The
/// cofactor is the exact quotient X(F)/F; cofactor 0 means F is a first
/// integral. Rational functions never appear: divisibility decides all.
struct InvarianceVerdict {
  bool invariant = false;
  std::optional<Polynomial> cofactor;
};

/// Verdict of the full analysis pipeline for a single vector field.
struct AnalysisReport {
  enum class Outcome {
    /// dep = 0: the field has a nontrivial polynomial first integral.
    kFirstIntegralExists,
    /// A nonconstant invariant equation was extracted from dep.
    kInvariantHypersurface,
    /// dep != 0 and no factor of it is invariant; with zero divergence that
    /// rules out every possible invariant hypersurface.
    kProvablyNone,
    /// Degrees outgrew the cap before the verdict was reached.
    kCapacityExceeded,
  };

  Outcome outcome;
  Polynomial dep;
  Polynomial dep_squarefree;
  Polynomial divergence;
  std::optional<Polynomial> equation;            // kInvariantHypersurface
  std::optional<Polynomial> cofactor;            // kInvariantHypersurface
  std::optional<Polynomial> candidates_checked;  // kProvablyNone
};

std::string to_string(AnalysisReport::Outcome outcome);

/// One Cramer solve: the bracket of fields i < j expressed over the family,
/// coefficient k with numerator = det of the family with row k replaced by
/// the bracket. The coefficient is present iff dep divides the numerator.
struct InvolutivityEntry {
  std::size_t i, j, k;
  Polynomial numerator;
  bool divisible = false;
  std::optional<Polynomial> coefficient;
};

struct InvolutivityReport {
  Polynomial dep;
  std::vector<InvolutivityEntry> entries;
  /// True iff every bracket is a polynomial combination of the family.
  bool overall = false;
};

/// Tests divisibility of X(F) by F. F must be nonconstant; callers wanting
/// the geometric notion should pass squarefree_part(F) themselves.
InvarianceVerdict is_invariant(const VectorField& X, const Polynomial& F);

/// gcd(F0, X(F0)) for F0 = squarefree_part(F), normalized: exactly the
/// product of the invariant irreducible factors of F. Returns 1 when no
/// factor is invariant.
Polynomial invariant_part(const VectorField& X, const Polynomial& F);

/// Full decision procedure: build the canonical family, take its dependency
/// locus, and classify. dep = 0 means a first integral exists; otherwise the
/// invariant part of dep carries every possible invariant hypersurface, and
/// a nonzero divergence guarantees there is one.
AnalysisReport analyze(const VectorField& X);

/// Degree-bounded first integral for a plane field with zero divergence and
/// degree below p-1: the potential f with df equal to the contraction of the
/// volume form by X, i.e. df/dx = -X(y), df/dy = X(x); constant term zero.
Polynomial first_integral_2d(const VectorField& X);

/// Cramer analysis of every pairwise bracket over an independent family.
InvolutivityReport involutivity(const std::vector<VectorField>& fields);

/// Checks the exact determinant identity
///   X_k(dep) = div(X_k) * dep + sum_{j != k} N(k, j)
/// where N(k, j) is dep with row j replaced by [X_k, X_j].
bool fundamental_identity_check(const std::vector<VectorField>& fields,
                                std::size_t k);

}  // namespace deplocus

#endif  // DEPLOCUS_INVARIANTS_HPP
