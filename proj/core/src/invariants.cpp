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

#include "deplocus/invariants.hpp"

namespace deplocus {

std::string to_string(AnalysisReport::Outcome outcome) {
  switch (outcome) {
    case AnalysisReport::Outcome::kFirstIntegralExists:
      return "FirstIntegralExists";
    case AnalysisReport::Outcome::kInvariantHypersurface:
      return "InvariantHypersurface";
    case AnalysisReport::Outcome::kProvablyNone:
      return "ProvablyNone";
    case AnalysisReport::Outcome::kCapacityExceeded:
      return "CapacityExceeded";
  }
  return "Unknown";
}

InvarianceVerdict is_invariant(const VectorField& X, const Polynomial& F) {
  require_same_context(X.context(), F.context());
  if (F.is_constant())
    throw ConstantInputError("invariance is tested on nonconstant equations");
  Polynomial image = apply(X, F);
  if (image.is_zero())
    return {true, Polynomial::zero(X.context())};
  auto q = divide_exact(image, F);
  if (!q) return {false, std::nullopt};
  return {true, std::move(q)};
}

Polynomial invariant_part(const VectorField& X, const Polynomial& F) {
  require_same_context(X.context(), F.context());
  if (F.is_zero()) throw ZeroInputError("invariant part of zero");
  Polynomial reduced = squarefree_part(F);
  if (reduced.is_constant()) return Polynomial::constant(X.context(), 1);
  Polynomial image = apply(X, reduced);
  if (image.is_zero()) return reduced;  // already a first integral
  return gcd(reduced, image);
}

AnalysisReport analyze(const VectorField& X) {
  const auto& ctx = X.context();
  std::vector<VectorField> family = canonical_family(X);
  Polynomial dep = dependency_locus(family);
  Polynomial div = divergence(X);

  AnalysisReport report{AnalysisReport::Outcome::kProvablyNone,
                        dep,
                        Polynomial::zero(ctx),
                        div,
                        std::nullopt,
                        std::nullopt,
                        std::nullopt};

  if (dep.is_zero()) {
    report.outcome = AnalysisReport::Outcome::kFirstIntegralExists;
    return report;
  }

  report.dep_squarefree = squarefree_part(dep);

  if (dep.is_constant()) {
    // A constant nonzero dep forces div = 0: applying X to it gives
    // 0 = div * dep for the commuting family.
    if (!div.is_zero())
      throw TheoremViolationError(
          "constant dependency locus with nonzero divergence");
    report.outcome = AnalysisReport::Outcome::kProvablyNone;
    report.candidates_checked = report.dep_squarefree;
    return report;
  }

  Polynomial part = invariant_part(X, dep);
  if (!part.is_constant()) {
    InvarianceVerdict verdict = is_invariant(X, part);
    if (!verdict.invariant)
      throw TheoremViolationError("extracted invariant part fails the test");
    if (!div.is_zero()) {
      InvarianceVerdict whole = is_invariant(X, report.dep_squarefree);
      if (!whole.invariant)
        throw TheoremViolationError(
            "nonzero divergence but dependency locus is not invariant");
    }
    report.outcome = AnalysisReport::Outcome::kInvariantHypersurface;
    report.equation = std::move(part);
    report.cofactor = std::move(verdict.cofactor);
    return report;
  }

  if (!div.is_zero())
    throw TheoremViolationError(
        "nonzero divergence with no invariant factor in the dependency locus");
  report.outcome = AnalysisReport::Outcome::kProvablyNone;
  report.candidates_checked = report.dep_squarefree;
  return report;
}

Polynomial first_integral_2d(const VectorField& X) {
  const auto& ctx = X.context();
  if (ctx->nvars() != 2)
    throw PreconditionError("first integral construction needs two variables");
  if (X.is_zero())
    throw PreconditionError("zero vector field has no canonical potential");
  if (!divergence(X).is_zero())
    throw PreconditionError("divergence must vanish");
  std::uint32_t p = ctx->p();
  if (X.degree() + 1 >= static_cast<int>(p))
    throw PreconditionError("field degree must be below p - 1");

  // df = X(x) dy - X(y) dx. Integrate the dx part in x, then fix up the
  // remaining dy part, which zero divergence keeps free of x.
  Polynomial fx = -X.component(1);
  Polynomial f = integrate_term(fx, 0);
  Polynomial rest = X.component(0) - partial_derivative(f, 1);
  f = f + integrate_term(rest, 1);

  if (!apply(X, f).is_zero())
    throw InternalError("potential does not annihilate the field");
  if (f.is_constant())
    throw InternalError("potential degenerated to a constant");
  return f;
}

namespace {

Polynomial cramer_numerator(const std::vector<VectorField>& fields,
                            std::size_t row, const VectorField& replacement) {
  std::vector<VectorField> rows = fields;
  rows[row] = replacement;
  return dependency_locus(rows);
}

}  // namespace

InvolutivityReport involutivity(const std::vector<VectorField>& fields) {
  Polynomial dep = dependency_locus(fields);
  if (dep.is_zero())
    throw DependentFamilyError("family is everywhere dependent");
  InvolutivityReport report{dep, {}, true};
  std::size_t n = fields.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      VectorField bracket = lie_bracket(fields[i], fields[j]);
      for (std::size_t k = 0; k < n; ++k) {
        InvolutivityEntry entry{i, j, k, cramer_numerator(fields, k, bracket),
                                false, std::nullopt};
        auto q = divide_exact(entry.numerator, dep);
        if (q) {
          entry.divisible = true;
          entry.coefficient = std::move(q);
        } else {
          report.overall = false;
        }
        report.entries.push_back(std::move(entry));
      }
    }
  }
  return report;
}

bool fundamental_identity_check(const std::vector<VectorField>& fields,
                                std::size_t k) {
  if (k >= fields.size())
    throw IndexOutOfRangeError("field index out of range");
  Polynomial dep = dependency_locus(fields);
  if (dep.is_zero())
    throw DependentFamilyError("family is everywhere dependent");
  Polynomial lhs = apply(fields[k], dep);
  Polynomial rhs = divergence(fields[k]) * dep;
  for (std::size_t j = 0; j < fields.size(); ++j) {
    if (j == k) continue;
    rhs = rhs + cramer_numerator(fields, j, lie_bracket(fields[k], fields[j]));
  }
  return lhs == rhs;
}

}  // namespace deplocus
