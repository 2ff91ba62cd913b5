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

#ifndef DEPLOCUS_FORMS_HPP
#define DEPLOCUS_FORMS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "deplocus/derivation.hpp"
#include "deplocus/poly.hpp"

namespace deplocus {

/// An alternating q-form with polynomial coefficients, stored sparsely as a
/// map from strictly increasing index tuples to nonzero coefficients.
///
/// Contraction inserts the vector field into the FIRST argument slot, so the
/// iterated contraction of the volume form, contracting with X_1 first, is
/// the determinant with row i equal to the components of X_i.
class DiffForm {
 public:
  using IndexTuple = std::vector<std::uint8_t>;
  using CoeffMap = std::map<IndexTuple, Polynomial>;

  static DiffForm zero(ContextPtr ctx, std::size_t degree);
  /// Wraps a polynomial as a 0-form.
  static DiffForm from_polynomial(Polynomial f);
  /// The basis 1-form dx_i.
  static DiffForm dx(ContextPtr ctx, std::size_t i);
  /// dx_1 ∧ ... ∧ dx_n.
  static DiffForm volume(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t degree() const noexcept { return degree_; }
  const CoeffMap& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Coefficient on a strictly increasing tuple (zero if absent).
  Polynomial coefficient(const IndexTuple& tuple) const;
  /// The unique coefficient of a 0-form.
  Polynomial as_polynomial() const;

  DiffForm operator+(const DiffForm& other) const;
  DiffForm operator-(const DiffForm& other) const;
  DiffForm operator-() const;
  DiffForm scaled(const Polynomial& f) const;

  /// Zero forms compare equal across degrees; nonzero forms must match
  /// degree and every coefficient.
  friend bool operator==(const DiffForm& a, const DiffForm& b);
  friend bool operator!=(const DiffForm& a, const DiffForm& b) {
    return !(a == b);
  }

 private:
  friend class FormBuilder;
  DiffForm(ContextPtr ctx, std::size_t degree, CoeffMap coeffs)
      : ctx_(std::move(ctx)), degree_(degree), coeffs_(std::move(coeffs)) {}

  ContextPtr ctx_;
  std::size_t degree_;
  CoeffMap coeffs_;
};

std::ostream& operator<<(std::ostream& os, const DiffForm& w);

/// Accumulates terms with arbitrary (possibly unsorted) index tuples,
/// normalizing by the sign of the sorting permutation; repeated indices
/// annihilate the term.
class FormBuilder {
 public:
  FormBuilder(ContextPtr ctx, std::size_t degree);
  void add(DiffForm::IndexTuple tuple, const Polynomial& coeff);
  DiffForm build();

 private:
  ContextPtr ctx_;
  std::size_t degree_;
  DiffForm::CoeffMap coeffs_;
};

/// Alternating product; zero when the degrees sum past n.
DiffForm wedge(const DiffForm& a, const DiffForm& b);

/// Exterior derivative; satisfies d∘d = 0.
DiffForm exterior_d(const DiffForm& w);

/// Inner product i_X w, inserting X in the first slot. Throws on 0-forms.
DiffForm contract(const VectorField& X, const DiffForm& w);

/// L_X = i_X d + d i_X; on 0-forms this is just X(f).
DiffForm lie_derivative(const VectorField& X, const DiffForm& w);

}  // namespace deplocus

#endif  // DEPLOCUS_FORMS_HPP
