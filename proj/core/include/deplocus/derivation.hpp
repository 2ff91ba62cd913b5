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

#ifndef DEPLOCUS_DERIVATION_HPP
#define DEPLOCUS_DERIVATION_HPP

#include <iosfwd>
#include <vector>

#include "deplocus/poly.hpp"

namespace deplocus {

/// A polynomial vector field on affine n-space, i.e. a derivation of the
/// ring: component i is the image of the i-th coordinate function.
class VectorField {
 public:
  VectorField(ContextPtr ctx, std::vector<Polynomial> components);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  const std::vector<Polynomial>& components() const noexcept {
    return components_;
  }

  bool is_zero() const noexcept;
  /// Max total degree across components; -1 for the zero field.
  int degree() const noexcept;

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField scaled(const Polynomial& f) const;

  friend bool operator==(const VectorField& a, const VectorField& b);
  friend bool operator!=(const VectorField& a, const VectorField& b) {
    return !(a == b);
  }

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> components_;
};

std::ostream& operator<<(std::ostream& os, const VectorField& X);

/// X(f) = sum_i X(x_i) * df/dx_i.
Polynomial apply(const VectorField& X, const Polynomial& f);

/// Commutator [X, Y] = X∘Y - Y∘X, itself a derivation.
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// sum_i d(X(x_i))/dx_i.
Polynomial divergence(const VectorField& X);

/// The derivation X^p (p-fold composition), computed by applying X p times
/// to each coordinate function. A derivation again in characteristic p.
VectorField pth_power(const VectorField& X);

/// [X, X^p, X^{p^2}, ..., X^{p^(n-1)}] by iterated p-th powers. The family
/// commutes pairwise. Throws CapacityError when degrees outgrow the cap.
std::vector<VectorField> canonical_family(const VectorField& X);

/// det(M) with M[i][j] = X_i(x_j): the polynomial cutting out the locus
/// where the family is linearly dependent. Equals the iterated contraction
/// of the volume form, contracting with X_1 first. Laplace expansion with
/// memoized column-subset minors.
Polynomial dependency_locus(const std::vector<VectorField>& fields);

}  // namespace deplocus

#endif  // DEPLOCUS_DERIVATION_HPP
