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

#include "deplocus/derivation.hpp"

#include <bit>
#include <ostream>

namespace deplocus {

VectorField::VectorField(ContextPtr ctx, std::vector<Polynomial> components)
    : ctx_(std::move(ctx)), components_(std::move(components)) {
  if (components_.size() != ctx_->nvars())
    throw ContextMismatchError("component count does not match nvars");
  for (const auto& c : components_) require_same_context(ctx_, c.context());
}

bool VectorField::is_zero() const noexcept {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

int VectorField::degree() const noexcept {
  int d = -1;
  for (const auto& c : components_) d = std::max(d, c.total_degree());
  return d;
}

VectorField VectorField::operator+(const VectorField& other) const {
  require_same_context(ctx_, other.ctx_);
  std::vector<Polynomial> cs;
  cs.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    cs.push_back(components_[i] + other.components_[i]);
  return VectorField(ctx_, std::move(cs));
}

VectorField VectorField::operator-(const VectorField& other) const {
  require_same_context(ctx_, other.ctx_);
  std::vector<Polynomial> cs;
  cs.reserve(components_.size());
  for (std::size_t i = 0; i < components_.size(); ++i)
    cs.push_back(components_[i] - other.components_[i]);
  return VectorField(ctx_, std::move(cs));
}

VectorField VectorField::scaled(const Polynomial& f) const {
  std::vector<Polynomial> cs;
  cs.reserve(components_.size());
  for (const auto& c : components_) cs.push_back(f * c);
  return VectorField(ctx_, std::move(cs));
}

bool operator==(const VectorField& a, const VectorField& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.components_ == b.components_;
}

std::ostream& operator<<(std::ostream& os, const VectorField& X) {
  os << '[';
  for (std::size_t i = 0; i < X.components().size(); ++i) {
    if (i) os << ", ";
    os << X.component(i);
  }
  return os << ']';
}

Polynomial apply(const VectorField& X, const Polynomial& f) {
  require_same_context(X.context(), f.context());
  Polynomial acc = Polynomial::zero(X.context());
  for (std::size_t i = 0; i < X.components().size(); ++i) {
    if (X.component(i).is_zero()) continue;
    acc = acc + X.component(i) * partial_derivative(f, i);
  }
  return acc;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
  require_same_context(X.context(), Y.context());
  std::vector<Polynomial> cs;
  cs.reserve(X.components().size());
  for (std::size_t i = 0; i < X.components().size(); ++i)
    cs.push_back(apply(X, Y.component(i)) - apply(Y, X.component(i)));
  return VectorField(X.context(), std::move(cs));
}

Polynomial divergence(const VectorField& X) {
  Polynomial acc = Polynomial::zero(X.context());
  for (std::size_t i = 0; i < X.components().size(); ++i)
    acc = acc + partial_derivative(X.component(i), i);
  return acc;
}

VectorField pth_power(const VectorField& X) {
  const auto& ctx = X.context();
  std::uint32_t p = ctx->p();
  std::vector<Polynomial> cs;
  cs.reserve(ctx->nvars());
  for (std::size_t i = 0; i < ctx->nvars(); ++i) {
    Polynomial f = Polynomial::variable(ctx, i);
    for (std::uint32_t k = 0; k < p; ++k) f = apply(X, f);
    cs.push_back(std::move(f));
  }
  return VectorField(ctx, std::move(cs));
}

std::vector<VectorField> canonical_family(const VectorField& X) {
  std::vector<VectorField> family;
  family.push_back(X);
  for (std::size_t k = 1; k < X.context()->nvars(); ++k)
    family.push_back(pth_power(family.back()));
  return family;
}

Polynomial dependency_locus(const std::vector<VectorField>& fields) {
  if (fields.empty()) throw WrongArityError("need at least one vector field");
  const auto& ctx = fields.front().context();
  std::size_t n = ctx->nvars();
  if (fields.size() != n)
    throw WrongArityError("need exactly " + std::to_string(n) +
                          " vector fields, got " +
                          std::to_string(fields.size()));
  for (const auto& X : fields) require_same_context(ctx, X.context());

  // minor[S] = det of the top-popcount(S) rows on the column set S.
  std::vector<Polynomial> minor(std::size_t{1} << n,
                                Polynomial::zero(ctx));
  minor[0] = Polynomial::constant(ctx, 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    std::size_t row = static_cast<std::size_t>(std::popcount(s)) - 1;
    Polynomial acc = Polynomial::zero(ctx);
    bool positive = (row % 2 == 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const Polynomial& entry = fields[row].component(j);
      if (!entry.is_zero()) {
        Polynomial t = entry * minor[s & ~(1u << j)];
        acc = positive ? acc + t : acc - t;
      }
      positive = !positive;
    }
    minor[s] = std::move(acc);
  }
  return minor[(std::size_t{1} << n) - 1];
}

}  // namespace deplocus
