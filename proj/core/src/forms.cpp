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

#include "deplocus/forms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace deplocus {

DiffForm DiffForm::zero(ContextPtr ctx, std::size_t degree) {
  std::size_t n = ctx->nvars();
  return DiffForm(std::move(ctx), std::min(degree, n), CoeffMap{});
}

DiffForm DiffForm::from_polynomial(Polynomial f) {
  ContextPtr ctx = f.context();
  CoeffMap m;
  if (!f.is_zero()) m.emplace(IndexTuple{}, std::move(f));
  return DiffForm(std::move(ctx), 0, std::move(m));
}

DiffForm DiffForm::dx(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars())
    throw IndexOutOfRangeError("form index out of range");
  CoeffMap m;
  m.emplace(IndexTuple{static_cast<std::uint8_t>(i)},
            Polynomial::constant(ctx, 1));
  return DiffForm(std::move(ctx), 1, std::move(m));
}

DiffForm DiffForm::volume(ContextPtr ctx) {
  std::size_t n = ctx->nvars();
  IndexTuple all(n);
  std::iota(all.begin(), all.end(), std::uint8_t{0});
  CoeffMap m;
  m.emplace(std::move(all), Polynomial::constant(ctx, 1));
  return DiffForm(std::move(ctx), n, std::move(m));
}

Polynomial DiffForm::coefficient(const IndexTuple& tuple) const {
  auto it = coeffs_.find(tuple);
  return it == coeffs_.end() ? Polynomial::zero(ctx_) : it->second;
}

Polynomial DiffForm::as_polynomial() const {
  if (degree_ != 0)
    throw PreconditionError("form of positive degree is not a polynomial");
  return coefficient(IndexTuple{});
}

DiffForm DiffForm::operator+(const DiffForm& other) const {
  require_same_context(ctx_, other.ctx_);
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  if (degree_ != other.degree_)
    throw PreconditionError("cannot add forms of different degrees");
  CoeffMap m = coeffs_;
  for (const auto& [t, f] : other.coeffs_) {
    auto it = m.find(t);
    if (it == m.end()) {
      m.emplace(t, f);
    } else {
      Polynomial s = it->second + f;
      if (s.is_zero())
        m.erase(it);
      else
        it->second = std::move(s);
    }
  }
  return DiffForm(ctx_, degree_, std::move(m));
}

DiffForm DiffForm::operator-() const {
  CoeffMap m;
  for (const auto& [t, f] : coeffs_) m.emplace(t, -f);
  return DiffForm(ctx_, degree_, std::move(m));
}

DiffForm DiffForm::operator-(const DiffForm& other) const {
  return *this + (-other);
}

DiffForm DiffForm::scaled(const Polynomial& f) const {
  require_same_context(ctx_, f.context());
  CoeffMap m;
  for (const auto& [t, c] : coeffs_) {
    Polynomial s = c * f;
    if (!s.is_zero()) m.emplace(t, std::move(s));
  }
  return DiffForm(ctx_, degree_, std::move(m));
}

bool operator==(const DiffForm& a, const DiffForm& b) {
  require_same_context(a.ctx_, b.ctx_);
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::ostream& operator<<(std::ostream& os, const DiffForm& w) {
  if (w.is_zero()) return os << "0";
  const auto& names = w.context()->var_names();
  bool first = true;
  for (const auto& [t, f] : w.coefficients()) {
    if (!first) os << " + ";
    first = false;
    os << '(' << f << ')';
    for (auto i : t) os << " dx(" << names[i] << ')';
  }
  return os;
}

FormBuilder::FormBuilder(ContextPtr ctx, std::size_t degree)
    : ctx_(std::move(ctx)), degree_(std::min(degree, ctx_->nvars())) {}

void FormBuilder::add(DiffForm::IndexTuple tuple, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  // Sort by adjacent transpositions, tracking the sign; a repeat kills it.
  bool negate = false;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    for (std::size_t j = i; j > 0 && tuple[j] <= tuple[j - 1]; --j) {
      if (tuple[j] == tuple[j - 1]) return;
      std::swap(tuple[j], tuple[j - 1]);
      negate = !negate;
    }
  }
  Polynomial signed_coeff = negate ? -coeff : coeff;
  auto it = coeffs_.find(tuple);
  if (it == coeffs_.end()) {
    coeffs_.emplace(std::move(tuple), std::move(signed_coeff));
  } else {
    Polynomial s = it->second + signed_coeff;
    if (s.is_zero())
      coeffs_.erase(it);
    else
      it->second = std::move(s);
  }
}

DiffForm FormBuilder::build() {
  return DiffForm(ctx_, degree_, std::move(coeffs_));
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_context(a.context(), b.context());
  std::size_t n = a.context()->nvars();
  std::size_t q = a.degree() + b.degree();
  if (q > n) return DiffForm::zero(a.context(), n);
  FormBuilder out(a.context(), q);
  for (const auto& [ta, fa] : a.coefficients()) {
    for (const auto& [tb, fb] : b.coefficients()) {
      DiffForm::IndexTuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add(std::move(t), fa * fb);
    }
  }
  return out.build();
}

DiffForm exterior_d(const DiffForm& w) {
  const auto& ctx = w.context();
  FormBuilder out(ctx, w.degree() + 1);
  for (const auto& [t, f] : w.coefficients()) {
    for (std::size_t i = 0; i < ctx->nvars(); ++i) {
      Polynomial df = partial_derivative(f, i);
      if (df.is_zero()) continue;
      DiffForm::IndexTuple nt;
      nt.reserve(t.size() + 1);
      nt.push_back(static_cast<std::uint8_t>(i));
      nt.insert(nt.end(), t.begin(), t.end());
      out.add(std::move(nt), df);
    }
  }
  return out.build();
}

DiffForm contract(const VectorField& X, const DiffForm& w) {
  require_same_context(X.context(), w.context());
  if (w.degree() == 0)
    throw PreconditionError("cannot contract a 0-form");
  FormBuilder out(w.context(), w.degree() - 1);
  for (const auto& [t, f] : w.coefficients()) {
    for (std::size_t k = 0; k < t.size(); ++k) {
      const Polynomial& xk = X.component(t[k]);
      if (xk.is_zero()) continue;
      DiffForm::IndexTuple nt;
      nt.reserve(t.size() - 1);
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != k) nt.push_back(t[j]);
      Polynomial c = f * xk;
      out.add(std::move(nt), (k % 2 == 0) ? c : -c);
    }
  }
  return out.build();
}

DiffForm lie_derivative(const VectorField& X, const DiffForm& w) {
  DiffForm a = contract(X, exterior_d(w));
  if (w.degree() == 0) return a;
  return a + exterior_d(contract(X, w));
}

}  // namespace deplocus
