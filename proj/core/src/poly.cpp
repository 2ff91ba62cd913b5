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

#include "deplocus/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

namespace deplocus {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

ContextPtr make_context(std::uint64_t p, std::vector<std::string> var_names,
                        std::uint32_t degree_cap) {
  PrimeModulus m = make_modulus(p);
  if (var_names.empty() || var_names.size() > kMaxVariables)
    throw InputError("variable count must be between 1 and " +
                     std::to_string(kMaxVariables));
  std::set<std::string> seen;
  for (const auto& name : var_names) {
    if (!valid_identifier(name))
      throw InputError("invalid variable name '" + name + "'");
    if (!seen.insert(name).second)
      throw InputError("duplicate variable name '" + name + "'");
  }
  if (degree_cap == 0) throw InputError("degree cap must be positive");
  return ContextPtr(
      new RingContext(m, std::move(var_names), degree_cap));
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->compatible_with(*b))
    throw ContextMismatchError("operands come from different ring contexts");
}

bool Monomial::divides(const Monomial& other) const {
  if (e_.size() != other.e_.size()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + other.e_[i];
  return Monomial(std::move(r));
}

Monomial Monomial::quotient_of(const Monomial& numerator) const {
  std::vector<std::uint32_t> r(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = numerator.e_[i] - e_[i];
  return Monomial(std::move(r));
}

bool grlex_less(const Monomial& a, const Monomial& b) noexcept {
  std::uint32_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.exponents() < b.exponents();
}

Polynomial Polynomial::zero(ContextPtr ctx) {
  return Polynomial(std::move(ctx), TermMap{});
}

Polynomial Polynomial::constant(ContextPtr ctx, std::uint64_t c) {
  return monomial(ctx, Monomial::unit(ctx->nvars()), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->nvars())
    throw IndexOutOfRangeError("variable index " + std::to_string(i) +
                               " out of range");
  std::vector<std::uint32_t> e(ctx->nvars(), 0);
  e[i] = 1;
  return monomial(ctx, Monomial(std::move(e)), 1);
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, std::uint64_t c) {
  if (m.size() != ctx->nvars())
    throw ContextMismatchError("monomial length does not match nvars");
  TermMap t;
  std::uint32_t r = static_cast<std::uint32_t>(c % ctx->p());
  if (r != 0) t.emplace(std::move(m), r);
  return Polynomial(std::move(ctx), std::move(t));
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

bool Polynomial::is_one() const noexcept {
  return terms_.size() == 1 && terms_.begin()->first.total_degree() == 0 &&
         terms_.begin()->second == 1;
}

int Polynomial::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.total_degree());
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty())
    throw ZeroInputError("leading monomial of the zero polynomial");
  return terms_.begin()->first;
}

Fp Polynomial::leading_coefficient() const {
  if (terms_.empty())
    throw ZeroInputError("leading coefficient of the zero polynomial");
  return Fp(terms_.begin()->second, ctx_->modulus());
}

Fp Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return Fp(it == terms_.end() ? 0 : it->second, ctx_->modulus());
}

void PolyBuilder::add(const Monomial& m, std::uint64_t c) {
  std::uint32_t p = ctx_->p();
  std::uint32_t r = static_cast<std::uint32_t>(c % p);
  if (r == 0) return;
  auto [it, inserted] = terms_.emplace(m, r);
  if (!inserted) {
    std::uint32_t s = it->second + r;
    if (s >= p) s -= p;
    if (s == 0)
      terms_.erase(it);
    else
      it->second = s;
  }
}

void PolyBuilder::add_term_product(const Monomial& m1, std::uint32_t c1,
                                   const Monomial& m2, std::uint32_t c2) {
  std::uint64_t w = static_cast<std::uint64_t>(c1) * c2;
  add(m1 * m2, w % ctx_->p());
}

Polynomial PolyBuilder::build() {
  return Polynomial(ctx_, std::move(terms_));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  PolyBuilder b(ctx_);
  for (const auto& [m, c] : terms_) b.add(m, c);
  for (const auto& [m, c] : other.terms_) b.add(m, c);
  return b.build();
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator-() const {
  TermMap t;
  std::uint32_t p = ctx_->p();
  for (const auto& [m, c] : terms_) t.emplace(m, p - c);
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  if (is_zero() || other.is_zero()) return zero(ctx_);
  std::uint32_t cap = ctx_->degree_cap();
  if (static_cast<std::uint64_t>(total_degree()) + other.total_degree() > cap)
    throw CapacityError("product degree would exceed cap " +
                        std::to_string(cap));
  PolyBuilder b(ctx_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) b.add_term_product(m1, c1, m2, c2);
  return b.build();
}

Polynomial Polynomial::scaled(Fp c) const {
  if (c.modulus() != ctx_->p())
    throw ModulusMismatchError("scalar modulus does not match ring");
  if (c.is_zero()) return zero(ctx_);
  TermMap t;
  for (const auto& [m, cf] : terms_)
    t.emplace(m, (Fp(cf, ctx_->modulus()) * c).value());
  return Polynomial(ctx_, std::move(t));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial acc = constant(ctx_, 1);
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  require_same_context(a.ctx_, b.ctx_);
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = ctx_->var_names();
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
      std::uint32_t e = m.exponent(i);
      if (e == 0) continue;
      if (any) mono << '*';
      any = true;
      mono << names[i];
      if (e >= 2) mono << '^' << e;
    }
    if (!any) {
      os << c;
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c << '*' << mono.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) {
  return os << f.to_string();
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
  const auto& ctx = f.context();
  if (i >= ctx->nvars())
    throw IndexOutOfRangeError("derivative variable index out of range");
  PolyBuilder b(ctx);
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    std::uint64_t cc = static_cast<std::uint64_t>(c) * (e % ctx->p());
    auto exps = m.exponents();
    exps[i] -= 1;
    b.add(Monomial(std::move(exps)), cc % ctx->p());
  }
  return b.build();
}

Fp evaluate(const Polynomial& f, const std::vector<Fp>& point) {
  const auto& ctx = f.context();
  if (point.size() != ctx->nvars())
    throw ContextMismatchError("evaluation point has wrong length");
  for (const auto& x : point)
    if (x.modulus() != ctx->p())
      throw ModulusMismatchError("evaluation point modulus mismatch");
  Fp acc(0, ctx->modulus());
  for (const auto& [m, c] : f.terms()) {
    Fp t(c, ctx->modulus());
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exponent(i) != 0) t = t * point[i].pow(m.exponent(i));
    acc = acc + t;
  }
  return acc;
}

std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g) {
  require_same_context(f.context(), g.context());
  if (g.is_zero()) throw DivisionByZeroError("division by zero polynomial");
  const auto& ctx = f.context();
  Polynomial r = f;
  PolyBuilder q(ctx);
  const Monomial& lg = g.leading_monomial();
  Fp lc_inv = g.leading_coefficient().inv();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    if (!lg.divides(lr)) return std::nullopt;
    Fp c = r.leading_coefficient() * lc_inv;
    Monomial qm = lg.quotient_of(lr);
    q.add(qm, c.value());
    r = r - g.scaled(c) * Polynomial::monomial(ctx, qm, 1);
  }
  return q.build();
}

std::optional<Polynomial> pth_root(const Polynomial& f) {
  const auto& ctx = f.context();
  std::uint32_t p = ctx->p();
  PolyBuilder b(ctx);
  for (const auto& [m, c] : f.terms()) {
    auto exps = m.exponents();
    for (auto& e : exps) {
      if (e % p != 0) return std::nullopt;
      e /= p;
    }
    // Coefficients carry over unchanged: c^p = c on the prime field.
    b.add(Monomial(std::move(exps)), c);
  }
  return b.build();
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero())
    throw ZeroInputError("squarefree part of the zero polynomial");
  const auto& ctx = f.context();
  if (f.is_constant()) return Polynomial::constant(ctx, 1);

  std::vector<Polynomial> partials;
  bool all_zero = true;
  for (std::size_t i = 0; i < ctx->nvars(); ++i) {
    partials.push_back(partial_derivative(f, i));
    if (!partials.back().is_zero()) all_zero = false;
  }
  if (all_zero) {
    // Every exponent is divisible by p, so f is a perfect p-th power.
    auto root = pth_root(f);
    if (!root)
      throw InternalError("vanishing partials without a p-th root");
    return squarefree_part(*root);
  }

  Polynomial g = f;
  for (const auto& d : partials) g = gcd(g, d);
  if (g.is_constant()) return normalized(f);

  auto s = divide_exact(f, g);
  if (!s) throw InternalError("gcd does not divide its input");
  // s holds the factors of multiplicity prime to p; the rest hide in g.
  Polynomial t = squarefree_part(g);
  auto overlap = gcd(*s, t);
  auto extra = divide_exact(t, overlap);
  if (!extra) throw InternalError("gcd does not divide its input");
  return normalized(*s * *extra);
}

Polynomial integrate_term(const Polynomial& f, std::size_t i) {
  const auto& ctx = f.context();
  if (i >= ctx->nvars())
    throw IndexOutOfRangeError("integration variable index out of range");
  std::uint32_t p = ctx->p();
  PolyBuilder b(ctx);
  for (const auto& [m, c] : f.terms()) {
    std::uint32_t e = m.exponent(i);
    if (e % p == p - 1)
      throw NonIntegrableExponentError(
          Polynomial::monomial(ctx, m, c).to_string());
    Fp inv = Fp((e + 1) % p, ctx->modulus()).inv();
    auto exps = m.exponents();
    exps[i] += 1;
    b.add(Monomial(std::move(exps)),
          (Fp(c, ctx->modulus()) * inv).value());
  }
  return b.build();
}

Polynomial normalized(const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.leading_coefficient().inv());
}

}  // namespace deplocus
