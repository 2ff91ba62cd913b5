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

#ifndef DEPLOCUS_POLY_HPP
#define DEPLOCUS_POLY_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "deplocus/errors.hpp"
#include "deplocus/fp.hpp"

namespace deplocus {

/// Total-degree cap for any intermediate polynomial. Operations that would
/// exceed it throw CapacityError instead of thrashing.
inline constexpr std::uint32_t kDefaultDegreeCap = 512;

inline constexpr std::size_t kMaxVariables = 6;

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

/// The ambient ring F_p[x_1, ..., x_n]: modulus, variable names, degree cap.
/// Contexts are immutable and shared by every value built over them; two
/// contexts are interchangeable iff they agree on all three fields.
class RingContext {
 public:
  PrimeModulus modulus() const noexcept { return modulus_; }
  std::uint32_t p() const noexcept { return modulus_.p(); }
  std::size_t nvars() const noexcept { return var_names_.size(); }
  const std::vector<std::string>& var_names() const noexcept {
    return var_names_;
  }
  std::uint32_t degree_cap() const noexcept { return degree_cap_; }

  bool compatible_with(const RingContext& other) const noexcept {
    return modulus_ == other.modulus_ && var_names_ == other.var_names_ &&
           degree_cap_ == other.degree_cap_;
  }

 private:
  friend ContextPtr make_context(std::uint64_t, std::vector<std::string>,
                                 std::uint32_t);
  RingContext(PrimeModulus m, std::vector<std::string> names,
              std::uint32_t cap)
      : modulus_(m), var_names_(std::move(names)), degree_cap_(cap) {}

  PrimeModulus modulus_;
  std::vector<std::string> var_names_;
  std::uint32_t degree_cap_;
};

/// Validates and builds a ring context. Variable names must be distinct,
/// nonempty identifiers ([A-Za-z_][A-Za-z0-9_]*), at most kMaxVariables.
ContextPtr make_context(std::uint64_t p, std::vector<std::string> var_names,
                        std::uint32_t degree_cap = kDefaultDegreeCap);

/// Throws ContextMismatchError unless the two contexts are interchangeable.
void require_same_context(const ContextPtr& a, const ContextPtr& b);

/// An exponent vector of fixed length nvars.
class Monomial {
 public:
  explicit Monomial(std::vector<std::uint32_t> exponents)
      : e_(std::move(exponents)) {}
  static Monomial unit(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t exponent(std::size_t i) const { return e_.at(i); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

  std::uint32_t total_degree() const noexcept {
    std::uint32_t d = 0;
    for (auto x : e_) d += x;
    return d;
  }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Componentwise difference; caller guarantees divides(other).
  Monomial quotient_of(const Monomial& numerator) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) {
    return a.e_ != b.e_;
  }

 private:
  std::vector<std::uint32_t> e_;
};

/// Graded lexicographic order: first by total degree, ties by the leftmost
/// differing exponent (earlier variables weigh more).
bool grlex_less(const Monomial& a, const Monomial& b) noexcept;

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept {
    return grlex_less(b, a);
  }
};

/// A sparse multivariate polynomial over F_p. Terms are kept in descending
/// graded-lex order with no explicit zero coefficients; the zero polynomial
/// has no terms. Values are immutable: every operation returns a fresh one.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, std::uint32_t, GrlexGreater>;

  static Polynomial zero(ContextPtr ctx);
  static Polynomial constant(ContextPtr ctx, std::uint64_t c);
  static Polynomial variable(ContextPtr ctx, std::size_t i);
  static Polynomial monomial(ContextPtr ctx, Monomial m, std::uint64_t c);

  const ContextPtr& context() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const noexcept;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;

  const Monomial& leading_monomial() const;
  Fp leading_coefficient() const;
  Fp coefficient(const Monomial& m) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial scaled(Fp c) const;
  Polynomial pow(std::uint32_t e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) {
    return !(a == b);
  }

  /// Canonical text form: descending graded-lex terms joined by " + ",
  /// coefficient 1 elided, variables in declared order, e.g. "y^6 + x^2*y^2".
  std::string to_string() const;

 private:
  Polynomial(ContextPtr ctx, TermMap terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  friend class PolyBuilder;

  ContextPtr ctx_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

/// Accumulating builder; the one place coefficient bookkeeping is mutable.
class PolyBuilder {
 public:
  explicit PolyBuilder(ContextPtr ctx) : ctx_(std::move(ctx)) {}
  void add(const Monomial& m, std::uint64_t c);
  void add_term_product(const Monomial& m1, std::uint32_t c1,
                        const Monomial& m2, std::uint32_t c2);
  Polynomial build();

 private:
  ContextPtr ctx_;
  Polynomial::TermMap terms_;
};

Polynomial partial_derivative(const Polynomial& f, std::size_t i);
Fp evaluate(const Polynomial& f, const std::vector<Fp>& point);

/// Quotient f/g when g divides f exactly, std::nullopt otherwise. Single
/// divisor division under graded-lex order; a lone divisor generates its own
/// ideal, so a zero remainder is equivalent to divisibility.
std::optional<Polynomial> divide_exact(const Polynomial& f,
                                       const Polynomial& g);

/// Greatest common divisor normalized to graded-lex leading coefficient 1.
/// Recursive primitive polynomial-remainder sequences, dense in the highest
/// occurring variable, with content extraction. gcd(f, 0) = normalized(f).
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// g with g^p = f when every exponent of f is divisible by p (coefficients
/// are untouched: Frobenius fixes the prime field), std::nullopt otherwise.
std::optional<Polynomial> pth_root(const Polynomial& f);

/// Product of the distinct irreducible factors of f, leading coefficient 1.
/// Strips p-th-power layers by exponent division where all partials vanish.
Polynomial squarefree_part(const Polynomial& f);

/// Term-wise antiderivative in variable i. Throws NonIntegrableExponentError
/// on any monomial whose exponent in x_i is p-1 (mod p).
Polynomial integrate_term(const Polynomial& f, std::size_t i);

/// f scaled so its graded-lex leading coefficient is 1; zero stays zero.
Polynomial normalized(const Polynomial& f);

}  // namespace deplocus

#endif  // DEPLOCUS_POLY_HPP
