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

#ifndef DEPLOCUS_FP_HPP
#define DEPLOCUS_FP_HPP

#include <cstdint>
#include <iosfwd>

#include "deplocus/errors.hpp"

namespace deplocus {

/// Largest admissible modulus. Word arithmetic with a widening multiply is
/// exact below this bound, and the canonical-family degrees blow up in p long
/// before bigger primes become interesting.
inline constexpr std::uint32_t kDefaultModulusCap = 1u << 20;

/// A validated prime modulus p with 2 <= p <= cap.
class PrimeModulus {
 public:
  std::uint32_t p() const noexcept { return p_; }

  friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept {
    return a.p_ == b.p_;
  }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) noexcept {
    return a.p_ != b.p_;
  }

 private:
  friend PrimeModulus make_modulus(std::uint64_t, std::uint64_t);
  explicit PrimeModulus(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

/// Validates p by trial division. Throws NotPrimeError for composites and
/// anything below 2, CapacityError above the cap.
PrimeModulus make_modulus(std::uint64_t p,
                          std::uint64_t cap = kDefaultModulusCap);

/// An element of the prime field F_p, kept reduced to [0, p). Binary
/// operations between elements of different moduli throw ModulusMismatchError.
class Fp {
 public:
  Fp(std::uint64_t value, PrimeModulus m)
      : value_(static_cast<std::uint32_t>(value % m.p())), p_(m.p()) {}

  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  friend Fp operator+(Fp a, Fp b) {
    a.check(b);
    std::uint32_t s = a.value_ + b.value_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator-(Fp a, Fp b) {
    a.check(b);
    std::uint32_t s = a.value_ + a.p_ - b.value_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_);
  }
  friend Fp operator*(Fp a, Fp b) {
    a.check(b);
    std::uint64_t w = static_cast<std::uint64_t>(a.value_) * b.value_;
    return Fp(static_cast<std::uint32_t>(w % a.p_), a.p_);
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }

  Fp operator-() const noexcept {
    return Fp(value_ == 0 ? 0 : p_ - value_, p_);
  }

  /// a^e by square-and-multiply; a^0 = 1 including 0^0.
  Fp pow(std::uint64_t e) const noexcept;

  /// Multiplicative inverse via Fermat exponentiation a^(p-2).
  Fp inv() const;

  friend bool operator==(Fp a, Fp b) {
    a.check(b);
    return a.value_ == b.value_;
  }
  friend bool operator!=(Fp a, Fp b) { return !(a == b); }

 private:
  Fp(std::uint32_t reduced, std::uint32_t p) noexcept
      : value_(reduced), p_(p) {}
  void check(Fp other) const {
    if (p_ != other.p_)
      throw ModulusMismatchError("field elements have different moduli");
  }

  std::uint32_t value_;
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, Fp x);

}  // namespace deplocus

#endif  // DEPLOCUS_FP_HPP
