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

#include "deplocus/fp.hpp"

#include <ostream>

namespace deplocus {

PrimeModulus make_modulus(std::uint64_t p, std::uint64_t cap) {
  if (p > cap)
    throw CapacityError("modulus " + std::to_string(p) + " exceeds cap " +
                        std::to_string(cap));
  if (p < 2) throw NotPrimeError(std::to_string(p) + " is not prime");
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0)
      throw NotPrimeError(std::to_string(p) + " is not prime (divisor " +
                          std::to_string(d) + ")");
  }
  return PrimeModulus(static_cast<std::uint32_t>(p));
}

Fp Fp::pow(std::uint64_t e) const noexcept {
  std::uint64_t base = value_;
  std::uint64_t acc = 1 % p_;
  while (e != 0) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return Fp(static_cast<std::uint32_t>(acc), p_);
}

Fp Fp::inv() const {
  if (value_ == 0) throw DivisionByZeroError("inverse of zero in F_p");
  return pow(p_ - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace deplocus
