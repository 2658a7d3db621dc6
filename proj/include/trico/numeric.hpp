/* Copyright 2026 The trico Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Small exact integer helpers shared by the algebra modules.

#ifndef TRICO_NUMERIC_HPP
#define TRICO_NUMERIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace trico::num {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Overflow-checked multiplication and power; throw trico::BoundExceeded.
u64 checked_mul(u64 a, u64 b);
u64 ipow(u64 base, u64 exp);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<u64> divisors(u64 n);

/// Euler's totient.
u64 totient(u64 n);

/// p-adic valuation of n > 0.
unsigned valuation(u64 n, u64 p);

/// Smallest a >= 0 with p^a * i >= s, i.e. ceil(log_p(s / i)).
unsigned ceil_log(u64 p, u64 s, u64 i);

/// Non-negative residue of a modulo m > 0.
inline i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

struct ExtGcd {
  i64 g;
  i64 x;
  i64 y;  // a*x + b*y = g
};
ExtGcd ext_gcd(i64 a, i64 b);

/// Inverse of a modulo m; throws trico::NotAUnit when gcd(a, m) != 1.
i64 inv_mod(i64 a, i64 m);

u64 gcd3(u64 a, u64 b, u64 c);

}  // namespace trico::num

#endif  // TRICO_NUMERIC_HPP
