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

#include "trico/numeric.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "trico/error.hpp"

namespace trico::num {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

u64 checked_mul(u64 a, u64 b) {
  if (a != 0 && b > std::numeric_limits<u64>::max() / a) {
    throw BoundExceeded("integer overflow in exact count");
  }
  return a * b;
}

u64 ipow(u64 base, u64 exp) {
  u64 result = 1;
  for (u64 i = 0; i < exp; ++i) result = checked_mul(result, base);
  return result;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> out{1};
  for (auto [prime, k] : factorize(n)) {
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned i = 1; i <= k; ++i) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 totient(u64 n) {
  u64 result = n;
  for (auto [prime, k] : factorize(n)) {
    (void)k;
    result = result / prime * (prime - 1);
  }
  return result;
}

unsigned valuation(u64 n, u64 p) {
  if (n == 0) throw InvalidArgument("valuation of zero");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned ceil_log(u64 p, u64 s, u64 i) {
  unsigned a = 0;
  u64 acc = i;
  while (acc < s) {
    acc = checked_mul(acc, p);
    ++a;
  }
  return a;
}

ExtGcd ext_gcd(i64 a, i64 b) {
  i64 old_r = a, r = b;
  i64 old_s = 1, s = 0;
  i64 old_t = 0, t = 1;
  while (r != 0) {
    const i64 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

i64 inv_mod(i64 a, i64 m) {
  const auto [g, x, y] = ext_gcd(mod(a, m), m);
  (void)y;
  if (g != 1) throw NotAUnit();
  return mod(x, m);
}

u64 gcd3(u64 a, u64 b, u64 c) { return std::gcd(std::gcd(a, b), c); }

}  // namespace trico::num
