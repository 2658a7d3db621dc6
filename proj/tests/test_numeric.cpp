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

#include <doctest.h>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

#include <numeric>

using namespace trico;

TEST_CASE("factorize and divisors") {
  const auto f = num::factorize(5832);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(f[1] == std::pair<std::uint64_t, unsigned>{3, 6});
  CHECK(num::divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(num::divisors(1) == std::vector<std::uint64_t>{1});
}

TEST_CASE("totient matches a direct count") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t c = 0;
    for (std::uint64_t k = 1; k <= n; ++k) c += std::gcd(n, k) == 1 ? 1 : 0;
    CHECK(num::totient(n) == c);
  }
}

TEST_CASE("ceil_log") {
  CHECK(num::ceil_log(3, 4, 1) == 2);
  CHECK(num::ceil_log(3, 4, 2) == 1);
  CHECK(num::ceil_log(2, 3, 1) == 2);
  CHECK(num::ceil_log(2, 8, 8) == 0);
}

TEST_CASE("modular inverse") {
  CHECK(num::inv_mod(3, 8) == 3);
  CHECK(num::inv_mod(-1, 7) == 6);
  CHECK_THROWS_AS(num::inv_mod(2, 4), NotAUnit);
  const auto g = num::ext_gcd(12, 42);
  CHECK(g.g == 6);
  CHECK(12 * g.x + 42 * g.y == 6);
}

TEST_CASE("overflow is reported") {
  CHECK_THROWS_AS(num::ipow(2, 64), BoundExceeded);
  CHECK(num::ipow(3, 6) == 729);
}
