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

#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "trico/equiv.hpp"
#include "trico/error.hpp"
#include "trico/numeric.hpp"

using namespace trico;

namespace {

Binomial B(const RingPtr& R, unsigned k, std::int64_t b1, std::int64_t b0) {
  return Binomial(k, R->from_int(b1), R->from_int(b0));
}

// Exhaustive alpha search, independent of the Bezout shortcut.
bool equivalent_by_search(const Binomial& a, const Binomial& b, unsigned n) {
  const auto& R = a.ring();
  bool found = false;
  R.for_each_unit([&](const Element& x) {
    if (!found && b.b1() * x.pow(n - a.k()) == a.b1() && b.b0() * x.pow(n) == a.b0()) found = true;
  });
  return found;
}

Binomial random_binomial(const std::vector<Element>& units, unsigned k, oracle::Lcg& rng) {
  return Binomial(k, units[rng.below(units.size())], units[rng.below(units.size())]);
}

const std::vector<const char*> kRings = {"Z(4)",    "Z(8)",    "Z(9)",    "Z(27)",   "F(4)",    "F(5)",
                                         "F(8)",    "F(9)",    "GR(4,2)", "GR(9,2)", "FU(2,3)", "FU(4,2)",
                                         "FU(3,4)", "FU(9,2)", "Z(16)",   "GR(8,2)", "CR(2,2,1,2,2;[1,1];[])"};

}  // namespace

TEST_CASE("star group laws") {
  auto F5 = ChainRing::parse("F(5)");
  CHECK(star(B(F5, 1, 2, 3), B(F5, 1, 3, 2)) == Binomial::identity(F5, 1));
  auto F4 = ChainRing::parse("F(4)");
  const Element w = F4->omega();
  CHECK(star_pow(Binomial(1, w, w), 2) == Binomial(1, w * w, w * w));
  CHECK_THROWS_AS(star(B(F5, 1, 1, 1), B(F5, 2, 1, 1)), CrossDegreeRefusal);
  CHECK_THROWS_AS(B(F5, 1, 0, 1), InvalidArgument);

  oracle::Lcg rng(3);
  for (const char* spec : kRings) {
    auto R = ChainRing::parse(spec);
    const auto units = R->units();
    for (int i = 0; i < 20; ++i) {
      const auto a = random_binomial(units, 2, rng), b = random_binomial(units, 2, rng),
                 c = random_binomial(units, 2, rng);
      CHECK(star(star(a, b), c) == star(a, star(b, c)));
      CHECK(star(a, b) == star(b, a));
      CHECK(star(a, Binomial::identity(R, 2)) == a);
      CHECK(star(a, star_inv(a)) == Binomial::identity(R, 2));
      CHECK(star_pow(a, -3) == star_inv(star(a, star(a, a))));
    }
  }
}

TEST_CASE("n-equivalence examples") {
  auto F5 = ChainRing::parse("F(5)");
  const auto cert = n_equivalent(B(F5, 1, 4, 2), B(F5, 1, 1, 1), 3);
  REQUIRE(cert);
  CHECK(cert->alpha == F5->from_int(3));
  CHECK(cert->l == 0);
  auto Z4 = ChainRing::parse("Z(4)");
  CHECK_FALSE(n_equivalent(B(Z4, 1, 1, 3), B(Z4, 1, 1, 1), 2));
  const auto self = n_equivalent(B(Z4, 1, 3, 3), B(Z4, 1, 3, 3), 2);
  REQUIRE(self);
  CHECK(self->alpha.is_one());
  CHECK_THROWS_AS(n_equivalent(B(Z4, 1, 1, 1), B(Z4, 2, 1, 1), 3), CrossDegreeRefusal);
  CHECK_THROWS_AS(n_equivalent(B(Z4, 2, 1, 1), B(Z4, 2, 1, 1), 2), InvalidArgument);
}

TEST_CASE("H_k and classes") {
  auto Z4 = ChainRing::parse("Z(4)");
  const auto H = hk_subgroup(Z4, 2, 1);
  REQUIRE(H.size() == 2);
  CHECK(H[0] == B(Z4, 1, 1, 1));
  CHECK(H[1] == B(Z4, 1, 3, 1));
  const auto cls = equivalence_class(B(Z4, 1, 1, 3), 2);
  REQUIRE(cls.size() == 2);
  CHECK(cls[0] == B(Z4, 1, 1, 3));
  CHECK(cls[1] == B(Z4, 1, 3, 3));
  const auto reps = class_representatives(Z4, 2, 1);
  REQUIRE(reps.size() == 2);
  CHECK(reps[0] == B(Z4, 1, 1, 1));
  CHECK(reps[1] == B(Z4, 1, 1, 3));

  auto F4 = ChainRing::parse("F(4)");
  CHECK(hk_subgroup(F4, 27, 3).size() == 1);
  CHECK(class_representatives(F4, 27, 1).size() == 3);
  CHECK(class_representatives(F4, 27, 1).front() == Binomial::identity(F4, 1));
}

TEST_CASE("class counts reproduce the worked examples") {
  auto R = ChainRing::parse("FU(9,4)");
  CHECK(count_classes_k(*R, 12, 1) == 5832);
  CHECK(count_classes_k(*R, 12, 3) == 472392);
  CHECK(count_classes_k(*R, 12, 6) == 944784);
  CHECK(count_classes_total(*R, 12) == 1982880);
  CHECK(kernel_size(*R, 12, 3) == 81);
  CHECK(kernel_size_bruteforce(*R, 12, 3) == 81);
  CHECK(omega(*R, 12, 3) == 1);
  const auto dec = R->unit_decomposition();
  CHECK(ord_count(dec, 1, 1) == 80);
  CHECK(ord_count(dec, 0, 8) == 4);

  auto F4 = ChainRing::parse("F(4)");
  CHECK(count_classes_k(*F4, 27, 3) == 9);
  CHECK(count_classes_k(*F4, 27, 1) == 3);
  CHECK(count_classes_total(*F4, 27) == 126);
  CHECK(kernel_size(*F4, 27, 3) == 3);
  CHECK(omega(*F4, 27, 3) == 0);
}

TEST_CASE("order-type counts partition the unit group") {
  for (const char* spec : kRings) {
    const std::string spec_name = spec;
    CAPTURE(spec_name);
    auto R = ChainRing::parse(spec);
    const auto dec = R->unit_decomposition();
    std::map<std::uint64_t, std::uint64_t> hist;
    R->for_each_unit([&](const Element& a) { ++hist[R->element_order(a)]; });
    std::uint64_t total = 0;
    for (unsigned l = 0; l <= dec.max_exponent(); ++l) {
      for (const auto u : num::divisors(dec.cyclic_part)) {
        const auto c = ord_count(dec, l, u);
        CHECK(c == hist[num::ipow(R->p(), l) * u]);
        total += c;
      }
    }
    CHECK(total == R->unit_count());
    CHECK(ord_count(dec, dec.max_exponent() + 1, 1) == 0);
  }
}

TEST_CASE("closed-form counts agree with enumeration") {
  for (const char* spec : kRings) {
    const std::string spec_name = spec;
    CAPTURE(spec_name);
    auto R = ChainRing::parse(spec);
    const std::uint64_t u = R->unit_count();
    for (unsigned n = 2; n <= 30; ++n) {
      for (unsigned k = 1; k < n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const auto closed = count_classes_k(*R, n, k);
        CHECK(kernel_size(*R, n, k) == kernel_size_bruteforce(*R, n, k));
        CHECK(closed == count_classes_k_bruteforce(R, n, k));
        if (std::gcd(n, k) == 1) CHECK(closed == u);
        if (u <= 64 && n <= 12) CHECK(class_representatives(R, n, k).size() == closed);
      }
      if (R->s() == 1 && n % R->p() != 0) {
        std::uint64_t sum = 0;
        for (unsigned k = 1; k < n; ++k) sum += num::gcd3(n, k, R->q() - 1);
        CHECK(count_classes_total(*R, n) == (R->q() - 1) * sum);
      }
    }
  }
}

TEST_CASE("n-equivalence is an equivalence relation with composable certificates") {
  oracle::Lcg rng(11);
  for (const char* spec : {"Z(8)", "Z(9)", "GR(4,2)", "FU(4,2)", "FU(3,4)", "F(9)"}) {
    const std::string spec_name = spec;
    CAPTURE(spec_name);
    auto R = ChainRing::parse(spec);
    const auto units = R->units();
    for (const unsigned n : {4u, 6u, 9u, 12u}) {
      for (const unsigned k : {1u, 2u, 3u}) {
        for (int trial = 0; trial < 10; ++trial) {
          const auto a = random_binomial(units, k, rng);
          // b in the class of a by construction, c random.
          const Element s = units[rng.below(units.size())];
          const Binomial b(k, a.b1() * s.pow(n - k), a.b0() * s.pow(n));
          const auto c = random_binomial(units, k, rng);
          const auto ab = n_equivalent(b, a, n);
          REQUIRE(ab);
          CHECK(verify_certificate(b, a, n, *ab));
          const auto ba = n_equivalent(a, b, n);
          REQUIRE(ba);
          CHECK((ab->alpha * ba->alpha).pow(n) == R->one());
          const auto ac = n_equivalent(c, a, n);
          CHECK(ac.has_value() == equivalent_by_search(c, a, n));
          CHECK(n_equivalent(c, b, n).has_value() == ac.has_value());
          if (ac) {
            // c ~ a and b ~ a compose to c ~ b with witness alpha_ca / alpha_ba.
            const EquivalenceCertificate composed{ac->alpha * ab->alpha.inverse(), 0};
            CHECK(verify_certificate(c, b, n, composed));
          }
          const auto h = star(c, star_inv(a));
          const auto H = hk_subgroup(R, n, k);
          CHECK(ac.has_value() == std::binary_search(H.begin(), H.end(), h, binomial_less));
        }
      }
    }
  }
}

TEST_CASE("unital witness and degree-one isometry") {
  auto F5 = ChainRing::parse("F(5)");
  const auto alpha = equivalent_to_unital(B(F5, 1, 4, 2), 3);
  REQUIRE(alpha);
  CHECK(*alpha == F5->from_int(3));
  CHECK(equivalent_to_unital(B(F5, 1, 1, 1), 3)->is_one());
  CHECK_FALSE(equivalent_to_unital(B(F5, 1, 1, 2), 3));
  CHECK_THROWS_AS(equivalent_to_unital(B(F5, 2, 1, 1), 4), InvalidArgument);
  CHECK(isometric_to_x_plus_1(B(F5, 1, 4, 2), 3) == F5->from_int(3));

  auto Z4 = ChainRing::parse("Z(4)");
  CHECK_FALSE(isometry_b1_classify(B(Z4, 1, 1, 3), B(Z4, 1, 1, 1), 2));
  CHECK_FALSE(isometric_to_x_plus_1(B(Z4, 1, 1, 3), 2));
  CHECK_THROWS_AS(isometry_b1_classify(B(Z4, 2, 1, 3), B(Z4, 2, 1, 1), 3), InvalidArgument);

  auto F4 = ChainRing::parse("F(4)");
  const Element w = F4->omega();
  const auto cert = isometry_b1_classify(Binomial(1, w * w, w * w), Binomial(1, w, w), 5);
  REQUIRE(cert);
  CHECK(cert->l == 1);
  CHECK(cert->alpha.is_one());
  CHECK(verify_certificate(Binomial(1, w * w, w * w), Binomial(1, w, w), 5, *cert));

  // Unital witness implies a plain certificate against x^k + 1.
  oracle::Lcg rng(5);
  for (const char* spec : {"Z(9)", "GR(4,2)", "FU(3,4)", "F(8)"}) {
    auto R = ChainRing::parse(spec);
    const auto units = R->units();
    for (int i = 0; i < 50; ++i) {
      const unsigned n = 2 + static_cast<unsigned>(rng.below(12));
      unsigned k = 1 + static_cast<unsigned>(rng.below(n - 1));
      if (std::gcd(n, k) != 1) k = 1;
      const auto a = random_binomial(units, k, rng);
      const auto al = equivalent_to_unital(a, n);
      const auto cert2 = n_equivalent(a, Binomial::identity(R, k), n);
      CHECK(al.has_value() == cert2.has_value());
      if (al) CHECK(verify_certificate(a, Binomial::identity(R, k), n, EquivalenceCertificate{*al, 0}));
    }
  }
}
