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

#include <numeric>
#include <string>

#include "oracles.hpp"
#include "trico/additive.hpp"
#include "trico/error.hpp"
#include "trico/numeric.hpp"

using namespace trico;

namespace {

// Number of cosets of H in G x G found by marking every coset.
std::uint64_t coset_partition(const std::vector<Element>& G, const std::vector<Binomial>& H, unsigned k) {
  const auto& R = G.front().ring();
  std::vector<std::uint64_t> code;
  for (const auto& g : G) code.push_back(R.encode(g));
  auto pos = [&](const Element& x) {
    return static_cast<std::size_t>(std::lower_bound(code.begin(), code.end(), R.encode(x)) - code.begin());
  };
  // G is sorted by encoded_less, so codes are ascending.
  std::vector<char> seen(G.size() * G.size(), 0);
  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (seen[i * G.size() + j]) continue;
      ++classes;
      for (const auto& h : H) {
        const Binomial c = star(Binomial(k, G[i], G[j]), h);
        seen[pos(c.b1()) * G.size() + pos(c.b0())] = 1;
      }
    }
  }
  return classes;
}

}  // namespace

TEST_CASE("Teichmuller-restricted examples") {
  auto R = ChainRing::parse("FU(9,4)");
  const auto T = UnitSubgroup::teichmuller(R);
  const Element xi = R->teichmuller_generator();
  CHECK(T.order() == 8);
  const auto alpha = restricted_equivalent(Binomial(3, xi, xi.pow(4)), Binomial::identity(R, 3), 12, T);
  REQUIRE(alpha);
  CHECK(*alpha == xi);
  CHECK_FALSE(restricted_equivalent(Binomial(3, xi.pow(2), xi), Binomial::identity(R, 3), 12, T));
  CHECK(restricted_equivalent(Binomial(3, xi, xi), Binomial(3, xi, xi), 12, T)->is_one());
  CHECK_THROWS_AS(restricted_equivalent(Binomial(3, R->one() + R->gamma(), R->one()), Binomial::identity(R, 3), 12, T),
                  InvalidArgument);

  CHECK(restricted_class_count(12, 3, T) == 8);
  CHECK(restricted_class_count_bruteforce(12, 3, T, T) == 8);
  CHECK(restricted_hk_subgroup(T, 12, 3).size() == 8);
  CHECK(hGk_size_teichmuller(*R, 12, 3) == 8);
  CHECK(hGk_size_teichmuller(*ChainRing::parse("F(4)"), 27, 3) == 1);
}

TEST_CASE("subring unit groups") {
  auto GR42 = ChainRing::parse("GR(4,2)");
  const auto S = subring_unit_group(GR42, 1);
  const auto els = S.elements();
  REQUIRE(els.size() == 2);
  CHECK(els[0] == GR42->one());
  CHECK(els[1] == GR42->from_int(3));
  CHECK(subring_unit_group(GR42, 2).order() == GR42->unit_count());
  CHECK_THROWS_AS(subring_unit_group(GR42, 3), InvalidArgument);

  for (const char* spec : {"FU(9,4)", "GR(4,2)", "GR(9,2)", "FU(4,3)", "GR(8,2)", "CR(3,2,2,2,2;[1,0];[])", "F(16)"}) {
    const std::string name = spec;
    CAPTURE(name);
    auto R = ChainRing::parse(spec);
    for (unsigned rp = 1; rp <= R->r(); ++rp) {
      if (R->r() % rp != 0) continue;
      const auto G = subring_unit_group(R, rp);
      const auto all = G.elements();
      CHECK(all.size() == G.order());
      CHECK(G.decomposition() == decompose_from_elements(all, R->p()));
      std::uint64_t inside = 0;
      R->for_each_unit([&](const Element& a) { inside += G.contains(a) ? 1 : 0; });
      CHECK(inside == G.order());
      for (std::size_t i = 0; i < all.size(); i += 1 + all.size() / 16) {
        for (std::size_t j = 0; j < all.size(); j += 1 + all.size() / 16) CHECK(G.contains(all[i] * all[j]));
      }
    }
    const auto GRu = UnitSubgroup::galois_units(R);
    const auto gr = GRu.elements();
    CHECK(gr.size() == GRu.order());
    CHECK(GRu.decomposition() == decompose_from_elements(gr, R->p()));
    const auto T = UnitSubgroup::teichmuller(R);
    CHECK(T.decomposition() == decompose_from_elements(T.elements(), R->p()));
  }
  CHECK(subring_unit_group(ChainRing::parse("FU(9,4)"), 1).order() == 54);
}

TEST_CASE("Galois-coefficient class count") {
  auto R = ChainRing::parse("CR(3,2,2,2,2;[1,0];[])");
  const auto C = UnitSubgroup::galois_units(R);
  const auto T = UnitSubgroup::teichmuller(R);
  const std::uint64_t p = 3, r = 2, m = 2;
  for (unsigned n = 2; n <= 16; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      const std::uint64_t expected = num::ipow(p, 2 * r * (m - 1)) * (num::ipow(p, r) - 1) * num::gcd3(8, k, n);
      CHECK(restricted_class_count(n, k, C, T) == expected);
      CHECK(restricted_class_count_bruteforce(n, k, C, T) == expected);
    }
  }
  CHECK_THROWS_AS(restricted_class_count(4, 1, T, C), InvalidArgument);
}

TEST_CASE("Teichmuller closed form matches exhaustive cosets") {
  for (const char* spec : {"Z(4)", "Z(9)", "F(4)", "F(5)", "F(7)", "F(8)", "F(9)", "F(16)", "F(25)", "F(27)", "F(49)",
                           "F(64)", "GR(4,2)", "GR(9,2)", "FU(4,2)", "FU(9,4)", "FU(8,2)"}) {
    const std::string name = spec;
    CAPTURE(name);
    auto R = ChainRing::parse(spec);
    const auto T = UnitSubgroup::teichmuller(R);
    const auto els = T.elements();
    for (unsigned n = 2; n <= 30; ++n) {
      for (unsigned k = 1; k < n; ++k) {
        const std::uint64_t closed = (R->q() - 1) * num::gcd3(R->q() - 1, k, n);
        CHECK(restricted_class_count(n, k, T) == closed);
        const auto H = restricted_hk_subgroup(T, n, k);
        CHECK(H.size() == hGk_size_teichmuller(*R, n, k));
        if (n <= 12) CHECK(coset_partition(els, H, k) == closed);
        if (n <= 6) CHECK(restricted_coset_count(n, k, T, T) == closed);
      }
    }
  }
}

TEST_CASE("restriction refines plain equivalence") {
  oracle::Lcg rng(17);
  for (const char* spec : {"Z(9)", "GR(4,2)", "FU(4,2)", "FU(9,2)", "GR(9,2)"}) {
    const std::string name = spec;
    CAPTURE(name);
    auto R = ChainRing::parse(spec);
    const auto full = UnitSubgroup::full(R);
    const auto units = full.elements();
    for (const auto& G : {UnitSubgroup::teichmuller(R), subring_unit_group(R, 1), UnitSubgroup::galois_units(R)}) {
      const auto gels = G.elements();
      for (const unsigned n : {4u, 6u, 8u, 9u}) {
        for (const unsigned k : {1u, 2u, 3u}) {
          const auto Hk = hk_subgroup(R, n, k);
          for (const auto& h : restricted_hk_subgroup(G, n, k)) {
            CHECK(std::binary_search(Hk.begin(), Hk.end(), h, binomial_less));
          }
          for (int t = 0; t < 15; ++t) {
            const Binomial a(k, gels[rng.below(gels.size())], gels[rng.below(gels.size())]);
            const Binomial b(k, gels[rng.below(gels.size())], gels[rng.below(gels.size())]);
            const auto alpha = restricted_equivalent(a, b, n, G);
            if (alpha) {
              CHECK(G.contains(*alpha));
              CHECK(n_equivalent(a, b, n).has_value());
              // Monomial multipliers alpha^i stay in G.
              for (unsigned i = 0; i < n; ++i) CHECK(G.contains(alpha->pow(i)));
            }
            const Binomial c(k, units[rng.below(units.size())], units[rng.below(units.size())]);
            const Binomial d(k, units[rng.below(units.size())], units[rng.below(units.size())]);
            CHECK(restricted_equivalent(c, d, n, full).has_value() == n_equivalent(c, d, n).has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("subgroup selectors") {
  auto R = ChainRing::parse("GR(4,2)");
  CHECK(UnitSubgroup::parse(R, "T").kind() == SubgroupKind::Teichmuller);
  CHECK(UnitSubgroup::parse(R, "full").kind() == SubgroupKind::Full);
  CHECK(UnitSubgroup::parse(R, "GR").kind() == SubgroupKind::GaloisUnits);
  const auto S = UnitSubgroup::parse(R, "S:r'=1");
  CHECK(S.kind() == SubgroupKind::SubringUnits);
  CHECK(S.r_prime() == 1);
  CHECK(S.label() == "S:r'=1");
  CHECK_THROWS_AS(UnitSubgroup::parse(R, "S:r'=x"), ParseError);
  CHECK_THROWS_AS(UnitSubgroup::parse(R, "Q"), ParseError);
  const auto G = UnitSubgroup::generated(R, {R->from_int(3)});
  CHECK(G.order() == 2);
  CHECK(G.decomposition().order() == 2);
}
