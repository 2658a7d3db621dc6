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

#include <algorithm>
#include <set>

#include "ideal_oracle.hpp"
#include "oracles.hpp"
#include "trico/codes.hpp"
#include "trico/error.hpp"

using namespace trico;

namespace {

RingPoly P(const RingPtr& R, const std::vector<std::int64_t>& c) { return RingPoly::from_ints(R, c); }

RingPoly random_poly(const RingPtr& R, oracle::Lcg& rng, int deg) {
  std::vector<Element> c;
  for (int i = 0; i <= deg; ++i) c.push_back(R->decode(rng.below(R->cardinality())));
  return RingPoly(R, c);
}

oracle::Ambient::Ideal codeword_set(const oracle::Ambient& A, const PolycyclicCode& C) {
  oracle::Ambient::Ideal out;
  for_each_codeword(C, [&](const std::vector<Element>& w) { out.push_back(A.index(RingPoly(C.ring_ptr(), w))); });
  std::sort(out.begin(), out.end());
  return out;
}

unsigned weight(const RingPoly& h) {
  unsigned w = 0;
  for (const auto& c : h.coeffs()) w += c.is_zero() ? 0 : 1;
  return w;
}

struct Case {
  const char* ring;
  std::vector<std::int64_t> f;
};

const std::vector<Case> kCases = {
    {"Z(4)", {-1, 0, 0, 1}},      {"Z(4)", {-1, -1, 0, 0, 1}},      {"Z(4)", {-1, 0, 0, -1, 1}},
    {"FU(2,2)", {-1, 0, 0, 1}},   {"FU(2,2)", {-1, -1, 0, 0, 1}},   {"FU(2,2)", {-1, 0, 0, -1, 1}},
};

}  // namespace

TEST_CASE("standard form examples over Z4") {
  auto Z4 = ChainRing::parse("Z(4)");
  const auto f = P(Z4, {-1, 0, 0, 1});
  const auto C = standard_form(f, {P(Z4, {2, 2})});
  REQUIRE(C.rows().size() == 1);
  CHECK(C.rows()[0].lambda == 1);
  CHECK(C.rows()[0].g == P(Z4, {3, 1}));
  CHECK(code_cardinality(C) == 4);
  CHECK(min_distance(C) == 2u);

  const auto sgb = minimal_sgb(C);
  REQUIRE(sgb.size() == 2);
  CHECK(sgb[0].lambda == 0);
  CHECK(sgb[0].g == f);
  CHECK(sgb[1].g == P(Z4, {3, 1}));
  CHECK(minimal_sgb_violations(sgb).empty());

  const PolycyclicCode two_rows(f, {{0, P(Z4, {1, 1, 1})}, {1, P(Z4, {1})}});
  CHECK(standard_form_violations(two_rows).empty());
  CHECK(principal_generator(two_rows) == P(Z4, {3, 1, 1}));
  CHECK(standard_form(f, {P(Z4, {3, 1, 1})}) == two_rows);
}

TEST_CASE("zero and whole codes") {
  auto Z4 = ChainRing::parse("Z(4)");
  const auto f = P(Z4, {-1, 0, 0, 1});
  const auto zero = standard_form(f, {});
  CHECK(zero.is_zero());
  CHECK(code_cardinality(zero) == 1);
  CHECK_FALSE(min_distance(zero).has_value());
  CHECK(minimal_sgb(zero).size() == 1);
  const auto whole = standard_form(f, {P(Z4, {1})});
  REQUIRE(whole.rows().size() == 1);
  CHECK(whole.rows()[0].lambda == 0);
  CHECK(whole.rows()[0].g.degree() == 0);
  CHECK(code_cardinality(whole) == 64);
  CHECK(min_distance(whole) == 1u);
  CHECK(standard_form(f, {f}) == zero);
}

TEST_CASE("binary even-weight code") {
  auto F2 = ChainRing::parse("F(2)");
  const auto C = standard_form(P(F2, {1, 0, 0, 1}), {P(F2, {1, 1})});
  CHECK(code_cardinality(C) == 4);
  CHECK(min_distance(C) == 2u);
}

TEST_CASE("enumeration matches exhaustive ideal lattices") {
  for (const auto& [spec, coeffs, expected] : std::vector<std::tuple<const char*, std::vector<std::int64_t>, std::size_t>>{
           {"Z(4)", {-1, 0, 0, 1}, 9},
           {"F(4)", {-1, 0, 0, 1}, 8},
           {"FU(2,2)", {-1, -1, 0, 0, 1}, 3},
           {"Z(8)", {1, 1, 1}, 4},
       }) {
    CAPTURE(spec);
    auto R = ChainRing::parse(spec);
    const auto f = P(R, coeffs);
    const oracle::Ambient A(f);
    const auto lattice = A.all_ideals();
    const auto codes = enumerate_codes_squarefree(f);
    CHECK(codes.size() == expected);
    CHECK(lattice.size() == expected);
    std::set<oracle::Ambient::Ideal> seen;
    for (const auto& C : codes) {
      CHECK(standard_form_violations(C).empty());
      const auto words = codeword_set(A, C);
      CHECK(words.size() == code_cardinality(C));
      CHECK(lattice.count(words) == 1);
      seen.insert(words);
      CHECK(standard_form(f, {principal_generator(C)}) == C);
      CHECK(A.closure({principal_generator(C)}) == words);
    }
    CHECK(seen.size() == codes.size());
  }
}

TEST_CASE("standard form properties on random generator sets") {
  oracle::Lcg rng(20261016);
  for (const auto& tc : kCases) {
    CAPTURE(tc.ring);
    auto R = ChainRing::parse(tc.ring);
    const auto f = P(R, tc.f);
    const oracle::Ambient A(f);
    const int n = f.degree();
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<RingPoly> gens;
      const auto count = 1 + rng.below(3);
      for (std::uint64_t i = 0; i < count; ++i) gens.push_back(random_poly(R, rng, static_cast<int>(rng.below(n + 2))));
      // Scaling by gamma pushes the random sets toward proper ideals.
      if (rng.below(2) == 0) gens[0] = gens[0].scale(R->gamma());
      const auto C = standard_form(f, gens);
      CHECK(standard_form_violations(C).empty());
      CHECK(minimal_sgb_violations(minimal_sgb(C)).empty());
      for (const auto& g : gens) CHECK(code_membership(C, g));
      const auto ideal = A.closure(gens);
      CHECK(ideal.size() == code_cardinality(C));
      CHECK(codeword_set(A, C) == ideal);
      // Canonical: another spanning set of the same ideal gives the same rows.
      std::vector<RingPoly> other;
      for (const auto& row : C.rows()) other.push_back(row.g.scale(R->gamma().pow(row.lambda)).shift(1) + row.g.scale(R->gamma().pow(row.lambda)));
      for (const auto& row : C.rows()) other.push_back(row.g.scale(R->gamma().pow(row.lambda)));
      CHECK(standard_form(f, other) == C);
      // Membership agrees with the explicit set on a few random elements.
      for (int k = 0; k < 8; ++k) {
        const auto idx = rng.below(A.size());
        CHECK(code_membership(C, A.poly(idx)) == std::binary_search(ideal.begin(), ideal.end(), idx));
      }
    }
  }
}

TEST_CASE("minimum distance matches brute force over codewords") {
  oracle::Lcg rng(7);
  auto R = ChainRing::parse("Z(4)");
  const auto f = P(R, {-1, -1, 0, 0, 1});
  const oracle::Ambient A(f);
  for (int trial = 0; trial < 20; ++trial) {
    const auto C = standard_form(f, {random_poly(R, rng, 3).scale(R->from_int(static_cast<std::int64_t>(1 + rng.below(2))))});
    unsigned best = 100;
    for (const auto idx : A.closure({principal_generator(C)})) {
      if (idx != 0) best = std::min(best, weight(A.poly(idx)));
    }
    if (C.is_zero()) {
      CHECK_FALSE(min_distance(C).has_value());
    } else {
      CHECK(min_distance(C) == best);
    }
  }
}

TEST_CASE("codeword enumeration respects its bound") {
  auto R = ChainRing::parse("Z(4)");
  const auto whole = standard_form(P(R, {-1, 0, 0, 1}), {P(R, {1})});
  CHECK_THROWS_AS(min_distance(whole, 32), BoundExceeded);
}

TEST_CASE("non-squarefree modulus keeps a normal form") {
  auto Z4 = ChainRing::parse("Z(4)");
  const auto f = P(Z4, {1, 0, 1});  // residue (x+1)^2
  const oracle::Ambient A(f);
  const auto lattice = A.all_ideals();
  std::set<std::vector<CodeRow>, bool (*)(const std::vector<CodeRow>&, const std::vector<CodeRow>&)> distinct(
      [](const std::vector<CodeRow>& a, const std::vector<CodeRow>& b) {
        auto key = [](const std::vector<CodeRow>& v) {
          std::vector<std::vector<std::int64_t>> k;
          for (const auto& r : v) {
            k.push_back({r.lambda});
            for (const auto& c : r.g.coeffs()) k.back().push_back(c.coords()[0]);
          }
          return k;
        };
        return key(a) < key(b);
      });
  for (const auto& ideal : lattice) {
    std::vector<RingPoly> gens;
    for (const auto i : ideal) gens.push_back(A.poly(i));
    const auto C = standard_form(f, gens);
    CHECK(standard_form_violations(C).empty());
    CHECK(codeword_set(A, C) == ideal);
    distinct.insert(C.rows());
  }
  CHECK(distinct.size() == lattice.size());
  CHECK_THROWS_AS(principal_generator(standard_form(f, {P(Z4, {1, 1})})), InvalidArgument);
}

namespace {

// All monic divisors of F over the field K, by trial division.
std::vector<RingPoly> monic_divisors(const RingPtr& K, const RingPoly& F) {
  std::vector<RingPoly> out;
  for (int d = 0; d <= F.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= K->cardinality();
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Element> c;
      std::uint64_t x = code;
      for (int i = 0; i < d; ++i) {
        c.push_back(K->decode(x % K->cardinality()));
        x /= K->cardinality();
      }
      c.push_back(K->one());
      RingPoly g(K, c);
      if (poly_rem(F, g).is_zero()) out.push_back(g);
    }
  }
  return out;
}

void check_transfer(const char* field, const std::vector<std::int64_t>& fc, unsigned k, std::size_t expected) {
  auto K = ChainRing::parse(field);
  const auto S = reproot_setup(P(K, fc), k);
  const auto sources = repeated_root_ideals(S);
  CHECK(sources.size() == expected);
  CHECK(monic_divisors(K, S.big_modulus).size() == expected);
  std::vector<PolycyclicCode> images;
  for (const auto& C : sources) {
    const auto M = reproot_transfer(S, C);
    CHECK(standard_form_violations(M).empty());
    CHECK(code_cardinality(M) == code_cardinality(C));
    images.push_back(M);
  }
  CHECK(enumerate_codes_squarefree(S.f_over_W).size() == expected);
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (i != j) CHECK_FALSE(images[i] == images[j]);
      CHECK(code_subset(sources[i], sources[j]) == code_subset(images[i], images[j]));
    }
  }
}

}  // namespace

TEST_CASE("repeated-root transfer") {
  auto F2 = ChainRing::parse("F(2)");
  const auto S = reproot_setup(P(F2, {1, 1, 1}), 1);
  CHECK(S.order == 3);
  CHECK(S.e_prime == 2);
  CHECK(S.big_modulus == P(F2, {1, 0, 1, 0, 1}));
  CHECK(S.W->s() == 2);
  check_transfer("F(2)", {1, 1, 1}, 1, 3);
  check_transfer("F(3)", {1, 0, 1}, 1, 4);
  check_transfer("F(2)", {1, 1, 0, 1}, 1, 3);
  check_transfer("F(4)", {1, 0, 0, 1}, 1, 27);
  CHECK_THROWS_AS(reproot_setup(P(F2, {1, 0, 1}), 1), InvalidArgument);
  CHECK_THROWS_AS(reproot_setup(P(F2, {0, 1}), 1), InvalidArgument);
}
