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

#include <string>

#include "oracles.hpp"
#include "trico/error.hpp"
#include "trico/serialize.hpp"

using namespace trico;

TEST_CASE("element compact forms") {
  auto Z4 = ChainRing::parse("Z(4)");
  CHECK(format_element(Z4->from_int(3)) == "3");
  CHECK(parse_element(Z4, "-1") == Z4->from_int(3));

  auto GR = ChainRing::parse("GR(4,2)");
  const Element w = GR->omega();
  CHECK(format_element(w + GR->from_int(3)) == "[3,1]");
  CHECK(parse_element(GR, "[3,1]") == w + GR->from_int(3));
  CHECK(parse_element(GR, "3 + w") == w + GR->from_int(3));
  CHECK_THROWS_AS(parse_element(GR, "u"), ParseError);

  auto FU = ChainRing::parse("FU(9,4)");
  CHECK(format_element(FU->gamma()) == "[[0,0],[1,0]]");
  CHECK(parse_element(FU, "1 + u^2") == FU->one() + FU->gamma().pow(2));

  auto CR = ChainRing::parse("CR(3,2,2,2,2;[1,0];[])");
  const Element a = CR->from_nested({{1, 0}, {3, 1}});
  CHECK(format_element(a) == "[[1,0],[3,1]]");
  CHECK(parse_element(CR, "[[1,0],[3,1]]") == a);
  CHECK(parse_element(CR, "1 + (3 + w)*u") == a);
  CHECK_THROWS_AS(parse_element(CR, "[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_element(CR, "[[1,2,3]]"), ParseError);
  CHECK_THROWS_AS(parse_element(CR, "x + 1"), ParseError);
  CHECK(parse_element(CR, "xi^2") == CR->teichmuller_generator().pow(2));
}

TEST_CASE("element round trip over every element") {
  for (const char* spec : {"Z(8)", "F(9)", "GR(4,2)", "FU(4,3)", "CR(3,2,2,2,2;[1,0];[])", "CR(2,2,2,2,2;[[1,1],0];[1,1])", "CR(2,3,1,2,1;[1,0];[0])"}) {
    const std::string name = spec;
    CAPTURE(name);
    auto R = ChainRing::parse(spec);
    R->for_each_element([&](const Element& a) {
      CHECK(element_from_json(R, element_to_json(a)) == a);
      CHECK(parse_element(R, format_element(a)) == a);
    });
  }
}

TEST_CASE("parse errors carry a position") {
  auto R = ChainRing::parse("GR(4,2)");
  try {
    parse_element(R, "1 + v");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(parse_poly(R, "x^"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "(x + 1"), ParseError);
  CHECK_THROWS_AS(parse_poly(R, ""), ParseError);
  CHECK_THROWS_AS(parse_poly(R, "x + * 1"), ParseError);
}

TEST_CASE("polynomial forms") {
  auto Z4 = ChainRing::parse("Z(4)");
  const RingPoly f = RingPoly::from_ints(Z4, {3, 0, 0, 1});
  CHECK(format_poly(f) == "x^3 + 3");
  CHECK(poly_to_json(f).dump() == "[3,0,0,1]");
  CHECK(parse_poly(Z4, "[3,0,0,1]") == f);
  CHECK(parse_poly(Z4, "x^3 - 1") == f);
  CHECK(parse_poly(Z4, "x^3 + 3") == f);
  CHECK(parse_poly(Z4, "2x + 2") == RingPoly::from_ints(Z4, {2, 2}));
  CHECK(parse_poly(Z4, "2(x-1)") == RingPoly::from_ints(Z4, {2, 2}));
  CHECK(format_poly(RingPoly(Z4)) == "0");
  CHECK(format_poly(RingPoly::from_ints(Z4, {1, 2, 1})) == "x^2 + 2*x + 1");

  auto FU = ChainRing::parse("FU(9,4)");
  const RingPoly g = parse_poly(FU, "[[0],[1]]*x^2 + xi");
  CHECK(g.coeff(2) == FU->gamma());
  CHECK(g.coeff(0) == FU->teichmuller_generator());
  CHECK(parse_poly(FU, format_poly(g)) == g);
  CHECK(poly_from_json(FU, poly_to_json(g)) == g);
}

TEST_CASE("binomial forms") {
  auto R = ChainRing::parse("FU(9,4)");
  const Element xi = R->teichmuller_generator();
  const Binomial b(3, xi, xi.pow(4));
  CHECK(parse_binomial(R, format_binomial(b)) == b);
  CHECK(format_binomial(Binomial::identity(R, 3)) == "x^3 + 1");
  CHECK(parse_binomial(R, "x^3 + 1") == Binomial::identity(R, 3));
  CHECK_THROWS_AS(parse_binomial(R, "x^3 + x + 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_binomial(R, "x^3 + u"), InvalidArgument);
  CHECK_THROWS_AS(parse_binomial(R, "5"), InvalidArgument);
}

TEST_CASE("code and certificate JSON") {
  auto Z4 = ChainRing::parse("Z(4)");
  const RingPoly f = RingPoly::from_ints(Z4, {3, 0, 0, 1});
  const auto code = standard_form(f, {RingPoly::from_ints(Z4, {2, 2})});
  const Json j = code_to_json(code);
  CHECK(j.at("ring") == "Z(4)");
  CHECK(j.at("modulus").dump() == "[3,0,0,1]");
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows")[0].at("lambda") == 1);
  CHECK(code_from_json(j) == code);
  CHECK_THROWS_AS(code_from_json(Json::object()), ParseError);

  const Json c = certificate_to_json({Z4->from_int(3), 2});
  CHECK(c.dump() == R"({"alpha":3,"l":2})");
  const Json d = decomposition_to_json(Z4->unit_decomposition());
  CHECK(d.at("order") == 2);
}
