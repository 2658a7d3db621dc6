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

// Text and JSON forms of elements, polynomials, binomials and codes.
//
// Elements: an integer when only the constant coordinate is nonzero, a flat
// list when r = 1 (u-coefficients) or e = 1 (w-coefficients), otherwise the
// nested list [[w-coeffs of u^0], [w-coeffs of u^1], ...]. Input also accepts
// expressions such as "3+w", "1+u^2" or "xi^3" (xi: Teichmuller generator).
//
// Polynomials: "x^3 + 3" or an ascending coefficient list "[3,0,0,1]".

#ifndef TRICO_SERIALIZE_HPP
#define TRICO_SERIALIZE_HPP

#include <string>
#include <string_view>

#include <json.hpp>

#include "trico/chain_ring.hpp"
#include "trico/codes.hpp"
#include "trico/equiv.hpp"
#include "trico/poly.hpp"

namespace trico {

using Json = nlohmann::json;

Json element_to_json(const Element& a);
std::string format_element(const Element& a);
Element element_from_json(const RingPtr& ring, const Json& j);
/// Throws ParseError with the offending position.
Element parse_element(const RingPtr& ring, std::string_view text);

Json poly_to_json(const RingPoly& f);
std::string format_poly(const RingPoly& f, char var = 'x');
RingPoly poly_from_json(const RingPtr& ring, const Json& j);
RingPoly parse_poly(const RingPtr& ring, std::string_view text);

/// "a1*x^k + a0".
std::string format_binomial(const Binomial& b);
Binomial parse_binomial(const RingPtr& ring, std::string_view text);

/// {"ring": spec, "modulus": poly, "rows": [{"lambda": int, "g": poly}]}
Json code_to_json(const PolycyclicCode& code);
PolycyclicCode code_from_json(const Json& j);

/// {"alpha": element, "l": int}
Json certificate_to_json(const EquivalenceCertificate& cert);

Json decomposition_to_json(const UnitGroupDecomposition& dec);

}  // namespace trico

#endif  // TRICO_SERIALIZE_HPP
