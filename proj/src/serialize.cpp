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

#include "trico/serialize.hpp"

#include <cctype>
#include <limits>

#include "trico/error.hpp"

namespace trico {

namespace {

std::vector<std::int64_t> trimmed(std::vector<std::int64_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Block j of the coordinates: the w-coefficients of u^j.
std::vector<std::int64_t> block(const Element& a, unsigned j) {
  const unsigned r = a.ring().r();
  const auto c = a.coords();
  return {c.begin() + j * r, c.begin() + (j + 1) * r};
}

std::int64_t json_int(const Json& j) {
  if (!j.is_number_integer()) throw ParseError("expected an integer in " + j.dump(), 0);
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> json_ints(const Json& j) {
  if (j.is_number_integer()) return {j.get<std::int64_t>()};
  if (!j.is_array()) throw ParseError("expected an integer list in " + j.dump(), 0);
  std::vector<std::int64_t> out;
  for (const auto& x : j) out.push_back(json_int(x));
  return out;
}

// Recursive-descent parser for polynomials in x over R with constants
// given as integers, element lists, w, u and xi.
class ExprParser {
 public:
  ExprParser(RingPtr ring, std::string_view s) : R_(std::move(ring)), s_(s) {}

  RingPoly parse() {
    skip();
    if (pos_ == s_.size()) fail("empty expression");
    RingPoly v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(' ||
           c == '[';
  }

  RingPoly expr() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    RingPoly v = term();
    if (neg) v = -v;
    while (true) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  RingPoly term() {
    RingPoly v = factor();
    while (true) {
      if (accept('*')) {
        v = v * factor();
      } else if (starts_atom()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  RingPoly factor() {
    RingPoly v = atom();
    if (accept('^')) {
      skip();
      const std::uint64_t e = integer();
      RingPoly out = RingPoly::constant(R_->one());
      for (std::uint64_t i = 0; i < e; ++i) out = out * v;
      return out;
    }
    return v;
  }

  std::uint64_t integer() {
    const std::size_t at = pos_;
    std::uint64_t v = 0;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer");
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
        pos_ = at;
        fail("integer too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0');
    }
    return v;
  }

  RingPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      RingPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == '[') {
      const std::size_t at = pos_;
      int depth = 0;
      std::size_t end = pos_;
      for (; end < s_.size(); ++end) {
        if (s_[end] == '[') ++depth;
        if (s_[end] == ']' && --depth == 0) break;
      }
      if (end == s_.size()) fail("unbalanced '['");
      pos_ = end + 1;
      try {
        return RingPoly::constant(element_from_json(R_, Json::parse(s_.substr(at, end + 1 - at))));
      } catch (const Json::exception& e) {
        pos_ = at;
        fail("malformed element list");
      } catch (const ParseError& e) {
        pos_ = at;
        fail(e.what());
      }
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = integer();
      return RingPoly::constant(R_->from_int(static_cast<std::int64_t>(v % static_cast<std::uint64_t>(R_->characteristic()))));
    }
    const std::size_t at = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) name += s_[pos_++];
    if (name == "x") return RingPoly::x(R_);
    if (name == "w") {
      if (R_->r() == 1) {
        pos_ = at;
        fail("'w' needs a residue field of degree > 1");
      }
      return RingPoly::constant(R_->omega());
    }
    if (name == "u") {
      if (R_->e() == 1) {
        pos_ = at;
        fail("'u' needs a ramified ring (e > 1)");
      }
      return RingPoly::constant(R_->gamma());
    }
    if (name == "xi") return RingPoly::constant(R_->teichmuller_generator());
    pos_ = at;
    fail("unknown symbol '" + name + "'");
  }

  RingPtr R_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_json_array(std::string_view s) {
  s = strip(s);
  if (s.empty() || s.front() != '[') return false;
  return Json::accept(s);
}

}  // namespace

Json element_to_json(const Element& a) {
  const ChainRing& R = a.ring();
  const auto c = a.coords();
  bool scalar = true;
  for (std::size_t i = 1; i < c.size(); ++i) scalar = scalar && c[i] == 0;
  if (scalar) return c[0];
  if (R.r() == 1) return trimmed({c.begin(), c.end()});
  if (R.e() == 1) return trimmed(block(a, 0));
  Json out = Json::array();
  unsigned used = R.e();
  while (used > 1 && trimmed(block(a, used - 1)).empty()) --used;
  for (unsigned j = 0; j < used; ++j) out.push_back(block(a, j));
  return out;
}

std::string format_element(const Element& a) { return element_to_json(a).dump(); }

Element element_from_json(const RingPtr& ring, const Json& j) {
  const ChainRing& R = *ring;
  if (j.is_number_integer()) return R.from_int(j.get<std::int64_t>());
  if (!j.is_array()) throw ParseError("expected an integer or list element, got " + j.dump(), 0);
  const bool nested = std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_array(); });
  std::vector<std::vector<std::int64_t>> parts;
  if (nested) {
    for (const auto& x : j) parts.push_back(json_ints(x));
  } else if (R.r() == 1) {
    for (const auto& x : j) parts.push_back({json_int(x)});
  } else if (R.e() == 1) {
    parts.push_back(json_ints(j));
  } else {
    throw ParseError("flat element list is ambiguous here; use [[w-coeffs of u^0], [w-coeffs of u^1], ...]", 0);
  }
  if (parts.size() > R.e()) throw ParseError("element has more u-coefficients than e", 0);
  for (const auto& p : parts) {
    if (p.size() > R.r()) throw ParseError("element has more w-coefficients than r", 0);
  }
  return R.from_nested(parts);
}

Element parse_element(const RingPtr& ring, std::string_view text) {
  if (is_json_array(text)) return element_from_json(ring, Json::parse(strip(text)));
  const RingPoly v = ExprParser(ring, text).parse();
  if (v.degree() > 0) throw ParseError("element expression may not contain x", 0);
  return v.coeff(0);
}

Json poly_to_json(const RingPoly& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(element_to_json(c));
  return out;
}

std::string format_poly(const RingPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int d = f.degree(); d >= 0; --d) {
    const Element& c = f.coeffs()[d];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono;
    if (d >= 1) mono = std::string(1, var) + (d > 1 ? "^" + std::to_string(d) : "");
    if (d == 0) {
      out += format_element(c);
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += format_element(c) + "*" + mono;
    }
  }
  return out;
}

RingPoly poly_from_json(const RingPtr& ring, const Json& j) {
  if (!j.is_array()) throw ParseError("expected a coefficient list, got " + j.dump(), 0);
  std::vector<Element> c;
  for (const auto& x : j) c.push_back(element_from_json(ring, x));
  return RingPoly(ring, std::move(c));
}

RingPoly parse_poly(const RingPtr& ring, std::string_view text) {
  if (is_json_array(text)) return poly_from_json(ring, Json::parse(strip(text)));
  return ExprParser(ring, text).parse();
}

std::string format_binomial(const Binomial& b) {
  std::vector<Element> c(b.k() + 1, b.ring().zero());
  c[0] = b.b0();
  c[b.k()] = b.b1();
  return format_poly(RingPoly(b.ring_ptr(), std::move(c)));
}

Binomial parse_binomial(const RingPtr& ring, std::string_view text) {
  const RingPoly f = parse_poly(ring, text);
  const int k = f.degree();
  bool ok = k >= 1;
  for (int i = 1; ok && i < k; ++i) ok = f.coeffs()[i].is_zero();
  if (!ok || !f.coeff(0).is_unit() || !f.lead().is_unit()) {
    throw InvalidArgument("'" + std::string(text) + "' is not a binomial b1*x^k + b0 with unit coefficients");
  }
  return Binomial(static_cast<unsigned>(k), f.lead(), f.coeff(0));
}

Json code_to_json(const PolycyclicCode& code) {
  Json rows = Json::array();
  for (const auto& row : code.rows()) rows.push_back({{"lambda", row.lambda}, {"g", poly_to_json(row.g)}});
  return {{"ring", code.ring().spec()}, {"modulus", poly_to_json(code.modulus())}, {"rows", rows}};
}

PolycyclicCode code_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("modulus") || !j.contains("rows")) {
    throw ParseError("code JSON needs ring, modulus and rows", 0);
  }
  const RingPtr ring = ChainRing::parse(j.at("ring").get<std::string>());
  std::vector<CodeRow> rows;
  for (const auto& r : j.at("rows")) rows.push_back({r.at("lambda").get<unsigned>(), poly_from_json(ring, r.at("g"))});
  return PolycyclicCode(poly_from_json(ring, j.at("modulus")), std::move(rows));
}

Json certificate_to_json(const EquivalenceCertificate& cert) {
  return {{"alpha", element_to_json(cert.alpha)}, {"l", cert.l}};
}

Json decomposition_to_json(const UnitGroupDecomposition& dec) {
  return {{"p", dec.p},
          {"exponents", dec.exponents},
          {"cyclic_part", dec.cyclic_part},
          {"order", dec.order()},
          {"text", dec.to_string()}};
}

}  // namespace trico
