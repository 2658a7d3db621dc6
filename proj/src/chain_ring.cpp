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

#include "trico/chain_ring.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;

std::vector<std::uint32_t> residue_coeffs(std::span<const i64> v, std::uint32_t p) {
  std::vector<std::uint32_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<std::uint32_t>(num::mod(v[i], p));
  return out;
}

// Checks the presentation and fills in defaults.
ChainRing::Params normalize(ChainRing::Params P) {
  if (!num::is_prime(P.p)) throw InvalidArgument("p = " + std::to_string(P.p) + " is not prime");
  if (P.m < 1 || P.r < 1 || P.e < 1) throw InvalidArgument("m, r and e must be positive");
  if (P.t < 1 || P.t > P.e) {
    throw InvalidArgument("t = " + std::to_string(P.t) + " out of range 1.." + std::to_string(P.e));
  }
  u64 pm = 0;
  u64 q = 0;
  try {
    pm = num::ipow(P.p, P.m);
    q = num::ipow(P.p, P.r);
  } catch (const BoundExceeded&) {
    throw InvalidArgument("ring parameters too large");
  }
  if (pm > (u64{1} << 31)) throw InvalidArgument("characteristic p^m must not exceed 2^31");
  if (q > GaloisField::kMaxOrder) throw InvalidArgument("residue field larger than 2^20");
  const u64 s = static_cast<u64>(P.m - 1) * P.e + P.t;
  if (static_cast<double>(P.r) * static_cast<double>(s) * std::log2(static_cast<double>(P.p)) > 62.0) {
    throw InvalidArgument("ring has more than 2^62 elements");
  }

  if (P.basic_irreducible.empty()) {
    const auto h = GaloisField::default_modulus(P.p, P.r);
    P.basic_irreducible.assign(h.begin(), h.end());
  }
  if (P.basic_irreducible.size() != P.r) {
    throw InvalidArgument("basic irreducible needs " + std::to_string(P.r) + " low coefficients");
  }
  for (auto& b : P.basic_irreducible) b = num::mod(b, static_cast<i64>(pm));
  const auto hbar = residue_coeffs(P.basic_irreducible, P.p);
  if (!GaloisField::is_irreducible(P.p, hbar)) {
    throw InvalidArgument("basic irreducible is reducible modulo p");
  }

  if (P.eisenstein.size() != P.e) {
    throw InvalidArgument("Eisenstein polynomial needs " + std::to_string(P.e) + " coefficients");
  }
  for (auto& a : P.eisenstein) {
    if (a.size() > P.r) throw InvalidArgument("Eisenstein coefficient has w-degree >= r");
    a.resize(P.r, 0);
    for (auto& c : a) c = num::mod(c, static_cast<i64>(pm));
  }
  const auto a0 = residue_coeffs(P.eisenstein[0], P.p);
  if (std::all_of(a0.begin(), a0.end(), [](std::uint32_t c) { return c == 0; })) {
    throw InvalidArgument("polynomial is not Eisenstein: a_0 is not a unit");
  }
  return P;
}

RingFamily classify(const ChainRing::Params& P) {
  if (P.m == 1) return P.t == 1 ? RingFamily::Field : RingFamily::Truncated;
  if (P.e == 1) return P.r == 1 ? RingFamily::Integers : RingFamily::Galois;
  return RingFamily::General;
}

std::string int_list(const std::vector<i64>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string spec_string(const ChainRing::Params& P) {
  const auto dflt = GaloisField::default_modulus(P.p, P.r);
  const bool default_b = std::equal(dflt.begin(), dflt.end(), P.basic_irreducible.begin(),
                                    P.basic_irreducible.end(), [](std::uint32_t a, i64 b) { return a == b; });
  bool unit_a = true;  // a = [1, 0, ..., 0]
  for (std::size_t j = 0; j < P.eisenstein.size(); ++j) {
    for (std::size_t i = 0; i < P.eisenstein[j].size(); ++i) {
      if (P.eisenstein[j][i] != ((i == 0 && j == 0) ? 1 : 0)) unit_a = false;
    }
  }
  const u64 pm = num::ipow(P.p, P.m);
  const u64 q = num::ipow(P.p, P.r);
  std::ostringstream os;
  if (default_b && unit_a && P.e == 1) {
    if (P.m == 1) {
      os << "F(" << q << ')';
    } else if (P.r == 1) {
      os << "Z(" << pm << ')';
    } else {
      os << "GR(" << pm << ',' << P.r << ')';
    }
  } else if (default_b && unit_a && P.m == 1 && P.e == P.t) {
    os << "FU(" << q << ',' << P.e << ')';
  } else {
    os << "CR(" << P.p << ',' << P.m << ',' << P.r << ',' << P.e << ',' << P.t << ";[";
    for (std::size_t j = 0; j < P.eisenstein.size(); ++j) {
      const auto& a = P.eisenstein[j];
      const bool scalar = std::all_of(a.begin() + 1, a.end(), [](i64 c) { return c == 0; });
      os << (j ? "," : "") << (scalar ? std::to_string(a[0]) : int_list(a));
    }
    os << "];" << int_list(P.basic_irreducible) << ')';
  }
  return os.str();
}

}  // namespace

// --- UnitGroupDecomposition ----------------------------------------------

std::uint64_t UnitGroupDecomposition::order() const {
  u64 n = cyclic_part;
  for (unsigned e : exponents) n = num::checked_mul(n, num::ipow(p, e));
  return n;
}

std::string UnitGroupDecomposition::to_string() const {
  std::vector<std::string> parts;
  if (cyclic_part > 1) parts.push_back("Z" + std::to_string(cyclic_part));
  for (std::size_t i = 0; i < exponents.size();) {
    std::size_t j = i;
    while (j < exponents.size() && exponents[j] == exponents[i]) ++j;
    std::string term = "Z" + std::to_string(num::ipow(p, exponents[i]));
    if (j - i > 1) term += "^" + std::to_string(j - i);
    parts.push_back(term);
    i = j;
  }
  if (parts.empty()) return "trivial";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

UnitGroupDecomposition decompose_from_elements(std::span<const Element> group, std::uint64_t p) {
  UnitGroupDecomposition d;
  d.p = p;
  if (group.empty()) throw InvalidArgument("empty group");
  // N[j] = #{x : x^(p^j) = 1}; for the p-part, N[j] = p^(sum_i min(j, m_i)).
  std::vector<u64> N;
  std::vector<Element> cur(group.begin(), group.end());
  for (unsigned j = 0;; ++j) {
    u64 ones = 0;
    for (const auto& x : cur) ones += x.is_one() ? 1 : 0;
    if (j > 0 && ones == N.back()) break;
    if (j > 64) throw Error("group exponent is not finite");
    N.push_back(ones);
    for (auto& x : cur) x = x.pow(p);
  }
  const u64 sylow = N.back();
  if (group.size() % sylow != 0) throw Error("inconsistent subgroup");
  d.cyclic_part = group.size() / sylow;
  // rank_j = #{i : m_i >= j} = log_p(N[j] / N[j-1]).
  std::vector<unsigned> rank;
  for (std::size_t j = 1; j < N.size(); ++j) {
    u64 ratio = N[j] / N[j - 1];
    unsigned k = 0;
    while (ratio > 1) {
      ratio /= p;
      ++k;
    }
    rank.push_back(k);
  }
  for (std::size_t j = 0; j < rank.size(); ++j) {
    const unsigned next = j + 1 < rank.size() ? rank[j + 1] : 0;
    for (unsigned c = next; c < rank[j]; ++c) d.exponents.push_back(static_cast<unsigned>(j + 1));
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  return d;
}

// --- construction -----------------------------------------------------------

RingPtr ChainRing::make(const Params& params) {
  return std::make_shared<const ChainRing>(Token{}, normalize(params));
}

ChainRing::ChainRing(Token, const Params& params)
    : params_(params),
      family_(classify(params)),
      spec_(spec_string(params)),
      s_((params.m - 1) * params.e + params.t),
      modulus_(static_cast<i64>(num::ipow(params.p, params.m))),
      low_modulus_(static_cast<i64>(num::ipow(params.p, params.m - 1))),
      field_(params.p, params.r, residue_coeffs(params.basic_irreducible, params.p)) {
  const unsigned r = params_.r;
  const unsigned e = params_.e;
  coord_mod_.resize(static_cast<std::size_t>(e) * r);
  for (unsigned j = 0; j < e; ++j) {
    for (unsigned i = 0; i < r; ++i) coord_mod_[j * r + i] = j < params_.t ? modulus_ : low_modulus_;
  }
  basic_ = params_.basic_irreducible;
  for (const auto& a : params_.eisenstein) {
    Gr pa(r);
    for (unsigned i = 0; i < r; ++i) pa[i] = num::mod(a[i] * static_cast<i64>(params_.p), modulus_);
    eis_.push_back(pa);
  }
  // Newton iteration for a_0^{-1} in GR(p^m, r).
  const auto& a0 = params_.eisenstein[0];
  const auto r0 = field_.inv(field_.from_digits(a0));
  Gr x(r, 0);
  const auto dig = field_.digits(r0);
  for (unsigned i = 0; i < r; ++i) x[i] = dig[i];
  for (unsigned it = 0; it <= params_.m + 1; ++it) {
    Gr ax = gr_mul(a0, x);
    for (auto& c : ax) c = num::mod(-c, modulus_);
    ax[0] = num::mod(ax[0] + 2, modulus_);
    x = gr_mul(x, ax);
  }
  a0_inv_ = x;
  cardinality_ = num::ipow(params_.p, static_cast<u64>(r) * s_);
  unit_count_ = num::checked_mul(num::ipow(params_.p, static_cast<u64>(r) * (s_ - 1)), field_.order() - 1);
}

std::string ChainRing::spec() const { return spec_; }

std::uint64_t ChainRing::cardinality() const { return cardinality_; }
std::uint64_t ChainRing::unit_count() const { return unit_count_; }

bool ChainRing::same_as(const ChainRing& o) const noexcept {
  return this == &o || (params_.p == o.params_.p && params_.m == o.params_.m && params_.r == o.params_.r &&
                        params_.e == o.params_.e && params_.t == o.params_.t &&
                        params_.eisenstein == o.params_.eisenstein &&
                        params_.basic_irreducible == o.params_.basic_irreducible);
}

void ChainRing::check(const Element& a) const {
  if (!a.attached() || !same_as(a.ring())) throw RingMismatch();
}

// --- Galois-ring layer ------------------------------------------------------

ChainRing::Gr ChainRing::gr_reduce(std::vector<i64> a) const {
  const std::size_t r = params_.r;
  for (auto& c : a) c = num::mod(c, modulus_);
  for (std::size_t d = a.size(); d-- > r;) {
    const i64 c = a[d];
    if (c == 0) continue;
    a[d] = 0;
    // w^r = -(b_0 + ... + b_{r-1} w^{r-1})
    for (std::size_t i = 0; i < r; ++i) a[d - r + i] = num::mod(a[d - r + i] - c * basic_[i], modulus_);
  }
  a.resize(r, 0);
  return a;
}

ChainRing::Gr ChainRing::gr_mul(std::span<const i64> a, std::span<const i64> b) const {
  const std::size_t r = params_.r;
  if (r == 1) return Gr{num::mod(a[0] * b[0], modulus_)};
  std::vector<i64> prod(2 * r - 1, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = num::mod(prod[i + j] + a[i] * b[j], modulus_);
  }
  return gr_reduce(std::move(prod));
}

std::vector<i64> ChainRing::canonical(std::vector<i64> c) const {
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = num::mod(c[i], coord_mod_[i]);
  return c;
}

Element ChainRing::make_element(std::vector<i64> coords) const {
  return Element(shared_from_this(), std::move(coords));
}

std::vector<i64> ChainRing::reduce_raw(std::vector<Gr> poly) const {
  const std::size_t r = params_.r;
  const std::size_t e = params_.e;
  for (auto& g : poly) g = gr_reduce(std::move(g));
  // u^e = p * (a_{e-1} u^{e-1} + ... + a_0), applied from the top degree down.
  for (std::size_t j = poly.size(); j-- > e;) {
    const Gr c = poly[j];
    if (std::all_of(c.begin(), c.end(), [](i64 v) { return v == 0; })) continue;
    for (std::size_t i = 0; i < e; ++i) {
      const Gr add = gr_mul(c, eis_[i]);
      for (std::size_t w = 0; w < r; ++w) poly[j - e + i][w] = num::mod(poly[j - e + i][w] + add[w], modulus_);
    }
  }
  std::vector<i64> coords(e * r, 0);
  for (std::size_t j = 0; j < std::min(e, poly.size()); ++j) {
    for (std::size_t w = 0; w < r; ++w) coords[j * r + w] = poly[j][w];
  }
  return canonical(std::move(coords));
}

// --- element construction ---------------------------------------------------

Element ChainRing::zero() const { return make_element(std::vector<i64>(coord_count(), 0)); }

Element ChainRing::one() const { return from_int(1); }

Element ChainRing::from_int(std::int64_t v) const {
  std::vector<i64> c(coord_count(), 0);
  c[0] = num::mod(v, modulus_);
  return make_element(std::move(c));
}

Element ChainRing::gamma() const { return from_nested({{0}, {1}}); }

Element ChainRing::omega() const {
  if (params_.r == 1) return from_int(-basic_[0]);
  std::vector<i64> c(coord_count(), 0);
  c[1] = 1;
  return make_element(std::move(c));
}

Element ChainRing::from_coords(std::span<const std::int64_t> coords) const {
  if (coords.size() > coord_count()) throw InvalidArgument("too many coordinates for this ring");
  std::vector<i64> c(coords.begin(), coords.end());
  c.resize(coord_count(), 0);
  return make_element(canonical(std::move(c)));
}

Element ChainRing::from_nested(const std::vector<std::vector<std::int64_t>>& nested) const {
  std::vector<Gr> poly;
  poly.reserve(std::max<std::size_t>(nested.size(), 1));
  for (const auto& g : nested) {
    Gr v(g.begin(), g.end());
    if (v.size() < params_.r) v.resize(params_.r, 0);
    poly.push_back(std::move(v));
  }
  return make_element(reduce_raw(std::move(poly)));
}

// --- arithmetic -------------------------------------------------------------

Element ChainRing::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<i64> c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const i64 v = a.coords()[i] + b.coords()[i];
    c[i] = v >= coord_mod_[i] ? v - coord_mod_[i] : v;
  }
  return make_element(std::move(c));
}

Element ChainRing::sub(const Element& a, const Element& b) const {
  check(a);
  check(b);
  std::vector<i64> c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const i64 v = a.coords()[i] - b.coords()[i];
    c[i] = v < 0 ? v + coord_mod_[i] : v;
  }
  return make_element(std::move(c));
}

Element ChainRing::neg(const Element& a) const {
  check(a);
  std::vector<i64> c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords()[i] == 0 ? 0 : coord_mod_[i] - a.coords()[i];
  return make_element(std::move(c));
}

Element ChainRing::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  const std::size_t r = params_.r;
  const std::size_t e = params_.e;
  if (e == 1) return make_element(canonical(gr_mul(a.coords(), b.coords())));
  std::vector<Gr> poly(2 * e - 1, Gr(r, 0));
  for (std::size_t i = 0; i < e; ++i) {
    const auto ai = a.coords().subspan(i * r, r);
    if (std::all_of(ai.begin(), ai.end(), [](i64 v) { return v == 0; })) continue;
    for (std::size_t j = 0; j < e; ++j) {
      const auto bj = b.coords().subspan(j * r, r);
      if (std::all_of(bj.begin(), bj.end(), [](i64 v) { return v == 0; })) continue;
      const Gr prod = gr_mul(ai, bj);
      for (std::size_t w = 0; w < r; ++w) poly[i + j][w] = num::mod(poly[i + j][w] + prod[w], modulus_);
    }
  }
  return make_element(reduce_raw(std::move(poly)));
}

Element ChainRing::pow(const Element& a, std::uint64_t e) const {
  check(a);
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Element ChainRing::inverse(const Element& a) const {
  check(a);
  const auto ra = residue(a);
  if (ra == 0) throw NotAUnit();
  Element x = lift(field_.inv(ra));
  const Element two = from_int(2);
  for (unsigned it = 0; it < 64; ++it) {
    const Element ax = mul(a, x);
    if (ax.is_one()) return x;
    x = mul(x, sub(two, ax));
  }
  throw Error("inverse iteration did not converge");
}

Element ChainRing::pow_signed(const Element& a, std::int64_t e) const {
  if (e >= 0) return pow(a, static_cast<u64>(e));
  return pow(inverse(a), static_cast<u64>(-(e + 1)) + 1);
}

bool ChainRing::is_unit(const Element& a) const { return residue(a) != 0; }

GaloisField::Elem ChainRing::residue(const Element& a) const {
  check(a);
  return field_.from_digits(a.coords().subspan(0, params_.r));
}

Element ChainRing::lift(GaloisField::Elem x) const {
  const auto d = field_.digits(x);
  std::vector<i64> c(coord_count(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) c[i] = d[i];
  return make_element(std::move(c));
}

// --- gamma-adic structure ---------------------------------------------------

Element ChainRing::divide_by_gamma(const Element& b) const {
  check(b);
  const std::size_t r = params_.r;
  const std::size_t e = params_.e;
  const auto c = b.coords();
  Gr b0(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r));
  for (auto& v : b0) {
    if (v % params_.p != 0) throw InvalidArgument("element is not divisible by gamma");
    v /= params_.p;
  }
  // gamma * y = b with gamma = u: the u^0 coefficient gives p a_0 y_{e-1} = b_0,
  // the others y_{j-1} + p a_j y_{e-1} = b_j.
  const Gr top = gr_mul(b0, a0_inv_);
  std::vector<i64> y(e * r, 0);
  for (std::size_t w = 0; w < r; ++w) y[(e - 1) * r + w] = top[w];
  for (std::size_t j = 1; j < e; ++j) {
    const Gr t = gr_mul(eis_[j], top);
    for (std::size_t w = 0; w < r; ++w) y[(j - 1) * r + w] = c[j * r + w] - t[w];
  }
  Element out = make_element(canonical(std::move(y)));
  assert(mul(gamma(), out) == b);
  return out;
}

Element ChainRing::divide_by_gamma_power(const Element& b, unsigned v) const {
  Element y = b;
  for (unsigned i = 0; i < v; ++i) y = divide_by_gamma(y);
  return y;
}

unsigned ChainRing::valuation(const Element& a) const {
  check(a);
  if (a.is_zero()) return s_;
  unsigned v = 0;
  Element cur = a;
  while (residue(cur) == 0) {
    cur = divide_by_gamma(cur);
    ++v;
  }
  return v;
}

std::vector<GaloisField::Elem> ChainRing::gamma_digits(const Element& a) const {
  check(a);
  std::vector<GaloisField::Elem> out;
  out.reserve(s_);
  Element cur = a;
  for (unsigned i = 0; i < s_; ++i) {
    const auto d = residue(cur);
    out.push_back(d);
    if (i + 1 < s_) cur = divide_by_gamma(sub(cur, lift(d)));
  }
  return out;
}

Element ChainRing::reduce_mod_gamma_power(const Element& a, unsigned k) const {
  check(a);
  if (k >= s_) return a;
  if (k == 0) return zero();
  const auto digits = gamma_digits(a);
  Element out = zero();
  Element g = one();
  const Element gam = gamma();
  for (unsigned i = 0; i < k; ++i) {
    if (digits[i] != 0) out = add(out, mul(lift(digits[i]), g));
    g = mul(g, gam);
  }
  return out;
}

// --- structure --------------------------------------------------------------

Element ChainRing::teichmuller_lift(GaloisField::Elem a) const {
  if (a == 0) return zero();
  Element x = lift(a);
  for (unsigned it = 0; it <= 4 * s_ + 8; ++it) {
    Element y = pow(x, q());
    if (y == x) return x;
    x = std::move(y);
  }
  throw Error("Teichmuller iteration did not converge");
}

Element ChainRing::teichmuller_generator() const { return teichmuller_lift(field_.generator()); }

std::vector<Element> ChainRing::teichmuller_set() const {
  std::vector<Element> out{zero(), one()};
  const Element xi = teichmuller_generator();
  Element cur = xi;
  for (u64 i = 1; i + 1 < q(); ++i) {
    out.push_back(cur);
    cur = mul(cur, xi);
  }
  return out;
}

std::vector<Element> ChainRing::teichmuller_digits(const Element& a) const {
  check(a);
  std::vector<Element> out;
  Element cur = a;
  for (unsigned i = 0; i < s_; ++i) {
    Element d = teichmuller_lift(residue(cur));
    out.push_back(d);
    if (i + 1 < s_) cur = divide_by_gamma(sub(cur, d));
  }
  return out;
}

std::uint64_t ChainRing::element_order(const Element& a) const {
  if (!is_unit(a)) throw NotAUnit();
  u64 d = unit_count_;
  for (auto [prime, k] : num::factorize(unit_count_)) {
    for (unsigned i = 0; i < k; ++i) {
      if (!pow(a, d / prime).is_one()) break;
      d /= prime;
    }
  }
  return d;
}

UnitGroupDecomposition ChainRing::unit_decomposition() const {
  UnitGroupDecomposition d;
  d.p = params_.p;
  d.cyclic_part = q() - 1;
  const unsigned p = params_.p;
  const unsigned m = params_.m;
  const unsigned r = params_.r;
  switch (family_) {
    case RingFamily::Field:
      break;
    case RingFamily::Integers:
    case RingFamily::Galois:
      if (p == 2 && m > 2) {
        d.exponents.push_back(1);
        d.exponents.push_back(m - 2);
        for (unsigned i = 1; i < r; ++i) d.exponents.push_back(m - 1);
      } else {
        for (unsigned i = 0; i < r; ++i) d.exponents.push_back(m - 1);
      }
      break;
    case RingFamily::Truncated:
      for (unsigned i = 1; i < s_; ++i) {
        if (i % p == 0) continue;
        const unsigned alpha = num::ceil_log(p, s_, i);
        for (unsigned c = 0; c < r; ++c) d.exponents.push_back(alpha);
      }
      break;
    case RingFamily::General:
      return unit_decomposition_bruteforce();
  }
  std::sort(d.exponents.begin(), d.exponents.end());
  return d;
}

UnitGroupDecomposition ChainRing::unit_decomposition_bruteforce(std::uint64_t bound) const {
  if (unit_count_ > bound) {
    throw BoundExceeded("unit group of order " + std::to_string(unit_count_) +
                        " too large for brute-force decomposition");
  }
  // The p-part is 1 + gamma R; count x with x^(p^j) = 1 for each j.
  std::vector<Element> sylow;
  for_each_element([&](const Element& x) {
    if (residue(x) == 1) sylow.push_back(x);
  });
  UnitGroupDecomposition d = decompose_from_elements(sylow, params_.p);
  d.cyclic_part = q() - 1;
  return d;
}

// --- enumeration ------------------------------------------------------------

std::uint64_t ChainRing::encode(const Element& a) const {
  check(a);
  u64 idx = 0;
  for (std::size_t i = coord_count(); i-- > 0;) {
    idx = idx * static_cast<u64>(coord_mod_[i]) + static_cast<u64>(a.coords()[i]);
  }
  return idx;
}

Element ChainRing::decode(std::uint64_t index) const {
  if (index >= cardinality_) throw InvalidArgument("element index out of range");
  std::vector<i64> c(coord_count());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<i64>(index % static_cast<u64>(coord_mod_[i]));
    index /= static_cast<u64>(coord_mod_[i]);
  }
  return make_element(std::move(c));
}

void ChainRing::for_each_element(const std::function<void(const Element&)>& fn) const {
  std::vector<i64> c(coord_count(), 0);
  for (u64 n = 0; n < cardinality_; ++n) {
    fn(make_element(c));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (++c[i] < coord_mod_[i]) break;
      c[i] = 0;
    }
  }
}

void ChainRing::for_each_unit(const std::function<void(const Element&)>& fn, std::uint64_t bound) const {
  if (unit_count_ > bound) {
    throw BoundExceeded("unit group of order " + std::to_string(unit_count_) + " exceeds enumeration bound " +
                        std::to_string(bound));
  }
  for_each_element([&](const Element& x) {
    if (is_unit(x)) fn(x);
  });
}

std::vector<Element> ChainRing::units(std::uint64_t bound) const {
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(std::min(unit_count_, bound)));
  for_each_unit([&](const Element& x) { out.push_back(x); }, bound);
  return out;
}

// --- Element ----------------------------------------------------------------

bool Element::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::int64_t v) { return v == 0; });
}

bool Element::is_one() const noexcept {
  return !c_.empty() && c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](std::int64_t v) { return v == 0; });
}

bool encoded_less(const Element& a, const Element& b) { return a.ring().encode(a) < b.ring().encode(b); }

}  // namespace trico
