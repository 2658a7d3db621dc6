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

#include "trico/poly.hpp"

#include <algorithm>
#include <numeric>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

// --- RingPoly ---------------------------------------------------------------

RingPoly::RingPoly(RingPtr ring, std::vector<Element> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!c.attached() || !c.ring().same_as(*ring_)) throw RingMismatch();
  }
  trim();
}

void RingPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RingPoly RingPoly::constant(const Element& c) { return RingPoly(c.ring_ptr(), {c}); }

RingPoly RingPoly::monomial(const Element& c, std::size_t d) {
  std::vector<Element> v(d + 1, c.ring().zero());
  v[d] = c;
  return RingPoly(c.ring_ptr(), std::move(v));
}

RingPoly RingPoly::from_ints(const RingPtr& ring, const std::vector<std::int64_t>& coeffs) {
  std::vector<Element> v;
  v.reserve(coeffs.size());
  for (auto c : coeffs) v.push_back(ring->from_int(c));
  return RingPoly(ring, std::move(v));
}

RingPoly RingPoly::lift(const RingPtr& ring, const FieldPoly& f) {
  std::vector<Element> v;
  v.reserve(f.size());
  for (auto c : f) v.push_back(ring->lift(c));
  return RingPoly(ring, std::move(v));
}

bool RingPoly::is_regular() const {
  return std::any_of(c_.begin(), c_.end(), [](const Element& c) { return c.is_unit(); });
}

Element RingPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_->zero(); }

FieldPoly RingPoly::residue() const {
  FieldPoly out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = ring_->residue(c_[i]);
  fpoly::trim(out);
  return out;
}

Element RingPoly::eval(const Element& a) const {
  Element acc = ring_->zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
  return acc;
}

RingPoly RingPoly::derivative() const {
  std::vector<Element> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * ring_->from_int(static_cast<std::int64_t>(i)));
  return RingPoly(ring_, std::move(v));
}

RingPoly RingPoly::scale(const Element& c) const {
  std::vector<Element> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(a * c);
  return RingPoly(ring_, std::move(v));
}

RingPoly RingPoly::shift(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Element> v(k, ring_->zero());
  v.insert(v.end(), c_.begin(), c_.end());
  return RingPoly(ring_, std::move(v));
}

RingPoly operator+(const RingPoly& a, const RingPoly& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<Element> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(i) + b.coeff(i));
  return RingPoly(a.ring_, std::move(v));
}

RingPoly operator-(const RingPoly& a, const RingPoly& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  std::vector<Element> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.push_back(a.coeff(i) - b.coeff(i));
  return RingPoly(a.ring_, std::move(v));
}

RingPoly operator*(const RingPoly& a, const RingPoly& b) {
  if (a.is_zero() || b.is_zero()) return RingPoly(a.ring_);
  std::vector<Element> v(a.c_.size() + b.c_.size() - 1, a.ring_->zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RingPoly(a.ring_, std::move(v));
}

RingPoly RingPoly::operator-() const {
  std::vector<Element> v;
  v.reserve(c_.size());
  for (const auto& a : c_) v.push_back(-a);
  return RingPoly(ring_, std::move(v));
}

// --- division ---------------------------------------------------------------

std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g) {
  if (g.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (!g.lead().is_unit()) throw InvalidArgument("divisor must have a unit leading coefficient");
  const RingPtr& R = f.ring_ptr();
  const Element inv = g.lead().inverse();
  std::vector<Element> rem = f.coeffs();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  if (rem.size() <= dg) return {RingPoly(R), f};
  std::vector<Element> q(rem.size() - dg, R->zero());
  for (std::size_t top = rem.size(); top-- > dg;) {
    if (rem[top].is_zero()) continue;
    const Element c = rem[top] * inv;
    q[top - dg] = c;
    for (std::size_t i = 0; i <= dg; ++i) rem[top - dg + i] -= c * g.coeffs()[i];
  }
  rem.resize(dg, R->zero());
  return {RingPoly(R, std::move(q)), RingPoly(R, std::move(rem))};
}

RingPoly poly_rem(const RingPoly& f, const RingPoly& g) { return poly_divmod(f, g).second; }

// --- Hensel lifting ---------------------------------------------------------

namespace {

FieldPoly field_product(const GaloisField& F, const std::vector<FieldPoly>& fs, std::size_t lo, std::size_t hi) {
  FieldPoly out{1};
  for (std::size_t i = lo; i < hi; ++i) out = fpoly::mul(F, out, fs[i]);
  return out;
}

// Lifts f = g h given gbar hbar = fbar with gbar, hbar coprime and monic.
std::pair<RingPoly, RingPoly> lift_pair(const RingPoly& f, const FieldPoly& gbar, const FieldPoly& hbar) {
  const RingPtr& R = f.ring_ptr();
  const auto& F = R->residue_field();
  const auto bez = fpoly::ext_gcd(F, gbar, hbar);  // s gbar + t hbar = 1
  const RingPoly S = RingPoly::lift(R, bez.s);
  const RingPoly T = RingPoly::lift(R, bez.t);
  RingPoly g = RingPoly::lift(R, gbar);
  RingPoly h = RingPoly::lift(R, hbar);
  // Each pass gains one gamma-digit: if f = gh mod gamma^j then with
  // e = f - gh the corrections (T e mod g, S e mod h) restore f mod gamma^{j+1}.
  for (unsigned pass = 0; pass <= R->s() + 1; ++pass) {
    const RingPoly e = f - g * h;
    if (e.is_zero()) return {g, h};
    const RingPoly dg = poly_rem(T * e, g);
    const RingPoly dh = poly_rem(S * e, h);
    g = g + dg;
    h = h + dh;
  }
  throw Error("Hensel lifting did not converge");
}

std::vector<RingPoly> lift_all(const RingPoly& f, const std::vector<FieldPoly>& fs, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return {f};
  const auto& F = f.ring().residue_field();
  const std::size_t mid = lo + (hi - lo) / 2;
  const auto [g, h] = lift_pair(f, field_product(F, fs, lo, mid), field_product(F, fs, mid, hi));
  auto left = lift_all(g, fs, lo, mid);
  auto right = lift_all(h, fs, mid, hi);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

}  // namespace

Factorization hensel_lift(const RingPoly& f, const std::vector<FieldPoly>& residue_factors) {
  if (!f.is_monic()) throw InvalidArgument("Hensel lifting needs a monic polynomial");
  const RingPtr& R = f.ring_ptr();
  const auto& F = R->residue_field();
  Factorization out{{}, R->one()};
  if (residue_factors.empty()) {
    if (f.degree() != 0) throw InvalidArgument("residue factors do not multiply to the residue of f");
    return out;
  }
  for (const auto& h : residue_factors) {
    if (h.empty() || h.back() != 1 || fpoly::degree(h) < 1) {
      throw InvalidArgument("residue factors must be monic of positive degree");
    }
  }
  for (std::size_t i = 0; i < residue_factors.size(); ++i) {
    for (std::size_t j = i + 1; j < residue_factors.size(); ++j) {
      if (fpoly::degree(fpoly::gcd(F, residue_factors[i], residue_factors[j])) > 0) {
        throw InvalidArgument("residue factors are not pairwise coprime");
      }
    }
  }
  if (field_product(F, residue_factors, 0, residue_factors.size()) != f.residue()) {
    throw InvalidArgument("residue factors do not multiply to the residue of f");
  }
  for (auto& g : lift_all(f, residue_factors, 0, residue_factors.size())) out.factors.emplace_back(std::move(g), 1);
  return out;
}

Factorization factor_basic_irreducible(const RingPoly& f, bool require_squarefree) {
  if (!f.is_monic()) throw InvalidArgument("factorization needs a monic polynomial");
  const auto& F = f.ring().residue_field();
  const FieldPoly fbar = f.residue();
  const auto fac = fpoly::factor(F, fbar);
  const bool squarefree = std::all_of(fac.begin(), fac.end(), [](const auto& x) { return x.second == 1; });
  if (!squarefree && require_squarefree) throw InvalidArgument("residue of f is not squarefree");
  std::vector<FieldPoly> blocks;
  for (const auto& [h, k] : fac) {
    FieldPoly b{1};
    for (unsigned i = 0; i < k; ++i) b = fpoly::mul(F, b, h);
    blocks.push_back(b);
  }
  return hensel_lift(f, blocks);
}

bool is_residue_squarefree(const RingPoly& f) {
  return fpoly::is_squarefree(f.ring().residue_field(), f.residue());
}

// --- trinomials -------------------------------------------------------------

namespace {

// (-1)^{n(n-1)/2} b^{k-1} [n^N b^{N-K} - (-1)^N (n-k)^{N-K} k^K a^N]^d
template <class T, class Ops>
T discriminant_formula(unsigned n, unsigned k, const T& a, const T& b, const Ops& ops) {
  if (k == 0 || k >= n) throw InvalidArgument("trinomial needs 0 < k < n");
  const unsigned d = std::gcd(n, k);
  const unsigned N = n / d;
  const unsigned K = k / d;
  const T term1 = ops.mul(ops.pow(ops.from_int(n), N), ops.pow(b, N - K));
  T term2 = ops.mul(ops.mul(ops.pow(ops.from_int(n - k), N - K), ops.pow(ops.from_int(k), K)), ops.pow(a, N));
  if (N % 2 == 1) term2 = ops.neg(term2);
  T out = ops.mul(ops.pow(b, k - 1), ops.pow(ops.sub(term1, term2), d));
  const std::uint64_t nn = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (nn % 2 == 1) out = ops.neg(out);
  return out;
}

struct RingOps {
  const ChainRing& R;
  Element from_int(std::int64_t v) const { return R.from_int(v); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element pow(const Element& a, std::uint64_t e) const { return a.pow(e); }
};

struct FieldOps {
  const GaloisField& F;
  GaloisField::Elem from_int(std::int64_t v) const { return F.from_int(v); }
  GaloisField::Elem mul(GaloisField::Elem a, GaloisField::Elem b) const { return F.mul(a, b); }
  GaloisField::Elem sub(GaloisField::Elem a, GaloisField::Elem b) const { return F.sub(a, b); }
  GaloisField::Elem neg(GaloisField::Elem a) const { return F.neg(a); }
  GaloisField::Elem pow(GaloisField::Elem a, std::uint64_t e) const { return F.pow(a, e); }
};

}  // namespace

Element trinomial_discriminant(unsigned n, unsigned k, const Element& a, const Element& b) {
  if (!a.ring().same_as(b.ring())) throw RingMismatch();
  return discriminant_formula(n, k, a, b, RingOps{a.ring()});
}

GaloisField::Elem trinomial_discriminant(const GaloisField& F, unsigned n, unsigned k, GaloisField::Elem a,
                                         GaloisField::Elem b) {
  return discriminant_formula(n, k, a, b, FieldOps{F});
}

bool squarefree_criterion(unsigned n, unsigned k, std::uint64_t p) {
  if (k == 0 || k >= n) throw InvalidArgument("trinomial needs 0 < k < n");
  const std::uint64_t nk = static_cast<std::uint64_t>(n) * k;
  return nk % p == 0 && (static_cast<std::uint64_t>(n) + k) % p != 0;
}

std::uint64_t poly_order(const GaloisField& F, const FieldPoly& f) { return fpoly::order(F, f); }

}  // namespace trico
