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

// Finite chain rings presented as GR(p^m, r)[u] / <g(u), p^(m-1) u^t>.

#ifndef TRICO_CHAIN_RING_HPP
#define TRICO_CHAIN_RING_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trico/galois_field.hpp"

namespace trico {

class ChainRing;
class Element;
using RingPtr = std::shared_ptr<const ChainRing>;

/// Which closed-form unit-group decomposition applies to a presentation.
enum class RingFamily { Integers, Field, Galois, Truncated, General };

/// Abelian invariants of a finite abelian group G of units:
/// G ~ Z_{p^m_1} + ... + Z_{p^m_J} + Z_{cyclic_part}, with p not dividing
/// cyclic_part and m_1 <= ... <= m_J.
struct UnitGroupDecomposition {
  std::uint64_t p = 0;
  std::vector<unsigned> exponents;
  std::uint64_t cyclic_part = 1;

  std::size_t J() const noexcept { return exponents.size(); }
  /// m_J, or 0 when the p-part is trivial.
  unsigned max_exponent() const noexcept { return exponents.empty() ? 0 : exponents.back(); }
  std::uint64_t order() const;
  std::string to_string() const;  // e.g. "Z8 + Z3^2 + Z9^2"

  bool operator==(const UnitGroupDecomposition&) const = default;
};

/// Invariants of G computed from an explicit list of its elements: the
/// p-part is recovered from the counts #{x : x^(p^j) = 1}.
UnitGroupDecomposition decompose_from_elements(std::span<const Element> group, std::uint64_t p);

class ChainRing : public std::enable_shared_from_this<ChainRing> {
  struct Token {};

 public:
  static constexpr std::uint64_t kDefaultUnitBound = std::uint64_t{1} << 24;
  static constexpr std::uint64_t kFallbackBound = std::uint64_t{1} << 20;

  struct Params {
    std::uint32_t p = 2;
    unsigned m = 1;
    unsigned r = 1;
    unsigned e = 1;
    unsigned t = 1;
    /// a_0..a_{e-1} of g(u) = u^e - p(a_{e-1}u^{e-1} + ... + a_0); each
    /// entry is an element of GR(p^m, r) as w-coefficients.
    std::vector<std::vector<std::int64_t>> eisenstein;
    /// b_0..b_{r-1} of the monic basic irreducible w^r + ... + b_0.
    /// Empty selects GaloisField::default_modulus(p, r).
    std::vector<std::int64_t> basic_irreducible;
  };

  /// Validates the presentation and builds the ring. Throws InvalidArgument.
  static RingPtr make(const Params& params);

  /// Ring-spec DSL: Z(p^m), F(p^r), GR(p^m,r), FU(p^r,s),
  /// CR(p,m,r,e,t;[a0,...];[b0,...]). Throws ParseError / InvalidArgument.
  static RingPtr parse(std::string_view spec);

  ChainRing(Token, const Params& params);

  /// Canonical DSL string.
  std::string spec() const;

  std::uint32_t p() const noexcept { return params_.p; }
  unsigned m() const noexcept { return params_.m; }
  unsigned r() const noexcept { return params_.r; }
  unsigned e() const noexcept { return params_.e; }
  unsigned t() const noexcept { return params_.t; }
  /// Nilpotency index of gamma: (m-1)e + t.
  unsigned s() const noexcept { return s_; }
  /// Derived from the parameters, never taken from the caller.
  RingFamily family() const noexcept { return family_; }
  const Params& params() const noexcept { return params_; }
  const GaloisField& residue_field() const noexcept { return field_; }

  /// p^r, the size of the residue field.
  std::uint64_t q() const noexcept { return field_.order(); }
  /// p^m, the characteristic.
  std::int64_t characteristic() const noexcept { return modulus_; }
  std::uint64_t cardinality() const;  // p^(r s)
  std::uint64_t unit_count() const;   // p^(r(s-1)) (p^r - 1)

  // --- element construction ---------------------------------------------
  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t v) const;
  /// Generator u of the maximal ideal.
  Element gamma() const;
  /// The image of w (generator of GR(p^m, r) over Z_{p^m}).
  Element omega() const;
  /// From coordinates indexed [j * r + i] for u^j w^i; canonicalizes.
  Element from_coords(std::span<const std::int64_t> coords) const;
  /// From nested coefficient lists: outer index u-degree, inner w-degree.
  Element from_nested(const std::vector<std::vector<std::int64_t>>& nested) const;

  // --- arithmetic ---------------------------------------------------------
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t e) const;
  /// Throws NotAUnit.
  Element inverse(const Element& a) const;
  /// a^e for signed e; negative exponents require a unit.
  Element pow_signed(const Element& a, std::int64_t e) const;

  bool is_unit(const Element& a) const;
  GaloisField::Elem residue(const Element& a) const;
  Element lift(GaloisField::Elem x) const;

  /// Largest v with a in gamma^v R (s for zero).
  unsigned valuation(const Element& a) const;
  /// Some y with gamma * y = b; throws InvalidArgument if b is not in gamma R.
  Element divide_by_gamma(const Element& b) const;
  /// Some y with gamma^v * y = b.
  Element divide_by_gamma_power(const Element& b, unsigned v) const;
  /// Canonical representative of a modulo gamma^k R (truncated digit
  /// expansion over the lifts of residue-field elements).
  Element reduce_mod_gamma_power(const Element& a, unsigned k) const;
  /// Digits d_0..d_{s-1} in residue-field lifts with a = sum d_i gamma^i.
  std::vector<GaloisField::Elem> gamma_digits(const Element& a) const;

  // --- structure ----------------------------------------------------------
  /// Teichmuller set {0, 1, xi, ..., xi^(q-2)} with xi = teichmuller_generator().
  std::vector<Element> teichmuller_set() const;
  /// Multiplicative representative x of a residue: x^q = x, residue(x) = a.
  Element teichmuller_lift(GaloisField::Elem a) const;
  Element teichmuller_generator() const;
  /// Expansion a = sum xi_i gamma^i with xi_i in the Teichmuller set.
  std::vector<Element> teichmuller_digits(const Element& a) const;

  /// Multiplicative order of a unit; throws NotAUnit.
  std::uint64_t element_order(const Element& a) const;

  UnitGroupDecomposition unit_decomposition() const;
  /// Brute-force invariants from element orders; |R^x| <= bound.
  UnitGroupDecomposition unit_decomposition_bruteforce(std::uint64_t bound = kFallbackBound) const;
  /// True when unit_decomposition() uses a closed form for this presentation.
  bool has_closed_form_decomposition() const noexcept { return family_ != RingFamily::General; }

  // --- enumeration --------------------------------------------------------
  /// Dense index in [0, |R|) of the canonical form; used for hashing and
  /// the deterministic element order.
  std::uint64_t encode(const Element& a) const;
  Element decode(std::uint64_t index) const;
  void for_each_element(const std::function<void(const Element&)>& fn) const;
  void for_each_unit(const std::function<void(const Element&)>& fn,
                     std::uint64_t bound = kDefaultUnitBound) const;
  std::vector<Element> units(std::uint64_t bound = kDefaultUnitBound) const;

  /// Per-coordinate moduli of the canonical form (p^m or p^(m-1)).
  std::span<const std::int64_t> coord_moduli() const noexcept { return coord_mod_; }
  std::size_t coord_count() const noexcept { return coord_mod_.size(); }

  bool same_as(const ChainRing& other) const noexcept;

 private:
  using Gr = std::vector<std::int64_t>;  // element of GR(p^m, r), length r

  Gr gr_mul(std::span<const std::int64_t> a, std::span<const std::int64_t> b) const;
  Gr gr_reduce(std::vector<std::int64_t> a) const;
  std::vector<std::int64_t> reduce_raw(std::vector<Gr> poly) const;
  std::vector<std::int64_t> canonical(std::vector<std::int64_t> coords) const;
  Element make_element(std::vector<std::int64_t> coords) const;
  void check(const Element& a) const;

  Params params_;
  RingFamily family_;
  std::string spec_;
  unsigned s_;
  std::int64_t modulus_;     // p^m
  std::int64_t low_modulus_; // p^(m-1)
  GaloisField field_;
  std::vector<std::int64_t> coord_mod_;
  std::vector<std::int64_t> basic_;  // b_0..b_{r-1} mod p^m
  std::vector<Gr> eis_;  // p * a_i, mod p^m
  Gr a0_inv_;
  std::uint64_t cardinality_;
  std::uint64_t unit_count_;
};

/// A canonical-form element of a ChainRing. Immutable value type; the
/// default-constructed Element is detached and may only be assigned to.
class Element {
 public:
  Element() = default;
  Element(RingPtr ring, std::vector<std::int64_t> coords) : ring_(std::move(ring)), c_(std::move(coords)) {}

  const ChainRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::span<const std::int64_t> coords() const noexcept { return c_; }
  bool attached() const noexcept { return static_cast<bool>(ring_); }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  bool is_unit() const { return ring_->is_unit(*this); }

  Element operator-() const { return ring_->neg(*this); }
  friend Element operator+(const Element& a, const Element& b) { return a.ring().add(a, b); }
  friend Element operator-(const Element& a, const Element& b) { return a.ring().sub(a, b); }
  friend Element operator*(const Element& a, const Element& b) { return a.ring().mul(a, b); }
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  Element pow(std::uint64_t e) const { return ring_->pow(*this, e); }
  Element inverse() const { return ring_->inverse(*this); }

  /// Coordinates are canonical, so equality is coordinate equality.
  friend bool operator==(const Element& a, const Element& b) { return a.c_ == b.c_; }

 private:
  RingPtr ring_;
  std::vector<std::int64_t> c_;
};

/// Total order by ChainRing::encode (so 1 precedes every other unit).
bool encoded_less(const Element& a, const Element& b);

}  // namespace trico

#endif  // TRICO_CHAIN_RING_HPP
