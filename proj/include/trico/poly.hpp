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

#ifndef TRICO_POLY_HPP
#define TRICO_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "trico/chain_ring.hpp"
#include "trico/galois_field.hpp"

namespace trico {

/// Dense univariate polynomial over a ChainRing, ascending coefficients,
/// trailing zeros trimmed. The zero polynomial has degree -1.
class RingPoly {
 public:
  explicit RingPoly(RingPtr ring) : ring_(std::move(ring)) {}
  RingPoly(RingPtr ring, std::vector<Element> coeffs);

  static RingPoly constant(const Element& c);
  /// c * x^d
  static RingPoly monomial(const Element& c, std::size_t d);
  static RingPoly x(const RingPtr& ring) { return monomial(ring->one(), 1); }
  /// Coefficients given as integers.
  static RingPoly from_ints(const RingPtr& ring, const std::vector<std::int64_t>& coeffs);
  /// Coefficient-wise lift of a residue polynomial (digits in [0, p)).
  static RingPoly lift(const RingPtr& ring, const FieldPoly& f);

  const ChainRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Some coefficient is a unit, i.e. the residue is nonzero.
  bool is_regular() const;
  const std::vector<Element>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i, zero beyond the degree.
  Element coeff(std::size_t i) const;
  /// Leading coefficient; the polynomial must be nonzero.
  const Element& lead() const { return c_.back(); }

  /// Coefficient-wise projection to the residue field.
  FieldPoly residue() const;
  Element eval(const Element& a) const;
  RingPoly derivative() const;
  RingPoly scale(const Element& c) const;
  /// Multiplication by x^k.
  RingPoly shift(std::size_t k) const;

  friend RingPoly operator+(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator-(const RingPoly& a, const RingPoly& b);
  friend RingPoly operator*(const RingPoly& a, const RingPoly& b);
  RingPoly operator-() const;
  friend bool operator==(const RingPoly& a, const RingPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();

  RingPtr ring_;
  std::vector<Element> c_;
};

/// f = q * g + rem with deg rem < deg g. g must have a unit leading
/// coefficient; throws InvalidArgument otherwise.
std::pair<RingPoly, RingPoly> poly_divmod(const RingPoly& f, const RingPoly& g);
RingPoly poly_rem(const RingPoly& f, const RingPoly& g);

struct Factorization {
  std::vector<std::pair<RingPoly, unsigned>> factors;
  Element unit;
};

/// Lifts pairwise coprime monic residue factors of the monic f to monic
/// pairwise coprime factors over R whose product is exactly f.
Factorization hensel_lift(const RingPoly& f, const std::vector<FieldPoly>& residue_factors);

/// Factorization of a monic f with squarefree residue into monic basic
/// irreducibles. With require_squarefree unset, a non-squarefree residue is
/// split into coprime primary blocks instead (lifts of h_i^k_i, reported with
/// multiplicity 1).
Factorization factor_basic_irreducible(const RingPoly& f, bool require_squarefree = true);

/// gcd(fbar, fbar') = 1 over the residue field.
bool is_residue_squarefree(const RingPoly& f);

/// Closed-form discriminant of x^n + a x^k + b, 0 < k < n.
Element trinomial_discriminant(unsigned n, unsigned k, const Element& a, const Element& b);
GaloisField::Elem trinomial_discriminant(const GaloisField& F, unsigned n, unsigned k, GaloisField::Elem a,
                                         GaloisField::Elem b);

/// Sufficient condition: true implies x^n + a x^k + b is squarefree over
/// every field of characteristic p for all nonzero a, b.
bool squarefree_criterion(unsigned n, unsigned k, std::uint64_t p);

/// Least e >= 1 with f | x^e - 1 over the field; f(0) != 0.
std::uint64_t poly_order(const GaloisField& F, const FieldPoly& f);

}  // namespace trico

#endif  // TRICO_POLY_HPP
