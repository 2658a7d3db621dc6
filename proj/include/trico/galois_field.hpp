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

#ifndef TRICO_GALOIS_FIELD_HPP
#define TRICO_GALOIS_FIELD_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trico {

/// The finite field F_p[w]/<h(w)> with h monic irreducible of degree r.
///
/// Elements are encoded as integers in [0, q): base-p digit i is the
/// coefficient of w^i. Multiplication goes through exp/log tables built
/// at construction, so q is limited to kMaxOrder.
class GaloisField {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  /// `modulus` holds h_0..h_{r-1}; the leading 1 is implied.
  GaloisField(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus);

  /// F_p^r with the first primitive modulus (see default_modulus).
  static GaloisField standard(std::uint32_t p, unsigned r);

  /// First monic primitive polynomial of degree r over F_p, ordered by the
  /// integer whose base-p digits are h_0..h_{r-1}. For r = 1 this is w.
  static std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned r);

  /// True when the monic polynomial with low coefficients `low` is
  /// irreducible over F_p.
  static bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> low);

  std::uint32_t p() const noexcept { return p_; }
  unsigned r() const noexcept { return r_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  Elem from_int(std::int64_t v) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws NotAUnit on zero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// A fixed primitive element (generator of F_q^*).
  Elem generator() const noexcept { return generator_; }
  /// Discrete log with respect to generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::int64_t> coeffs) const;

  bool operator==(const GaloisField& other) const {
    return p_ == other.p_ && r_ == other.r_ && modulus_ == other.modulus_;
  }

 private:
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  unsigned r_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;  // p^i for digit extraction
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  Elem generator_ = 1;
};

/// Dense polynomials over a GaloisField, ascending coefficients with no
/// trailing zeros (the zero polynomial is empty).
using FieldPoly = std::vector<GaloisField::Elem>;

namespace fpoly {

int degree(const FieldPoly& f);
void trim(FieldPoly& f);
FieldPoly monic(const GaloisField& F, FieldPoly f);

FieldPoly add(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly sub(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly mul(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly scale(const GaloisField& F, const FieldPoly& a, GaloisField::Elem c);
std::pair<FieldPoly, FieldPoly> divmod(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly rem(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);
FieldPoly derivative(const GaloisField& F, const FieldPoly& a);
FieldPoly powmod(const GaloisField& F, FieldPoly base, std::uint64_t e, const FieldPoly& m);

/// Monic gcd (zero if both inputs are zero).
FieldPoly gcd(const GaloisField& F, FieldPoly a, FieldPoly b);

struct Bezout {
  FieldPoly g;  // monic gcd
  FieldPoly s;
  FieldPoly t;  // s*a + t*b = g
};
Bezout ext_gcd(const GaloisField& F, const FieldPoly& a, const FieldPoly& b);

bool is_squarefree(const GaloisField& F, const FieldPoly& f);
bool is_irreducible(const GaloisField& F, const FieldPoly& f);

/// Monic irreducible factors with multiplicities of a nonzero polynomial,
/// sorted by (degree, coefficients). Deterministic for a fixed seed.
std::vector<std::pair<FieldPoly, unsigned>> factor(const GaloisField& F, const FieldPoly& f,
                                                   std::uint64_t seed = 0x7121c0);

/// Least e >= 1 with f | x^e - 1; requires f(0) != 0.
std::uint64_t order(const GaloisField& F, const FieldPoly& f);

std::string to_string(const GaloisField& F, const FieldPoly& f);

}  // namespace fpoly

}  // namespace trico

#endif  // TRICO_GALOIS_FIELD_HPP
