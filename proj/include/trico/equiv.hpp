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

// Binomials b1 x^k + b0 with unit coefficients, the componentwise star
// product, n-equivalence and the class counts on B_k.

#ifndef TRICO_EQUIV_HPP
#define TRICO_EQUIV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "trico/chain_ring.hpp"

namespace trico {

class Binomial {
 public:
  /// Throws InvalidArgument unless b1, b0 are units of one ring and k > 0.
  Binomial(unsigned k, Element b1, Element b0);
  /// x^k + 1, the identity of the star group on B_k.
  static Binomial identity(const RingPtr& ring, unsigned k);

  unsigned k() const noexcept { return k_; }
  const Element& b1() const noexcept { return b1_; }
  const Element& b0() const noexcept { return b0_; }
  const ChainRing& ring() const { return b1_.ring(); }
  const RingPtr& ring_ptr() const noexcept { return b1_.ring_ptr(); }

  friend bool operator==(const Binomial& a, const Binomial& b) {
    return a.k_ == b.k_ && a.b1_ == b.b1_ && a.b0_ == b.b0_;
  }

 private:
  unsigned k_;
  Element b1_;
  Element b0_;
};

/// Order by (k, encode(b1), encode(b0)).
bool binomial_less(const Binomial& a, const Binomial& b);

/// Componentwise product; throws CrossDegreeRefusal on a degree mismatch.
Binomial star(const Binomial& a, const Binomial& b);
Binomial star_inv(const Binomial& a);
Binomial star_pow(const Binomial& a, std::int64_t e);

/// Witness a = b^(star p^l) scaled by alpha:
/// b1' alpha^(n-k) = a1 and b0' alpha^n = a0 with b' = b^(star p^l).
struct EquivalenceCertificate {
  Element alpha;
  unsigned l = 0;
};

/// Checks a certificate against its defining relations.
bool verify_certificate(const Binomial& a, const Binomial& b, unsigned n, const EquivalenceCertificate& cert);

/// Some alpha with b1 alpha^(n-k) = a1 and b0 alpha^n = a0, or nullopt.
/// Requires 0 < k < n and equal degrees (CrossDegreeRefusal otherwise).
std::optional<EquivalenceCertificate> n_equivalent(const Binomial& a, const Binomial& b, unsigned n,
                                                   std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// H_k = {alpha^(n-k) x^k + alpha^n}, sorted by binomial_less.
std::vector<Binomial> hk_subgroup(const RingPtr& ring, unsigned n, unsigned k,
                                  std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// The coset a * H_k, sorted.
std::vector<Binomial> equivalence_class(const Binomial& a, unsigned n,
                                        std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// Number of units of order p^l * u in a group with the given invariants;
/// u must divide the cyclic part. Zero when l exceeds m_J.
std::uint64_t ord_count(const UnitGroupDecomposition& dec, unsigned l, std::uint64_t u);

/// min(v_p(gcd(n, k)), m_J).
unsigned omega(const ChainRing& ring, unsigned n, unsigned k);

/// |ker theta| = #{alpha : alpha^n = alpha^(n-k) = 1}, summed over order types.
std::uint64_t kernel_size(const ChainRing& ring, unsigned n, unsigned k);
/// Same count by enumerating units.
std::uint64_t kernel_size_bruteforce(const ChainRing& ring, unsigned n, unsigned k,
                                     std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// |B_k / ~n| = |R^x| * |ker theta|.
std::uint64_t count_classes_k(const ChainRing& ring, unsigned n, unsigned k);
/// [B_k : H_k] with |H_k| found by enumerating alpha.
std::uint64_t count_classes_k_bruteforce(const RingPtr& ring, unsigned n, unsigned k,
                                         std::uint64_t bound = ChainRing::kDefaultUnitBound);
/// Sum of count_classes_k over 0 < k < n.
std::uint64_t count_classes_total(const ChainRing& ring, unsigned n);

/// Smallest member of every coset of H_k in B_k, in increasing order.
/// Throws BoundExceeded when |B_k| > bound.
std::vector<Binomial> class_representatives(const RingPtr& ring, unsigned n, unsigned k,
                                            std::uint64_t bound = std::uint64_t{1} << 22);

/// For gcd(n, k) = 1: alpha = a1^v a0^u (u n + v (n - k) = 1) when
/// a0^(n-k) = a1^n, certifying a ~n x^k + 1. Throws InvalidArgument otherwise.
std::optional<Element> equivalent_to_unital(const Binomial& a, unsigned n);

/// Degree-one isometry test. In characteristic p^m with m > 1 a certificate
/// exists exactly when a and b are n-isometric. In characteristic p the search
/// covers b^(star p^l) for p^l < n; a missing certificate proves the pair is
/// not isometric, a certificate with l > 0 only relates them by Frobenius.
std::optional<EquivalenceCertificate> isometry_b1_classify(const Binomial& a, const Binomial& b, unsigned n,
                                                           std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// alpha with a1 = alpha^(n-1), a0 = alpha^n; requires k = 1.
std::optional<Element> isometric_to_x_plus_1(const Binomial& a, unsigned n,
                                             std::uint64_t bound = ChainRing::kDefaultUnitBound);

}  // namespace trico

#endif  // TRICO_EQUIV_HPP
