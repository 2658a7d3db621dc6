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

// Equivalence of binomials restricted to a subgroup G of R^x: coefficients
// and witnesses alpha are drawn from G instead of all units.

#ifndef TRICO_ADDITIVE_HPP
#define TRICO_ADDITIVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trico/equiv.hpp"

namespace trico {

enum class SubgroupKind {
  Teichmuller,    // T^*, cyclic of order p^r - 1
  SubringUnits,   // units of GR(p^m, r')[u]/<g(u), p^(m-1) u^t>, r' | r
  GaloisUnits,    // GR(p^m, r)^x, the u-free part of R
  Full,           // R^x
  Custom,         // generated by explicit units
};

class UnitSubgroup {
 public:
  static UnitSubgroup teichmuller(const RingPtr& ring);
  /// Throws InvalidArgument when r' does not divide r, or when r' < r and
  /// the Eisenstein coefficients are not rational integers.
  static UnitSubgroup subring_units(const RingPtr& ring, unsigned r_prime);
  static UnitSubgroup galois_units(const RingPtr& ring);
  static UnitSubgroup full(const RingPtr& ring);
  /// Closure of the given units under multiplication; |G| <= bound.
  static UnitSubgroup generated(const RingPtr& ring, const std::vector<Element>& gens,
                                std::uint64_t bound = std::uint64_t{1} << 20);
  /// Selector text: "T", "S:r'=<d>", "GR", "full".
  static UnitSubgroup parse(const RingPtr& ring, std::string_view selector);

  SubgroupKind kind() const noexcept { return kind_; }
  const ChainRing& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  unsigned r_prime() const noexcept { return r_prime_; }
  std::string label() const;

  std::uint64_t order() const;
  bool contains(const Element& a) const;
  /// Sorted by encoded_less; throws BoundExceeded when |G| > bound.
  std::vector<Element> elements(std::uint64_t bound = ChainRing::kDefaultUnitBound) const;
  /// Abelian invariants of G.
  UnitGroupDecomposition decomposition() const;

 private:
  UnitSubgroup(RingPtr ring, SubgroupKind kind, unsigned r_prime = 0)
      : ring_(std::move(ring)), kind_(kind), r_prime_(r_prime) {}

  RingPtr ring_;
  SubgroupKind kind_;
  unsigned r_prime_;
  std::vector<Element> custom_;  // sorted, Custom only
};

/// Some alpha in G with b1 alpha^(n-k) = a1 and b0 alpha^n = a0. The
/// coefficients of a and b must lie in G (InvalidArgument otherwise).
std::optional<Element> restricted_equivalent(const Binomial& a, const Binomial& b, unsigned n,
                                             const UnitSubgroup& G);

/// (p^r - 1) / gcd(p^r - 1, k, n).
std::uint64_t hGk_size_teichmuller(const ChainRing& ring, unsigned n, unsigned k);

/// Classes on B_{C,k} (coefficients in C) under witnesses from W, with
/// W a subgroup of C: |C|^2 |ker_W| / |W|, kernels from the invariants of W.
std::uint64_t restricted_class_count(unsigned n, unsigned k, const UnitSubgroup& coefficients,
                                     const UnitSubgroup& witnesses);
inline std::uint64_t restricted_class_count(unsigned n, unsigned k, const UnitSubgroup& G) {
  return restricted_class_count(n, k, G, G);
}
/// Same count with |H_{W,k}| found by enumerating W.
std::uint64_t restricted_class_count_bruteforce(unsigned n, unsigned k, const UnitSubgroup& coefficients,
                                                const UnitSubgroup& witnesses,
                                                std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// Same count by marking every coset of H_{W,k} in C x C; |C|^2 <= bound.
std::uint64_t restricted_coset_count(unsigned n, unsigned k, const UnitSubgroup& coefficients,
                                     const UnitSubgroup& witnesses, std::uint64_t bound = std::uint64_t{1} << 22);

/// H_{G,k} = {alpha^(n-k) x^k + alpha^n : alpha in G}, sorted.
std::vector<Binomial> restricted_hk_subgroup(const UnitSubgroup& G, unsigned n, unsigned k,
                                             std::uint64_t bound = ChainRing::kDefaultUnitBound);

/// Shorthand for UnitSubgroup::subring_units.
inline UnitSubgroup subring_unit_group(const RingPtr& ring, unsigned r_prime) {
  return UnitSubgroup::subring_units(ring, r_prime);
}

}  // namespace trico

#endif  // TRICO_ADDITIVE_HPP
