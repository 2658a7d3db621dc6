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

#include "trico/equiv.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

Binomial::Binomial(unsigned k, Element b1, Element b0) : k_(k), b1_(std::move(b1)), b0_(std::move(b0)) {
  if (k_ == 0) throw InvalidArgument("binomial degree must be positive");
  if (!b1_.attached() || !b0_.attached() || !b1_.ring().same_as(b0_.ring())) throw RingMismatch();
  if (!b1_.is_unit() || !b0_.is_unit()) throw InvalidArgument("binomial coefficients must be units");
}

Binomial Binomial::identity(const RingPtr& ring, unsigned k) { return Binomial(k, ring->one(), ring->one()); }

bool binomial_less(const Binomial& a, const Binomial& b) {
  if (a.k() != b.k()) return a.k() < b.k();
  const auto& R = a.ring();
  const auto x = R.encode(a.b1()), y = R.encode(b.b1());
  if (x != y) return x < y;
  return R.encode(a.b0()) < R.encode(b.b0());
}

namespace {

void check_same(const Binomial& a, const Binomial& b) {
  if (a.k() != b.k()) throw CrossDegreeRefusal(static_cast<int>(a.k()), static_cast<int>(b.k()));
  if (!a.ring().same_as(b.ring())) throw RingMismatch();
}

void check_degree(unsigned n, unsigned k) {
  if (k == 0 || k >= n) throw InvalidArgument("need 0 < k < n");
}

void check_unit_bound(const ChainRing& R, std::uint64_t bound) {
  if (R.unit_count() > bound) {
    throw BoundExceeded("ring has " + std::to_string(R.unit_count()) + " units, bound is " + std::to_string(bound));
  }
}

// Calls fn on every unit until it returns true.
template <typename Fn>
bool find_unit(const ChainRing& R, std::uint64_t bound, Fn&& fn) {
  check_unit_bound(R, bound);
  for (std::uint64_t i = 0; i < R.cardinality(); ++i) {
    const Element a = R.decode(i);
    if (R.is_unit(a) && fn(a)) return true;
  }
  return false;
}

// Solves alpha^(n-k) = c1, alpha^n = c0.
std::optional<Element> solve_alpha(const Element& c1, const Element& c0, unsigned n, unsigned k,
                                   std::uint64_t bound) {
  const ChainRing& R = c1.ring();
  if (std::gcd(n, k) == 1) {
    // Bezout: x n + y (n-k) = 1 pins alpha = c0^x c1^y.
    const auto bz = num::ext_gcd(n, n - k);
    const Element alpha = R.pow_signed(c0, bz.x) * R.pow_signed(c1, bz.y);
    if (alpha.pow(n - k) == c1 && alpha.pow(n) == c0) return alpha;
    return std::nullopt;
  }
  std::optional<Element> out;
  find_unit(R, bound, [&](const Element& a) {
    if (a.pow(n) == c0 && a.pow(n - k) == c1) {
      out = a;
      return true;
    }
    return false;
  });
  return out;
}

}  // namespace

Binomial star(const Binomial& a, const Binomial& b) {
  check_same(a, b);
  return Binomial(a.k(), a.b1() * b.b1(), a.b0() * b.b0());
}

Binomial star_inv(const Binomial& a) { return Binomial(a.k(), a.b1().inverse(), a.b0().inverse()); }

Binomial star_pow(const Binomial& a, std::int64_t e) {
  const auto& R = a.ring();
  return Binomial(a.k(), R.pow_signed(a.b1(), e), R.pow_signed(a.b0(), e));
}

bool verify_certificate(const Binomial& a, const Binomial& b, unsigned n, const EquivalenceCertificate& cert) {
  check_same(a, b);
  if (!cert.alpha.attached() || !cert.alpha.is_unit()) return false;
  const Binomial bl = star_pow(b, static_cast<std::int64_t>(num::ipow(a.ring().p(), cert.l)));
  return bl.b1() * cert.alpha.pow(n - a.k()) == a.b1() && bl.b0() * cert.alpha.pow(n) == a.b0();
}

std::optional<EquivalenceCertificate> n_equivalent(const Binomial& a, const Binomial& b, unsigned n,
                                                   std::uint64_t bound) {
  check_same(a, b);
  check_degree(n, a.k());
  const Binomial c = star(a, star_inv(b));
  const auto alpha = solve_alpha(c.b1(), c.b0(), n, a.k(), bound);
  if (!alpha) return std::nullopt;
  return EquivalenceCertificate{*alpha, 0};
}

namespace {

// Encoded (alpha^(n-k), alpha^n) over all units, sorted and deduplicated.
std::vector<std::pair<std::uint64_t, std::uint64_t>> hk_pairs(const ChainRing& ring, unsigned n, unsigned k,
                                                              std::uint64_t bound) {
  check_degree(n, k);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  find_unit(ring, bound, [&](const Element& a) {
    const Element a1 = a.pow(n - k);
    pairs.emplace_back(ring.encode(a1), ring.encode(a1 * a.pow(k)));
    return false;
  });
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

}  // namespace

std::vector<Binomial> hk_subgroup(const RingPtr& ring, unsigned n, unsigned k, std::uint64_t bound) {
  std::vector<Binomial> out;
  for (const auto& [x, y] : hk_pairs(*ring, n, k, bound)) out.emplace_back(k, ring->decode(x), ring->decode(y));
  return out;
}

std::vector<Binomial> equivalence_class(const Binomial& a, unsigned n, std::uint64_t bound) {
  std::vector<Binomial> out;
  for (const auto& h : hk_subgroup(a.ring_ptr(), n, a.k(), bound)) out.push_back(star(a, h));
  std::sort(out.begin(), out.end(), binomial_less);
  return out;
}

std::uint64_t ord_count(const UnitGroupDecomposition& dec, unsigned l, std::uint64_t u) {
  if (u == 0 || dec.cyclic_part % u != 0) throw InvalidArgument("u must divide the cyclic part");
  const std::uint64_t phi_u = num::totient(u);
  if (l == 0) return phi_u;
  if (l > dec.max_exponent()) return 0;
  // Tuples (t_j) with t_j <= min(l, m_j), minus those with every t_j < l.
  unsigned upto = 0, below = 0;
  for (const unsigned mj : dec.exponents) {
    upto += std::min(l, mj);
    below += std::min(l - 1, mj);
  }
  return num::checked_mul(phi_u, num::ipow(dec.p, upto) - num::ipow(dec.p, below));
}

unsigned omega(const ChainRing& ring, unsigned n, unsigned k) {
  const unsigned g = std::gcd(n, k);
  if (g == 0) throw InvalidArgument("n and k cannot both be zero");
  return std::min(num::valuation(g, ring.p()), ring.unit_decomposition().max_exponent());
}

std::uint64_t kernel_size(const ChainRing& ring, unsigned n, unsigned k) {
  check_degree(n, k);
  const auto dec = ring.unit_decomposition();
  const unsigned w = omega(ring, n, k);
  const std::uint64_t g = num::gcd3(n, k, ring.q() - 1);
  std::uint64_t total = 0;
  for (unsigned l = 0; l <= w; ++l) {
    for (const auto u : num::divisors(g)) total += ord_count(dec, l, u);
  }
  return total;
}

std::uint64_t kernel_size_bruteforce(const ChainRing& ring, unsigned n, unsigned k, std::uint64_t bound) {
  check_degree(n, k);
  std::uint64_t count = 0;
  find_unit(ring, bound, [&](const Element& a) {
    const Element a1 = a.pow(n - k);
    if (a1.is_one() && (a1 * a.pow(k)).is_one()) ++count;
    return false;
  });
  return count;
}

std::uint64_t count_classes_k(const ChainRing& ring, unsigned n, unsigned k) {
  return num::checked_mul(ring.unit_count(), kernel_size(ring, n, k));
}

std::uint64_t count_classes_k_bruteforce(const RingPtr& ring, unsigned n, unsigned k, std::uint64_t bound) {
  const std::uint64_t h = hk_pairs(*ring, n, k, bound).size();
  const std::uint64_t u = ring->unit_count();
  return num::checked_mul(u, u) / h;
}

std::uint64_t count_classes_total(const ChainRing& ring, unsigned n) {
  if (n < 2) throw InvalidArgument("n must be at least 2");
  std::uint64_t total = 0;
  for (unsigned k = 1; k < n; ++k) total += count_classes_k(ring, n, k);
  return total;
}

std::vector<Binomial> class_representatives(const RingPtr& ring, unsigned n, unsigned k, std::uint64_t bound) {
  check_degree(n, k);
  const std::uint64_t u = ring->unit_count();
  if (u > bound || num::checked_mul(u, u) > bound) {
    throw BoundExceeded("B_k has " + std::to_string(u) + "^2 elements, bound is " + std::to_string(bound));
  }
  std::vector<Element> units = ring->units(bound);
  std::sort(units.begin(), units.end(), encoded_less);
  std::unordered_map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < units.size(); ++i) pos[ring->encode(units[i])] = i;
  std::vector<std::pair<std::size_t, std::size_t>> H;
  for (const auto& h : hk_subgroup(ring, n, k, bound)) H.emplace_back(pos.at(ring->encode(h.b1())), pos.at(ring->encode(h.b0())));

  std::vector<char> seen(units.size() * units.size(), 0);
  std::vector<Binomial> out;
  for (std::size_t i = 0; i < units.size(); ++i) {
    for (std::size_t j = 0; j < units.size(); ++j) {
      if (seen[i * units.size() + j]) continue;
      out.emplace_back(k, units[i], units[j]);
      for (const auto& [h1, h0] : H) {
        const std::size_t x = pos.at(ring->encode(units[i] * units[h1]));
        const std::size_t y = pos.at(ring->encode(units[j] * units[h0]));
        seen[x * units.size() + y] = 1;
      }
    }
  }
  return out;
}

std::optional<Element> equivalent_to_unital(const Binomial& a, unsigned n) {
  check_degree(n, a.k());
  if (std::gcd(n, a.k()) != 1) throw InvalidArgument("gcd(n, k) must be 1");
  const unsigned k = a.k();
  if (!(a.b0().pow(n - k) == a.b1().pow(n))) return std::nullopt;
  const auto bz = num::ext_gcd(n, n - k);
  const auto& R = a.ring();
  const Element alpha = R.pow_signed(a.b1(), bz.y) * R.pow_signed(a.b0(), bz.x);
  if (!(alpha.pow(n - k) == a.b1() && alpha.pow(n) == a.b0())) throw Error("internal: Bezout witness failed");
  return alpha;
}

std::optional<EquivalenceCertificate> isometry_b1_classify(const Binomial& a, const Binomial& b, unsigned n,
                                                           std::uint64_t bound) {
  if (a.k() != 1 || b.k() != 1) throw InvalidArgument("isometry classification is for degree-one binomials");
  if (a.ring().m() > 1) return n_equivalent(a, b, n, bound);
  const std::uint64_t p = a.ring().p();
  std::uint64_t pl = 1;
  for (unsigned l = 0; pl < n; ++l, pl *= p) {
    if (auto cert = n_equivalent(a, star_pow(b, static_cast<std::int64_t>(pl)), n, bound)) {
      cert->l = l;
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<Element> isometric_to_x_plus_1(const Binomial& a, unsigned n, std::uint64_t bound) {
  if (a.k() != 1) throw InvalidArgument("need a degree-one binomial");
  auto cert = n_equivalent(a, Binomial::identity(a.ring_ptr(), 1), n, bound);
  if (!cert) return std::nullopt;
  return cert->alpha;
}

}  // namespace trico
