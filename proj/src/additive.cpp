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

#include "trico/additive.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

namespace {

void check_bound(std::uint64_t order, std::uint64_t bound) {
  if (order > bound) {
    throw BoundExceeded("subgroup has " + std::to_string(order) + " elements, bound is " + std::to_string(bound));
  }
}

// x with x^(p^r') = x inside the Teichmuller set.
std::vector<Element> sub_teichmuller(const ChainRing& R, unsigned r_prime) {
  const std::uint64_t qp = num::ipow(R.p(), r_prime);
  std::vector<Element> out;
  for (const auto& x : R.teichmuller_set()) {
    if (x.pow(qp) == x) out.push_back(x);
  }
  return out;
}

// Presentation of the subring GR(p^m, r')[u]/<g(u), p^(m-1)u^t>.
ChainRing::Params subring_params(const ChainRing& R, unsigned r_prime) {
  ChainRing::Params P = R.params();
  P.r = r_prime;
  P.basic_irreducible.clear();
  for (auto& a : P.eisenstein) a.resize(1);
  return P;
}

}  // namespace

UnitSubgroup UnitSubgroup::teichmuller(const RingPtr& ring) { return UnitSubgroup(ring, SubgroupKind::Teichmuller); }

UnitSubgroup UnitSubgroup::subring_units(const RingPtr& ring, unsigned r_prime) {
  if (r_prime == 0 || ring->r() % r_prime != 0) throw InvalidArgument("r' must be a positive divisor of r");
  if (r_prime < ring->r()) {
    for (const auto& a : ring->params().eisenstein) {
      for (std::size_t i = 1; i < a.size(); ++i) {
        if (num::mod(a[i], ring->characteristic()) != 0) {
          throw InvalidArgument("subring units need rational-integer Eisenstein coefficients");
        }
      }
    }
  }
  return UnitSubgroup(ring, SubgroupKind::SubringUnits, r_prime);
}

UnitSubgroup UnitSubgroup::galois_units(const RingPtr& ring) { return UnitSubgroup(ring, SubgroupKind::GaloisUnits); }

UnitSubgroup UnitSubgroup::full(const RingPtr& ring) { return UnitSubgroup(ring, SubgroupKind::Full); }

UnitSubgroup UnitSubgroup::generated(const RingPtr& ring, const std::vector<Element>& gens, std::uint64_t bound) {
  std::set<std::uint64_t> seen{ring->encode(ring->one())};
  std::vector<Element> frontier{ring->one()};
  for (const auto& g : gens) {
    if (!g.ring().same_as(*ring)) throw RingMismatch();
    if (!g.is_unit()) throw InvalidArgument("subgroup generators must be units");
  }
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      for (const auto& g : gens) {
        const Element y = x * g;
        if (seen.insert(ring->encode(y)).second) {
          check_bound(seen.size(), bound);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  UnitSubgroup G(ring, SubgroupKind::Custom);
  for (const auto code : seen) G.custom_.push_back(ring->decode(code));
  std::sort(G.custom_.begin(), G.custom_.end(), encoded_less);
  return G;
}

UnitSubgroup UnitSubgroup::parse(const RingPtr& ring, std::string_view sel) {
  std::string s;
  for (const char c : sel) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s == "T") return teichmuller(ring);
  if (s == "full") return full(ring);
  if (s == "GR") return galois_units(ring);
  if (s == "S") return subring_units(ring, 1);
  const std::string head = "S:r'=";
  if (s.rfind(head, 0) == 0) {
    const std::string digits = s.substr(head.size());
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("expected a positive integer after \"S:r'=\"", head.size());
    }
    return subring_units(ring, static_cast<unsigned>(std::stoul(digits)));
  }
  throw ParseError("unknown subgroup selector '" + std::string(sel) + "' (use T, S:r'=<d>, GR or full)", 0);
}

std::string UnitSubgroup::label() const {
  switch (kind_) {
    case SubgroupKind::Teichmuller: return "T";
    case SubgroupKind::SubringUnits: return "S:r'=" + std::to_string(r_prime_);
    case SubgroupKind::GaloisUnits: return "GR";
    case SubgroupKind::Full: return "full";
    case SubgroupKind::Custom: return "custom";
  }
  return "";
}

std::uint64_t UnitSubgroup::order() const {
  const ChainRing& R = *ring_;
  switch (kind_) {
    case SubgroupKind::Teichmuller: return R.q() - 1;
    case SubgroupKind::SubringUnits: {
      const std::uint64_t qp = num::ipow(R.p(), r_prime_);
      return num::checked_mul(num::ipow(qp, R.s() - 1), qp - 1);
    }
    case SubgroupKind::GaloisUnits: return num::checked_mul(num::ipow(R.q(), R.m() - 1), R.q() - 1);
    case SubgroupKind::Full: return R.unit_count();
    case SubgroupKind::Custom: return custom_.size();
  }
  return 0;
}

bool UnitSubgroup::contains(const Element& a) const {
  const ChainRing& R = *ring_;
  if (!a.ring().same_as(R)) throw RingMismatch();
  if (!R.is_unit(a)) return false;
  switch (kind_) {
    case SubgroupKind::Teichmuller: return a.pow(R.q()) == a;
    case SubgroupKind::SubringUnits: {
      if (r_prime_ == R.r()) return true;
      const std::uint64_t qp = num::ipow(R.p(), r_prime_);
      const auto digits = R.teichmuller_digits(a);
      return std::all_of(digits.begin(), digits.end(), [&](const Element& d) { return d.pow(qp) == d; });
    }
    case SubgroupKind::GaloisUnits: {
      const auto c = a.coords();
      return std::all_of(c.begin() + R.r(), c.end(), [](std::int64_t v) { return v == 0; });
    }
    case SubgroupKind::Full: return true;
    case SubgroupKind::Custom: return std::binary_search(custom_.begin(), custom_.end(), a, encoded_less);
  }
  return false;
}

std::vector<Element> UnitSubgroup::elements(std::uint64_t bound) const {
  const ChainRing& R = *ring_;
  check_bound(order(), bound);
  std::vector<Element> out;
  switch (kind_) {
    case SubgroupKind::Teichmuller:
      for (const auto& x : R.teichmuller_set()) {
        if (!x.is_zero()) out.push_back(x);
      }
      break;
    case SubgroupKind::SubringUnits: {
      // Digit expansions sum xi_i gamma^i with xi_0 != 0.
      const auto T = sub_teichmuller(R, r_prime_);
      std::vector<std::size_t> idx(R.s(), 0);
      std::vector<Element> gpow{R.one()};
      for (unsigned i = 1; i < R.s(); ++i) gpow.push_back(gpow.back() * R.gamma());
      while (true) {
        if (!T[idx[0]].is_zero()) {
          Element x = R.zero();
          for (unsigned i = 0; i < R.s(); ++i) x += T[idx[i]] * gpow[i];
          out.push_back(x);
        }
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == T.size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
      break;
    }
    case SubgroupKind::GaloisUnits: {
      const std::int64_t mod = R.characteristic();
      std::vector<std::int64_t> c(R.coord_count(), 0);
      while (true) {
        const Element x = R.from_coords(c);
        if (R.is_unit(x)) out.push_back(x);
        unsigned i = 0;
        while (i < R.r() && ++c[i] == mod) c[i++] = 0;
        if (i == R.r()) break;
      }
      break;
    }
    case SubgroupKind::Full: out = R.units(bound); break;
    case SubgroupKind::Custom: out = custom_; break;
  }
  std::sort(out.begin(), out.end(), encoded_less);
  return out;
}

UnitGroupDecomposition UnitSubgroup::decomposition() const {
  const ChainRing& R = *ring_;
  switch (kind_) {
    case SubgroupKind::Teichmuller: return UnitGroupDecomposition{R.p(), {}, R.q() - 1};
    case SubgroupKind::SubringUnits:
      if (r_prime_ == R.r()) return R.unit_decomposition();
      return ChainRing::make(subring_params(R, r_prime_))->unit_decomposition();
    case SubgroupKind::GaloisUnits: {
      ChainRing::Params P = R.params();
      P.e = P.t = 1;
      P.eisenstein = {{1}};
      return ChainRing::make(P)->unit_decomposition();
    }
    case SubgroupKind::Full: return R.unit_decomposition();
    case SubgroupKind::Custom: return decompose_from_elements(custom_, R.p());
  }
  return {};
}

std::optional<Element> restricted_equivalent(const Binomial& a, const Binomial& b, unsigned n,
                                             const UnitSubgroup& G) {
  if (a.k() != b.k()) throw CrossDegreeRefusal(static_cast<int>(a.k()), static_cast<int>(b.k()));
  const unsigned k = a.k();
  if (k >= n) throw InvalidArgument("need 0 < k < n");
  if (!a.ring().same_as(G.ring()) || !b.ring().same_as(G.ring())) throw RingMismatch();
  for (const Element* c : {&a.b1(), &a.b0(), &b.b1(), &b.b0()}) {
    if (!G.contains(*c)) throw InvalidArgument("binomial coefficient is not in the subgroup " + G.label());
  }
  const ChainRing& R = G.ring();
  if (G.kind() == SubgroupKind::Teichmuller) {
    // Exponent arithmetic relative to xi in Z/(q-1).
    const std::int64_t N = static_cast<std::int64_t>(R.q() - 1);
    const GaloisField& F = R.residue_field();
    const Element xi = R.teichmuller_generator();
    const std::int64_t base_inv = num::inv_mod(F.log(R.residue(xi)), N);
    auto tlog = [&](const Element& x) { return num::mod(static_cast<std::int64_t>(F.log(R.residue(x))) * base_inv, N); };
    const std::int64_t d1 = num::mod(tlog(a.b1()) - tlog(b.b1()), N);
    const std::int64_t d0 = num::mod(tlog(a.b0()) - tlog(b.b0()), N);
    for (std::int64_t i = 0; i < N; ++i) {
      if (num::mod(static_cast<std::int64_t>(n - k) * i, N) == d1 && num::mod(static_cast<std::int64_t>(n) * i, N) == d0) {
        return xi.pow(static_cast<std::uint64_t>(i));
      }
    }
    return std::nullopt;
  }
  for (const auto& x : G.elements()) {
    if (b.b1() * x.pow(n - k) == a.b1() && b.b0() * x.pow(n) == a.b0()) return x;
  }
  return std::nullopt;
}

std::uint64_t hGk_size_teichmuller(const ChainRing& ring, unsigned n, unsigned k) {
  return (ring.q() - 1) / num::gcd3(ring.q() - 1, k, n);
}

namespace {

void check_witnesses(unsigned n, unsigned k, const UnitSubgroup& C, const UnitSubgroup& W) {
  if (k == 0 || k >= n) throw InvalidArgument("need 0 < k < n");
  if (!C.ring().same_as(W.ring())) throw RingMismatch();
  if (C.kind() == SubgroupKind::Full) return;
  if (W.kind() == SubgroupKind::Teichmuller && C.contains(W.ring().teichmuller_generator())) return;
  if (W.order() > (std::uint64_t{1} << 20)) throw BoundExceeded("cannot verify that W is a subgroup of C");
  for (const auto& x : W.elements()) {
    if (!C.contains(x)) throw InvalidArgument("witness group " + W.label() + " is not inside " + C.label());
  }
}

}  // namespace

std::uint64_t restricted_class_count(unsigned n, unsigned k, const UnitSubgroup& C, const UnitSubgroup& W) {
  check_witnesses(n, k, C, W);
  const auto dec = W.decomposition();
  const unsigned g = std::gcd(n, k);
  const unsigned w = std::min(num::valuation(g, W.ring().p()), dec.max_exponent());
  std::uint64_t ker = 0;
  for (unsigned l = 0; l <= w; ++l) {
    for (const auto u : num::divisors(std::gcd<std::uint64_t>(g, dec.cyclic_part))) ker += ord_count(dec, l, u);
  }
  const std::uint64_t h = W.order() / ker;
  return num::checked_mul(C.order(), C.order()) / h;
}

std::vector<Binomial> restricted_hk_subgroup(const UnitSubgroup& G, unsigned n, unsigned k, std::uint64_t bound) {
  if (k == 0 || k >= n) throw InvalidArgument("need 0 < k < n");
  const ChainRing& R = G.ring();
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& a : G.elements(bound)) seen.emplace(R.encode(a.pow(n - k)), R.encode(a.pow(n)));
  std::vector<Binomial> out;
  for (const auto& [x, y] : seen) out.emplace_back(k, R.decode(x), R.decode(y));
  return out;
}

std::uint64_t restricted_class_count_bruteforce(unsigned n, unsigned k, const UnitSubgroup& C,
                                                const UnitSubgroup& W, std::uint64_t bound) {
  check_witnesses(n, k, C, W);
  const std::uint64_t h = restricted_hk_subgroup(W, n, k, bound).size();
  return num::checked_mul(C.order(), C.order()) / h;
}

std::uint64_t restricted_coset_count(unsigned n, unsigned k, const UnitSubgroup& C, const UnitSubgroup& W,
                                     std::uint64_t bound) {
  check_witnesses(n, k, C, W);
  if (C.order() > bound / C.order()) throw BoundExceeded("|B_{C,k}| exceeds the coset bound");
  const auto els = C.elements(bound);
  const auto H = restricted_hk_subgroup(W, n, k, bound);
  const ChainRing& R = C.ring();
  std::vector<std::uint64_t> codes;
  codes.reserve(els.size());
  for (const auto& g : els) codes.push_back(R.encode(g));
  auto pos = [&](const Element& x) {
    return static_cast<std::size_t>(std::lower_bound(codes.begin(), codes.end(), R.encode(x)) - codes.begin());
  };
  const std::size_t c = els.size();
  std::vector<char> seen(c * c, 0);
  std::uint64_t classes = 0;
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (seen[i * c + j]) continue;
      ++classes;
      for (const auto& h : H) {
        const Binomial b = star(Binomial(k, els[i], els[j]), h);
        seen[pos(b.b1()) * c + pos(b.b0())] = 1;
      }
    }
  }
  return classes;
}

}  // namespace trico
