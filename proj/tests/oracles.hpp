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

// Brute-force reference implementations used only by the tests. They favour
// obviousness over speed and share no code with the library algorithms.

#ifndef TRICO_TESTS_ORACLES_HPP
#define TRICO_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "trico/galois_field.hpp"

namespace oracle {

class Lcg {
 public:
  explicit Lcg(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(gen_); }

 private:
  std::mt19937_64 gen_;
};

// F_p[w]/<h> with schoolbook multiplication; elements use the same base-p
// digit encoding as trico::GaloisField.
class NaiveField {
 public:
  NaiveField(std::uint32_t p, std::vector<std::uint32_t> low) : p_(p), low_(std::move(low)) {}

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(low_.size());
    for (auto& c : d) {
      c = a % p_;
      a /= p_;
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::uint32_t a = 0;
    for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
    return a;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto x = digits(a), y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return encode(x);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = digits(a), y = digits(b);
    const std::size_t r = low_.size();
    std::vector<std::uint64_t> prod(2 * r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    for (std::size_t d = 2 * r - 1; d >= r; --d) {
      const auto c = prod[d];
      prod[d] = 0;
      for (std::size_t i = 0; i < r; ++i) prod[d - r + i] = (prod[d - r + i] + (p_ - low_[i]) * c) % p_;
    }
    std::vector<std::uint32_t> out(r);
    for (std::size_t i = 0; i < r; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return encode(out);
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> low_;
};

// Irreducibility by trial division with every monic polynomial of degree
// 1..deg/2.
inline bool field_poly_irreducible(const trico::GaloisField& F, const trico::FieldPoly& f) {
  const int n = trico::fpoly::degree(f);
  if (n <= 0) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F.order();
    for (std::uint64_t code = 0; code < count; ++code) {
      trico::FieldPoly g(static_cast<std::size_t>(d) + 1);
      std::uint64_t c = code;
      for (int i = 0; i < d; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<trico::GaloisField::Elem>(c % F.order());
        c /= F.order();
      }
      g.back() = 1;
      if (trico::fpoly::rem(F, f, g).empty()) return false;
    }
  }
  return true;
}

// Least e >= 1 with x^e = 1 mod f, by stepping through the powers of x.
inline std::uint64_t field_poly_order(const trico::GaloisField& F, const trico::FieldPoly& f) {
  const trico::FieldPoly x{0, 1};
  const trico::FieldPoly one = trico::fpoly::rem(F, trico::FieldPoly{1}, f);
  trico::FieldPoly cur = trico::fpoly::rem(F, x, f);
  for (std::uint64_t e = 1; e < 100000000; ++e) {
    if (cur == one) return e;
    cur = trico::fpoly::rem(F, trico::fpoly::mul(F, cur, x), f);
  }
  return 0;
}

// Number of elements of each order in Z_{n_1} x ... x Z_{n_k}, by listing
// every tuple.
inline std::map<std::uint64_t, std::uint64_t> order_histogram(const std::vector<std::uint64_t>& moduli) {
  std::map<std::uint64_t, std::uint64_t> out;
  std::vector<std::uint64_t> x(moduli.size(), 0);
  for (;;) {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < x.size(); ++i) ord = std::lcm(ord, moduli[i] / std::gcd(moduli[i], x[i]));
    ++out[ord];
    std::size_t i = 0;
    while (i < x.size() && ++x[i] == moduli[i]) x[i++] = 0;
    if (i == x.size()) break;
  }
  return out;
}

// Determinant by Gaussian elimination over the field.
inline trico::GaloisField::Elem field_det(const trico::GaloisField& F,
                                          std::vector<std::vector<trico::GaloisField::Elem>> m) {
  const std::size_t n = m.size();
  trico::GaloisField::Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    const auto inv = F.inv(m[col][col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const auto factor = F.mul(m[row][col], inv);
      for (std::size_t j = col; j < n; ++j) m[row][j] = F.sub(m[row][j], F.mul(factor, m[col][j]));
    }
  }
  return det;
}

// Sylvester resultant of f (degree n) and g (formal degree dg).
inline trico::GaloisField::Elem sylvester_resultant(const trico::GaloisField& F, const trico::FieldPoly& f,
                                                    std::size_t n, const trico::FieldPoly& g, std::size_t dg) {
  const std::size_t size = n + dg;
  std::vector<std::vector<trico::GaloisField::Elem>> m(size, std::vector<trico::GaloisField::Elem>(size, 0));
  auto at = [](const trico::FieldPoly& p, std::size_t i) -> trico::GaloisField::Elem {
    return i < p.size() ? p[i] : 0;
  };
  for (std::size_t row = 0; row < dg; ++row)
    for (std::size_t i = 0; i <= n; ++i) m[row][row + i] = at(f, n - i);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= dg; ++i) m[dg + row][row + i] = at(g, dg - i);
  return field_det(F, m);
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') for monic f of degree n.
inline trico::GaloisField::Elem trinomial_disc_by_resultant(const trico::GaloisField& F, unsigned n, unsigned k,
                                                            trico::GaloisField::Elem a, trico::GaloisField::Elem b) {
  trico::FieldPoly f(n + 1, 0), df(n, 0);
  f[n] = 1;
  f[k] = F.add(f[k], a);
  f[0] = F.add(f[0], b);
  for (unsigned i = 1; i <= n; ++i) df[i - 1] = F.mul(f[i], F.from_int(i));
  auto res = sylvester_resultant(F, f, n, df, n - 1);
  if ((static_cast<unsigned long>(n) * (n - 1) / 2) % 2 == 1) res = F.neg(res);
  return res;
}

}  // namespace oracle

#endif  // TRICO_TESTS_ORACLES_HPP
