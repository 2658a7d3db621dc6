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

#include "trico/galois_field.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

namespace {

using Digits = std::vector<std::uint32_t>;

// (a * b) mod (w^r + low) over F_p, digit vectors of length r.
Digits mulmod_digits(const Digits& a, const Digits& b, std::span<const std::uint32_t> low,
                     std::uint32_t p) {
  const std::size_t r = low.size();
  std::vector<std::uint64_t> prod(2 * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t d = 2 * r; d-- > r;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (std::size_t i = 0; i < r; ++i) prod[d - r + i] = (prod[d - r + i] + (p - low[i]) * c) % p;
  }
  return Digits(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(r));
}

Digits powmod_digits(Digits base, std::uint64_t e, std::span<const std::uint32_t> low, std::uint32_t p) {
  Digits result(low.size(), 0);
  result[0] = 1;
  while (e > 0) {
    if (e & 1) result = mulmod_digits(result, base, low, p);
    base = mulmod_digits(base, base, low, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const Digits& d) {
  if (d[0] != 1) return false;
  return std::all_of(d.begin() + 1, d.end(), [](std::uint32_t x) { return x == 0; });
}

// Order of the class of w in F_p[w]/<h> equals p^r - 1 (h assumed irreducible).
bool w_is_primitive(std::uint32_t p, std::span<const std::uint32_t> low) {
  const std::size_t r = low.size();
  const std::uint64_t n = num::ipow(p, r) - 1;
  Digits w(r, 0);
  if (r == 1) {
    w[0] = (p - low[0]) % p;
  } else {
    w[1] = 1;
  }
  if (!is_one(powmod_digits(w, n, low, p))) return false;
  for (auto [l, k] : num::factorize(n)) {
    (void)k;
    if (is_one(powmod_digits(w, n / l, low, p))) return false;
  }
  return true;
}

}  // namespace

bool GaloisField::is_irreducible(std::uint32_t p, std::span<const std::uint32_t> low) {
  const std::size_t r = low.size();
  if (r <= 1) return true;
  // Trial division by every monic polynomial of degree 1..r/2.
  for (std::size_t d = 1; d <= r / 2; ++d) {
    const std::uint64_t count = num::ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> div(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      div[d] = 1;
      std::vector<std::uint32_t> rem(low.begin(), low.end());
      rem.push_back(1);
      for (std::size_t top = r; top >= d; --top) {
        const std::uint32_t lead = rem[top];
        if (lead != 0) {
          for (std::size_t i = 0; i <= d; ++i) {
            const std::size_t idx = top - d + i;
            rem[idx] = static_cast<std::uint32_t>((rem[idx] + std::uint64_t{p - div[i]} * lead) % p);
          }
        }
        if (top == d) break;
      }
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> GaloisField::default_modulus(std::uint32_t p, unsigned r) {
  if (r == 1) return {0};
  const std::uint64_t count = num::ipow(p, r);
  for (std::uint64_t code = 1; code < count; ++code) {
    std::vector<std::uint32_t> low(r);
    std::uint64_t c = code;
    for (unsigned i = 0; i < r; ++i) {
      low[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (low[0] == 0) continue;
    if (is_irreducible(p, low) && w_is_primitive(p, low)) return low;
  }
  throw InvalidArgument("no primitive polynomial found");  // unreachable for valid p, r
}

GaloisField GaloisField::standard(std::uint32_t p, unsigned r) {
  return GaloisField(p, r, default_modulus(p, r));
}

GaloisField::GaloisField(std::uint32_t p, unsigned r, std::vector<std::uint32_t> modulus)
    : p_(p), r_(r), modulus_(std::move(modulus)) {
  if (!num::is_prime(p)) throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
  if (r == 0) throw InvalidArgument("field degree must be positive");
  if (modulus_.size() != r) throw InvalidArgument("field modulus must have r low coefficients");
  for (auto& c : modulus_) c %= p;
  const std::uint64_t q = num::ipow(p, r);
  if (q > kMaxOrder) throw BoundExceeded("residue field order exceeds 2^20");
  q_ = static_cast<std::uint32_t>(q);
  if (!is_irreducible(p, modulus_)) throw InvalidArgument("field modulus is reducible over F_p");
  pow_p_.resize(r + 1);
  pow_p_[0] = 1;
  for (unsigned i = 1; i <= r; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  // Find a primitive element, then tabulate its powers.
  const auto factors = num::factorize(q_ - 1);
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };
  generator_ = 0;
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto [l, k] : factors) {
      (void)k;
      if (slow_pow(g, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }
  if (q_ == 2) generator_ = 1;
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = i;
    x = slow_mul(x, generator_);
  }
}

GaloisField::Elem GaloisField::slow_mul(Elem a, Elem b) const {
  return from_digits([&] {
    const auto prod = mulmod_digits(digits(a), digits(b), modulus_, p_);
    return std::vector<std::int64_t>(prod.begin(), prod.end());
  }());
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
  std::vector<std::uint32_t> out(r_);
  for (unsigned i = 0; i < r_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::from_digits(std::span<const std::int64_t> coeffs) const {
  Elem out = 0;
  for (unsigned i = 0; i < r_ && i < coeffs.size(); ++i) {
    out += static_cast<Elem>(num::mod(coeffs[i], p_)) * pow_p_[i];
  }
  return out;
}

GaloisField::Elem GaloisField::from_int(std::int64_t v) const {
  return static_cast<Elem>(num::mod(v, p_));
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (r_ == 1) return (a + b) % p_;
  Elem out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((a % p_ + b % p_) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  Elem out = 0;
  for (unsigned i = 0; i < r_; ++i) {
    out += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return out;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  const std::uint32_t s = log_[a] + log_[b];
  return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw NotAUnit();
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::log(Elem a) const {
  if (a == 0) throw NotAUnit();
  return log_[a];
}

// ---------------------------------------------------------------------------

namespace fpoly {

int degree(const FieldPoly& f) { return static_cast<int>(f.size()) - 1; }

void trim(FieldPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FieldPoly monic(const GaloisField& F, FieldPoly f) {
  trim(f);
  if (f.empty() || f.back() == 1) return f;
  return scale(F, f, F.inv(f.back()));
}

FieldPoly add(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = F.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

FieldPoly sub(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  trim(out);
  return out;
}

FieldPoly mul(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) {
  if (a.empty() || b.empty()) return {};
  FieldPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

FieldPoly scale(const GaloisField& F, const FieldPoly& a, GaloisField::Elem c) {
  FieldPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = F.mul(a[i], c);
  trim(out);
  return out;
}

std::pair<FieldPoly, FieldPoly> divmod(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) {
  if (b.empty()) throw InvalidArgument("polynomial division by zero");
  FieldPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  FieldPoly q(r.size() - b.size() + 1, 0);
  const auto lead_inv = F.inv(b.back());
  for (std::size_t top = r.size(); top-- >= b.size();) {
    const auto c = F.mul(r[top], lead_inv);
    q[top - (b.size() - 1)] = c;
    if (c != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t idx = top - (b.size() - 1) + i;
        r[idx] = F.sub(r[idx], F.mul(c, b[i]));
      }
    }
    if (top == b.size() - 1) break;
  }
  trim(q);
  trim(r);
  return {q, r};
}

FieldPoly rem(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) { return divmod(F, a, b).second; }

FieldPoly derivative(const GaloisField& F, const FieldPoly& a) {
  if (a.size() <= 1) return {};
  FieldPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = F.mul(F.from_int(static_cast<std::int64_t>(i)), a[i]);
  trim(out);
  return out;
}

FieldPoly powmod(const GaloisField& F, FieldPoly base, std::uint64_t e, const FieldPoly& m) {
  FieldPoly result = rem(F, FieldPoly{1}, m);
  base = rem(F, base, m);
  while (e > 0) {
    if (e & 1) result = rem(F, mul(F, result, base), m);
    e >>= 1;
    if (e > 0) base = rem(F, mul(F, base, base), m);
  }
  return result;
}

FieldPoly gcd(const GaloisField& F, FieldPoly a, FieldPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

Bezout ext_gcd(const GaloisField& F, const FieldPoly& a, const FieldPoly& b) {
  FieldPoly old_r = a, r = b, old_s{1}, s{}, old_t{}, t{1};
  trim(old_r);
  trim(r);
  while (!r.empty()) {
    auto [q, rr] = divmod(F, old_r, r);
    old_r = std::exchange(r, rr);
    auto ns = sub(F, old_s, mul(F, q, s));
    old_s = std::exchange(s, ns);
    auto nt = sub(F, old_t, mul(F, q, t));
    old_t = std::exchange(t, nt);
  }
  if (old_r.empty()) return {{}, {}, {}};
  const auto c = F.inv(old_r.back());
  return {scale(F, old_r, c), scale(F, old_s, c), scale(F, old_t, c)};
}

bool is_squarefree(const GaloisField& F, const FieldPoly& f) {
  if (degree(f) <= 0) return true;
  return degree(gcd(F, f, derivative(F, f))) == 0;
}

namespace {

// Inverse Frobenius on a polynomial whose exponents are all multiples of p.
FieldPoly pth_root(const GaloisField& F, const FieldPoly& f) {
  const std::uint32_t p = F.p();
  FieldPoly out((f.size() - 1) / p + 1, 0);
  const std::uint64_t root_exp = num::ipow(p, F.r() - 1);
  for (std::size_t i = 0; i < f.size(); i += p) out[i / p] = F.pow(f[i], root_exp);
  trim(out);
  return out;
}

void squarefree_decomposition(const GaloisField& F, const FieldPoly& f, unsigned mult,
                              std::vector<std::pair<FieldPoly, unsigned>>& out) {
  FieldPoly c = gcd(F, f, derivative(F, f));
  FieldPoly w = divmod(F, f, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    FieldPoly y = gcd(F, w, c);
    FieldPoly fac = divmod(F, w, y).first;
    if (degree(fac) > 0) out.emplace_back(monic(F, fac), i * mult);
    w = std::move(y);
    c = divmod(F, c, w).first;
    ++i;
  }
  if (degree(c) > 0) squarefree_decomposition(F, monic(F, pth_root(F, c)), mult * F.p(), out);
}

// Splits a squarefree monic f into products of irreducibles of equal degree.
std::vector<std::pair<FieldPoly, unsigned>> distinct_degree(const GaloisField& F, FieldPoly f) {
  std::vector<std::pair<FieldPoly, unsigned>> out;
  const FieldPoly x{0, 1};
  FieldPoly h = rem(F, x, f);
  unsigned d = 1;
  while (degree(f) >= 2 * static_cast<int>(d)) {
    h = powmod(F, h, F.order(), f);
    FieldPoly g = gcd(F, f, sub(F, h, x));
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      f = divmod(F, f, g).first;
      h = rem(F, h, f);
    }
    ++d;
  }
  if (degree(f) > 0) out.emplace_back(monic(F, f), static_cast<unsigned>(degree(f)));
  return out;
}

void equal_degree(const GaloisField& F, const FieldPoly& f, unsigned d, std::mt19937_64& rng,
                  std::vector<FieldPoly>& out) {
  const int n = degree(f);
  if (n == static_cast<int>(d)) {
    out.push_back(f);
    return;
  }
  std::uniform_int_distribution<std::uint32_t> coeff(0, F.order() - 1);
  const std::uint64_t q = F.order();
  for (;;) {
    FieldPoly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    FieldPoly b;
    if (F.p() == 2) {
      // Absolute trace map a + a^2 + ... + a^(2^(r d - 1)).
      FieldPoly term = a;
      b = a;
      for (unsigned i = 1; i < F.r() * d; ++i) {
        term = rem(F, mul(F, term, term), f);
        b = add(F, b, term);
      }
    } else {
      // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2).
      FieldPoly norm = a, frob = a;
      for (unsigned i = 1; i < d; ++i) {
        frob = powmod(F, frob, q, f);
        norm = rem(F, mul(F, norm, frob), f);
      }
      b = sub(F, powmod(F, norm, (q - 1) / 2, f), FieldPoly{1});
    }
    FieldPoly g = gcd(F, f, b);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(F, g, d, rng, out);
      equal_degree(F, monic(F, divmod(F, f, g).first), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FieldPoly, unsigned>> factor(const GaloisField& F, const FieldPoly& f, std::uint64_t seed) {
  FieldPoly g = f;
  trim(g);
  if (g.empty()) throw InvalidArgument("cannot factor the zero polynomial");
  std::vector<std::pair<FieldPoly, unsigned>> out;
  if (degree(g) == 0) return out;
  std::vector<std::pair<FieldPoly, unsigned>> sqf;
  squarefree_decomposition(F, monic(F, g), 1, sqf);
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : sqf) {
    for (const auto& [block, d] : distinct_degree(F, part)) {
      std::vector<FieldPoly> irreducibles;
      equal_degree(F, block, d, rng, irreducibles);
      for (auto& h : irreducibles) out.emplace_back(monic(F, h), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(), b.first.rend());
  });
  return out;
}

bool is_irreducible(const GaloisField& F, const FieldPoly& f) {
  if (degree(f) <= 0) return false;
  const auto fac = factor(F, f);
  return fac.size() == 1 && fac[0].second == 1;
}

std::uint64_t order(const GaloisField& F, const FieldPoly& f) {
  FieldPoly g = monic(F, f);
  if (g.empty() || g[0] == 0) throw InvalidArgument("polynomial order requires f(0) != 0");
  if (degree(g) == 0) return 1;
  // Exponent of (F[x]/f)^*: lcm of q^d - 1 over irreducible factors,
  // times the least power of p covering the largest multiplicity.
  std::uint64_t n = 1;
  unsigned max_mult = 1;
  for (const auto& [h, mult] : factor(F, g)) {
    n = std::lcm(n, num::ipow(F.order(), static_cast<std::uint64_t>(degree(h))) - 1);
    max_mult = std::max(max_mult, mult);
  }
  std::uint64_t pt = 1;
  while (pt < max_mult) pt = num::checked_mul(pt, F.p());
  n = num::checked_mul(n, pt);
  const FieldPoly x{0, 1};
  const FieldPoly one = rem(F, FieldPoly{1}, g);
  if (powmod(F, x, n, g) != one) throw Error("polynomial order computation failed");
  for (auto [l, k] : num::factorize(n)) {
    (void)k;
    while (n % l == 0 && powmod(F, x, n / l, g) == one) n /= l;
  }
  return n;
}

std::string to_string(const GaloisField& F, const FieldPoly& f) {
  (void)F;
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << ']';
  return os.str();
}

}  // namespace fpoly

}  // namespace trico
