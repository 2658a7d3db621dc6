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

#include "trico/codes.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "trico/error.hpp"
#include "trico/numeric.hpp"

namespace trico {

namespace {

using Vec = std::vector<Element>;

Vec to_vec(const RingPoly& h, unsigned n) {
  Vec v;
  v.reserve(n);
  for (unsigned i = 0; i < n; ++i) v.push_back(h.coeff(i));
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Element& c) { return c.is_zero(); });
}

// x * v modulo the monic f of degree n.
Vec mulx_mod(const Vec& v, const RingPoly& f) {
  const std::size_t n = v.size();
  Vec out(n, f.ring().zero());
  for (std::size_t i = 1; i < n; ++i) out[i] = v[i - 1];
  const Element& top = v[n - 1];
  if (!top.is_zero()) {
    for (std::size_t i = 0; i < n; ++i) out[i] -= top * f.coeff(i);
  }
  return out;
}

// v -= c * w
void axpy(Vec& v, const Element& c, const Vec& w) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!w[i].is_zero()) v[i] -= c * w[i];
  }
}

void check_modulus(const RingPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw InvalidArgument("code modulus must be monic of positive degree");
}

// Pivot data from a gamma-adic echelon form of the R-module spanned by the
// x-shifts of the generators: for each degree d, the minimal valuation of a
// leading coefficient at d and a vector realizing it with lead gamma^v.
struct Echelon {
  std::vector<unsigned> lambda;        // s where no pivot
  std::vector<std::optional<Vec>> pivot;
};

Echelon echelonize(const RingPoly& f, const std::vector<RingPoly>& gens) {
  const ChainRing& R = f.ring();
  const unsigned n = static_cast<unsigned>(f.degree());
  const unsigned s = R.s();
  std::vector<Vec> work;
  for (const auto& g : gens) {
    if (!g.ring().same_as(R)) throw RingMismatch();
    Vec v = to_vec(poly_rem(g, f), n);
    for (unsigned j = 0; j < n && !vec_is_zero(v); ++j) {
      work.push_back(v);
      v = mulx_mod(v, f);
    }
  }
  Echelon E{std::vector<unsigned>(n, s), std::vector<std::optional<Vec>>(n)};
  for (unsigned d = n; d-- > 0;) {
    std::erase_if(work, vec_is_zero);
    std::size_t best = work.size();
    unsigned best_v = s;
    for (std::size_t i = 0; i < work.size(); ++i) {
      const unsigned v = R.valuation(work[i][d]);
      if (v < best_v) {
        best_v = v;
        best = i;
        if (v == 0) break;
      }
    }
    if (best == work.size()) continue;
    Vec P = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    // Normalize the lead to exactly gamma^v.
    const Element unit = R.divide_by_gamma_power(P[d], best_v);
    const Element uinv = R.inverse(unit);
    for (auto& c : P) c = c * uinv;
    for (auto& w : work) {
      if (w[d].is_zero()) continue;
      axpy(w, R.divide_by_gamma_power(w[d], best_v), P);
    }
    if (best_v > 0) {
      Vec low = P;
      const Element ann = R.gamma().pow(s - best_v);
      for (auto& c : low) c = c * ann;
      if (!vec_is_zero(low)) work.push_back(std::move(low));
    }
    E.lambda[d] = best_v;
    E.pivot[d] = std::move(P);
  }
  return E;
}

// x^shift * gamma^lambda * g as a length-n vector (no reduction needed).
Vec basis_vector(const CodeRow& row, unsigned shift, unsigned n) {
  const ChainRing& R = row.g.ring();
  const Element gl = R.gamma().pow(row.lambda);
  Vec v(n, R.zero());
  for (int i = 0; i <= row.g.degree(); ++i) v[i + shift] = row.g.coeffs()[i] * gl;
  return v;
}

// Index of the row covering degree d (first row with deg g <= d), or -1.
int covering_row(const std::vector<CodeRow>& rows, int d) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].g.degree() <= d) return static_cast<int>(i);
  }
  return -1;
}

// Reduces the coefficients of v below degree `below` against the rows.
void reduce_below(Vec& v, const std::vector<CodeRow>& rows, unsigned below) {
  if (rows.empty()) return;
  const ChainRing& R = rows.front().g.ring();
  const unsigned n = static_cast<unsigned>(v.size());
  for (unsigned e = below; e-- > 0;) {
    const int j = covering_row(rows, static_cast<int>(e));
    if (j < 0) break;
    const CodeRow& row = rows[j];
    const Element rep = R.reduce_mod_gamma_power(v[e], row.lambda);
    if (rep == v[e]) continue;
    const Element q = R.divide_by_gamma_power(v[e] - rep, row.lambda);
    axpy(v, q, basis_vector(row, e - static_cast<unsigned>(row.g.degree()), n));
  }
}

std::vector<CodeRow> rows_from_echelon(const ChainRing& R, const Echelon& E) {
  const unsigned n = static_cast<unsigned>(E.lambda.size());
  const unsigned s = R.s();
  for (unsigned d = 1; d < n; ++d) {
    if (E.lambda[d] > E.lambda[d - 1]) throw Error("internal: leading profile is not monotone");
  }
  // Minimal degree for each distinct lambda < s, in increasing degree order.
  std::vector<unsigned> degs;
  for (unsigned d = 0; d < n; ++d) {
    if (E.lambda[d] < s && (d == 0 || E.lambda[d] != E.lambda[d - 1])) degs.push_back(d);
  }
  std::vector<CodeRow> rows;  // built bottom-up, kept sorted by lambda
  for (const unsigned d : degs) {
    const unsigned lam = E.lambda[d];
    Vec P = *E.pivot[d];
    reduce_below(P, rows, d);
    std::vector<Element> g(d + 1, R.zero());
    for (unsigned i = 0; i <= d; ++i) {
      if (R.valuation(P[i]) < lam) throw Error("internal: row coefficients leave gamma^lambda");
      g[i] = R.reduce_mod_gamma_power(R.divide_by_gamma_power(P[i], lam), s - lam);
    }
    for (unsigned i = d + 1; i < n; ++i) {
      if (!P[i].is_zero()) throw Error("internal: pivot has terms above its degree");
    }
    g[d] = R.one();
    rows.insert(rows.begin(), CodeRow{lam, RingPoly(R.shared_from_this(), std::move(g))});
  }
  return rows;
}

// Replaces normal-form rows by the divisor chain g_i = prod of the basic
// irreducible factors whose residues divide the residue of g_i.
std::vector<CodeRow> divisor_chain(const RingPoly& f, const std::vector<CodeRow>& rows) {
  const ChainRing& R = f.ring();
  const GaloisField& F = R.residue_field();
  const auto fac = factor_basic_irreducible(f);
  const PolycyclicCode reference(f, rows);
  std::vector<CodeRow> out;
  for (const auto& row : rows) {
    const FieldPoly gbar = row.g.residue();
    RingPoly G = RingPoly::constant(R.one());
    for (const auto& [fj, mult] : fac.factors) {
      (void)mult;
      if (fpoly::degree(fpoly::rem(F, gbar, fj.residue())) < 0) G = G * fj;
    }
    if (G.degree() != row.g.degree() || !code_membership(reference, G.scale(R.gamma().pow(row.lambda)))) {
      throw Error("internal: divisor chain does not match the echelon rows");
    }
    out.push_back(CodeRow{row.lambda, std::move(G)});
  }
  return out;
}

}  // namespace

std::vector<unsigned> PolycyclicCode::lambda_profile() const {
  const unsigned n = length();
  std::vector<unsigned> out(n, ring().s());
  for (unsigned d = 0; d < n; ++d) {
    const int j = covering_row(rows_, static_cast<int>(d));
    if (j >= 0) out[d] = rows_[j].lambda;
  }
  return out;
}

PolycyclicCode standard_form(const RingPoly& f, const std::vector<RingPoly>& gens) {
  check_modulus(f);
  const Echelon E = echelonize(f, gens);
  std::vector<CodeRow> rows = rows_from_echelon(f.ring(), E);
  if (!rows.empty() && f.ring().s() > 1 && is_residue_squarefree(f)) rows = divisor_chain(f, rows);
  return PolycyclicCode(f, std::move(rows));
}

std::vector<CodeRow> minimal_sgb(const PolycyclicCode& code) {
  if (!code.rows().empty() && code.rows().front().lambda == 0) return code.rows();
  std::vector<CodeRow> out{CodeRow{0, code.modulus()}};
  out.insert(out.end(), code.rows().begin(), code.rows().end());
  return out;
}

bool strongly_reduces_to_zero(const std::vector<CodeRow>& rows, RingPoly h) {
  while (!h.is_zero()) {
    const ChainRing& R = h.ring();
    const int e = h.degree();
    const int j = covering_row(rows, e);
    if (j < 0) return false;
    const CodeRow& row = rows[j];
    const Element& c = h.lead();
    if (R.valuation(c) < row.lambda) return false;
    const Element q = R.divide_by_gamma_power(c, row.lambda);
    h = h - row.g.shift(static_cast<std::size_t>(e - row.g.degree())).scale(q * R.gamma().pow(row.lambda));
    if (h.degree() >= e) throw Error("internal: reduction did not cancel the leading term");
  }
  return true;
}

bool code_membership(const PolycyclicCode& code, const RingPoly& h) {
  if (!h.ring().same_as(code.ring())) throw RingMismatch();
  return strongly_reduces_to_zero(code.rows(), poly_rem(h, code.modulus()));
}

bool code_subset(const PolycyclicCode& a, const PolycyclicCode& b) {
  if (!(a.modulus() == b.modulus())) throw InvalidArgument("codes have different moduli");
  for (const auto& row : a.rows()) {
    if (!strongly_reduces_to_zero(b.rows(), row.g.scale(a.ring().gamma().pow(row.lambda)))) return false;
  }
  return true;
}

namespace {

std::vector<std::string> chain_violations(const std::vector<CodeRow>& rows, unsigned s, int top_degree) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    const std::string tag = "row " + std::to_string(i) + ": ";
    if (!r.g.is_monic()) out.push_back(tag + "g is not monic (i)");
    if (r.lambda >= s) out.push_back(tag + "lambda >= s (ii)");
    if (i > 0 && r.lambda <= rows[i - 1].lambda) out.push_back(tag + "lambda not strictly increasing (ii)");
    if (i == 0 && top_degree >= 0 && r.g.degree() >= top_degree) out.push_back(tag + "deg g >= deg f (iii)");
    if (i > 0 && r.g.degree() >= rows[i - 1].g.degree()) out.push_back(tag + "degrees not strictly decreasing (iii)");
  }
  if (!out.empty()) return out;
  const RingPtr ring = rows.empty() ? nullptr : rows.front().g.ring_ptr();
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const std::vector<CodeRow> tail(rows.begin() + static_cast<std::ptrdiff_t>(i) + 1, rows.end());
    const RingPoly h = rows[i].g.scale(ring->gamma().pow(rows[i + 1].lambda));
    if (!strongly_reduces_to_zero(tail, h)) {
      out.push_back("row " + std::to_string(i) + ": gamma^lambda_(i+1) g_i not in the ideal of later rows (iv)");
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> standard_form_violations(const PolycyclicCode& code) {
  auto out = chain_violations(code.rows(), code.ring().s(), code.modulus().degree());
  if (out.empty() && !code.rows().empty()) {
    const auto& R = code.ring();
    if (!strongly_reduces_to_zero(code.rows(), code.modulus().scale(R.gamma().pow(code.rows().front().lambda)))) {
      out.push_back("gamma^lambda_0 f not in the ideal (iv)");
    }
  }
  return out;
}

std::vector<std::string> minimal_sgb_violations(const std::vector<CodeRow>& rows) {
  if (rows.empty()) return {"empty basis"};
  auto out = chain_violations(rows, rows.front().g.ring().s(), -1);
  if (rows.front().lambda != 0) out.push_back("row 0: lambda_0 != 0 (ii)");
  return out;
}

void enumerate_codes_squarefree(
    const RingPoly& f, const std::function<void(const std::vector<unsigned>&, const PolycyclicCode&)>& fn) {
  check_modulus(f);
  if (!is_residue_squarefree(f)) throw InvalidArgument("modulus residue is not squarefree");
  const ChainRing& R = f.ring();
  const unsigned s = R.s();
  std::vector<RingPoly> fac;
  for (auto& [g, mult] : factor_basic_irreducible(f).factors) {
    (void)mult;
    fac.push_back(g);
  }
  const std::size_t nu = fac.size();
  std::vector<unsigned> a(nu, 0);
  while (true) {
    std::vector<RingPoly> gens;
    for (unsigned lam = 0; lam < s; ++lam) {
      RingPoly g = RingPoly::constant(R.gamma().pow(lam));
      for (std::size_t i = 0; i < nu; ++i) {
        if (a[i] > lam) g = g * fac[i];
      }
      gens.push_back(std::move(g));
    }
    fn(a, standard_form(f, gens));
    std::size_t i = nu;
    while (i > 0 && a[i - 1] == s) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
}

std::vector<PolycyclicCode> enumerate_codes_squarefree(const RingPoly& f) {
  std::vector<PolycyclicCode> out;
  enumerate_codes_squarefree(f, [&](const std::vector<unsigned>&, const PolycyclicCode& c) { out.push_back(c); });
  return out;
}

RingPoly principal_generator(const PolycyclicCode& code) {
  if (!is_residue_squarefree(code.modulus())) throw InvalidArgument("modulus residue is not squarefree");
  const ChainRing& R = code.ring();
  RingPoly out(code.ring_ptr());
  for (const auto& row : code.rows()) out = out + row.g.scale(R.gamma().pow(row.lambda));
  return out;
}

std::uint64_t code_cardinality(const PolycyclicCode& code) {
  const ChainRing& R = code.ring();
  std::uint64_t out = 1;
  for (const unsigned lam : code.lambda_profile()) {
    out = num::checked_mul(out, num::ipow(R.q(), R.s() - lam));
  }
  return out;
}

namespace {

// Visits every codeword as a flat coordinate array (position-major).
template <typename Visit>
void walk_codewords(const PolycyclicCode& code, std::uint64_t bound, Visit&& visit) {
  const ChainRing& R = code.ring();
  const std::uint64_t size = code_cardinality(code);
  if (size > bound) {
    throw BoundExceeded("code has " + std::to_string(size) + " codewords, bound is " + std::to_string(bound));
  }
  const unsigned n = code.length();
  const std::size_t cc = R.coord_count();
  const auto moduli = R.coord_moduli();
  const std::uint64_t q = R.q();
  // table[slot][a] = flat image of lift(a) * gamma^j * B_d.
  std::vector<std::vector<std::vector<std::int64_t>>> table;
  const auto profile = code.lambda_profile();
  for (unsigned d = 0; d < n; ++d) {
    if (profile[d] >= R.s()) continue;
    const int j = covering_row(code.rows(), static_cast<int>(d));
    const Vec B = basis_vector(code.rows()[j], d - static_cast<unsigned>(code.rows()[j].g.degree()), n);
    for (unsigned dig = 0; dig < R.s() - profile[d]; ++dig) {
      const Element gj = R.gamma().pow(dig);
      std::vector<std::vector<std::int64_t>> slot(q, std::vector<std::int64_t>(n * cc, 0));
      for (std::uint64_t a = 0; a < q; ++a) {
        const Element c = R.lift(static_cast<GaloisField::Elem>(a)) * gj;
        for (unsigned i = 0; i < n; ++i) {
          const Element t = c * B[i];
          std::copy(t.coords().begin(), t.coords().end(), slot[a].begin() + static_cast<std::ptrdiff_t>(i * cc));
        }
      }
      table.push_back(std::move(slot));
    }
  }
  std::vector<std::int64_t> word(n * cc, 0);
  std::vector<std::uint64_t> digit(table.size(), 0);
  while (true) {
    visit(std::as_const(word));
    std::size_t k = 0;
    for (; k < table.size(); ++k) {
      const auto& old = table[k][digit[k]];
      digit[k] = digit[k] + 1 == q ? 0 : digit[k] + 1;
      const auto& now = table[k][digit[k]];
      for (std::size_t i = 0; i < word.size(); ++i) {
        const std::int64_t mdl = moduli[i % cc];
        word[i] = num::mod(word[i] - old[i] + now[i], mdl);
      }
      if (digit[k] != 0) break;
    }
    if (k == table.size()) break;
  }
}

}  // namespace

void for_each_codeword(const PolycyclicCode& code, const std::function<void(const std::vector<Element>&)>& fn,
                       std::uint64_t bound) {
  const ChainRing& R = code.ring();
  const std::size_t cc = R.coord_count();
  const unsigned n = code.length();
  walk_codewords(code, bound, [&](const std::vector<std::int64_t>& w) {
    std::vector<Element> v;
    v.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
      v.push_back(R.from_coords(std::span<const std::int64_t>(w.data() + i * cc, cc)));
    }
    fn(v);
  });
}

std::optional<unsigned> min_distance(const PolycyclicCode& code, std::uint64_t bound) {
  if (code.is_zero()) return std::nullopt;
  const std::size_t cc = code.ring().coord_count();
  const unsigned n = code.length();
  unsigned best = n + 1;
  walk_codewords(code, bound, [&](const std::vector<std::int64_t>& w) {
    unsigned wt = 0;
    for (unsigned i = 0; i < n && wt < best; ++i) {
      for (std::size_t c = 0; c < cc; ++c) {
        if (w[i * cc + c] != 0) {
          ++wt;
          break;
        }
      }
    }
    if (wt > 0 && wt < best) best = wt;
  });
  return best;
}

// --- repeated-root transfer ---------------------------------------------------

RepeatedRootSetup reproot_setup(const RingPoly& f, unsigned k) {
  const ChainRing& K = f.ring();
  if (K.s() != 1) throw InvalidArgument("transfer needs a polynomial over a finite field");
  if (k == 0) throw InvalidArgument("k must be positive");
  if (!f.is_monic() || f.degree() < 1) throw InvalidArgument("f must be monic of positive degree");
  if (f.coeff(0).is_zero()) throw InvalidArgument("f(0) must be nonzero");
  if (!is_residue_squarefree(f)) throw InvalidArgument("f must be squarefree");
  const GaloisField& F = K.residue_field();
  const std::uint64_t pk = num::ipow(K.p(), k);
  if (pk > 4096) throw BoundExceeded("p^k too large for the transfer");
  const std::uint64_t e = poly_order(F, f.residue());
  const std::uint64_t e_prime =
      e == 1 ? 0 : static_cast<std::uint64_t>(num::inv_mod(static_cast<std::int64_t>(pk % e), static_cast<std::int64_t>(e)));

  std::vector<Element> big(static_cast<std::size_t>(f.degree()) * pk + 1, K.zero());
  for (int i = 0; i <= f.degree(); ++i) big[i * pk] = f.coeffs()[i];

  ChainRing::Params P = K.params();
  P.e = P.t = static_cast<unsigned>(pk);
  P.eisenstein.assign(pk, {0});
  P.eisenstein[0] = {1};
  RingPtr W = ChainRing::make(P);
  std::vector<Element> fw;
  for (const auto& c : f.coeffs()) fw.push_back(W->lift(K.residue(c)));
  return RepeatedRootSetup{f, k, e, e_prime, RingPoly(f.ring_ptr(), std::move(big)), W, RingPoly(W, std::move(fw))};
}

namespace {

// mu(a) for a in F_q[x]/<f(x^(p^k))>: regroup a = sum a_i(x) x^(i p^k) into
// sum a_i(x) y^i, then substitute x -> y^e' x and write x = 1 + v.
RingPoly transfer_element(const RepeatedRootSetup& S, const RingPoly& a) {
  const ChainRing& K = S.f.ring();
  const ChainRing& W = *S.W;
  const std::uint64_t pk = num::ipow(K.p(), S.k);
  const RingPoly r = poly_rem(a, S.big_modulus);
  std::vector<Element> out(S.order, W.zero());
  std::vector<Element> xpow{W.one()};  // (1 + v)^j
  for (std::uint64_t j = 1; j < pk; ++j) xpow.push_back(xpow.back() * (W.one() + W.gamma()));
  for (int E = 0; E <= r.degree(); ++E) {
    const Element& c = r.coeffs()[E];
    if (c.is_zero()) continue;
    const std::uint64_t i = static_cast<std::uint64_t>(E) / pk;
    const std::uint64_t j = static_cast<std::uint64_t>(E) % pk;
    const std::uint64_t ye = (i + (S.e_prime % S.order) * (j % S.order)) % S.order;
    out[ye] += W.lift(K.residue(c)) * xpow[j];
  }
  return poly_rem(RingPoly(S.W, std::move(out)), S.f_over_W);
}

}  // namespace

PolycyclicCode reproot_transfer(const RepeatedRootSetup& S, const PolycyclicCode& C) {
  if (!(C.modulus() == S.big_modulus)) throw InvalidArgument("code modulus is not f(x^(p^k))");
  std::vector<RingPoly> gens;
  const ChainRing& K = C.ring();
  for (const auto& row : C.rows()) gens.push_back(transfer_element(S, row.g.scale(K.gamma().pow(row.lambda))));
  return standard_form(S.f_over_W, gens);
}

std::vector<PolycyclicCode> repeated_root_ideals(const RepeatedRootSetup& S) {
  const ChainRing& K = S.f.ring();
  const GaloisField& F = K.residue_field();
  const std::uint64_t pk = num::ipow(K.p(), S.k);
  // Inverse Frobenius c -> c^(1/p^k) = c^(p^j), j = -k mod r.
  const unsigned j = (K.r() - S.k % K.r()) % K.r();
  const std::uint64_t root_exp = num::ipow(K.p(), j);
  std::vector<FieldPoly> roots;
  for (const auto& [fi, mult] : fpoly::factor(F, S.f.residue())) {
    (void)mult;
    FieldPoly g;
    for (const auto c : fi) g.push_back(F.pow(c, root_exp));
    roots.push_back(std::move(g));
  }
  std::vector<PolycyclicCode> out;
  std::vector<std::uint64_t> a(roots.size(), 0);
  while (true) {
    FieldPoly g{F.one()};
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::uint64_t t = 0; t < a[i]; ++t) g = fpoly::mul(F, g, roots[i]);
    }
    out.push_back(standard_form(S.big_modulus, {RingPoly::lift(S.f.ring_ptr(), g)}));
    std::size_t i = roots.size();
    while (i > 0 && a[i - 1] == pk) a[--i] = 0;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

}  // namespace trico
