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

// Polycyclic codes: ideals of R[x]/<f> for a monic f over a chain ring.

#ifndef TRICO_CODES_HPP
#define TRICO_CODES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trico/poly.hpp"

namespace trico {

/// One generator gamma^lambda * g of a generating set.
struct CodeRow {
  unsigned lambda;
  RingPoly g;

  friend bool operator==(const CodeRow& a, const CodeRow& b) { return a.lambda == b.lambda && a.g == b.g; }
};

/// An ideal of R[x]/<f> held as a generating set in standard form: lambda
/// strictly increasing, deg g strictly decreasing below deg f, g monic.
/// No rows means the zero code.
///
/// Rows are canonical. When fbar is squarefree they form the divisor chain
/// g_u | ... | g_0 | f; otherwise each g_i has its lower coefficients in
/// normal form with respect to the rows below it, reduced mod gamma^(s - lambda_i).
class PolycyclicCode {
 public:
  /// Trusts its input; use standard_form to build a code from generators.
  PolycyclicCode(RingPoly modulus, std::vector<CodeRow> rows)
      : modulus_(std::move(modulus)), rows_(std::move(rows)) {}

  const RingPoly& modulus() const noexcept { return modulus_; }
  const std::vector<CodeRow>& rows() const noexcept { return rows_; }
  const ChainRing& ring() const { return modulus_.ring(); }
  const RingPtr& ring_ptr() const noexcept { return modulus_.ring_ptr(); }
  /// n = deg f.
  unsigned length() const { return static_cast<unsigned>(modulus_.degree()); }
  bool is_zero() const noexcept { return rows_.empty(); }

  /// lambda(d) for d = 0..n-1: the gamma-exponent of the row leading at
  /// degree d, or s where no codeword has leading degree d.
  std::vector<unsigned> lambda_profile() const;

  friend bool operator==(const PolycyclicCode& a, const PolycyclicCode& b) {
    return a.modulus_ == b.modulus_ && a.rows_ == b.rows_;
  }

 private:
  RingPoly modulus_;
  std::vector<CodeRow> rows_;
};

/// Standard-form generating set of <gens> + <f> in R[x]/<f>.
PolycyclicCode standard_form(const RingPoly& f, const std::vector<RingPoly>& gens);

/// Minimal strong Groebner basis of the preimage ideal in R[x]: the rows,
/// preceded by (0, f) unless lambda_0 = 0.
std::vector<CodeRow> minimal_sgb(const PolycyclicCode& code);

/// Strong reduction of h in R[x] by rows sorted as in a standard form;
/// true when h reduces to zero.
bool strongly_reduces_to_zero(const std::vector<CodeRow>& rows, RingPoly h);

/// h (reduced mod f first) lies in the code.
bool code_membership(const PolycyclicCode& code, const RingPoly& h);

/// a is contained in b (same modulus).
bool code_subset(const PolycyclicCode& a, const PolycyclicCode& b);

/// Violations of the standard-form conditions (i)-(iv); empty when valid.
std::vector<std::string> standard_form_violations(const PolycyclicCode& code);

/// Violations of the minimal SGB conditions (i)-(iv) for rows in R[x].
std::vector<std::string> minimal_sgb_violations(const std::vector<CodeRow>& rows);

/// Every ideal of R[x]/<f> for f with squarefree residue, one per exponent
/// vector (a_1..a_nu) in {0..s}^nu over the basic irreducible factors f_i
/// (component i is gamma^(a_i) R[x]/<f_i>). Vectors run in lexicographic order.
void enumerate_codes_squarefree(
    const RingPoly& f, const std::function<void(const std::vector<unsigned>& exponents, const PolycyclicCode&)>& fn);
std::vector<PolycyclicCode> enumerate_codes_squarefree(const RingPoly& f);

/// sum gamma^lambda_i g_i; requires a modulus with squarefree residue.
RingPoly principal_generator(const PolycyclicCode& code);

/// |C| = prod_d p^(r (s - lambda(d))).
std::uint64_t code_cardinality(const PolycyclicCode& code);

/// Calls fn with the coefficient vector (length n) of every codeword.
/// Throws BoundExceeded when |C| > bound.
void for_each_codeword(const PolycyclicCode& code, const std::function<void(const std::vector<Element>&)>& fn,
                       std::uint64_t bound = std::uint64_t{1} << 22);

/// Minimum Hamming weight of a nonzero codeword; nullopt for the zero code.
std::optional<unsigned> min_distance(const PolycyclicCode& code, std::uint64_t bound = std::uint64_t{1} << 22);

// --- repeated-root transfer -------------------------------------------------

/// Data for moving ideals of F_q[x]/<f(x^(p^k))> to W[y]/<f(y)>, where
/// W = F_q[x]/<x^(p^k) - 1> = F_q[v]/<v^(p^k)> with v = x - 1.
struct RepeatedRootSetup {
  RingPoly f;            // over the field F_q
  unsigned k;
  std::uint64_t order;   // e = ord(f)
  std::uint64_t e_prime; // inverse of p^k modulo e
  RingPoly big_modulus;  // f(x^(p^k)) over F_q
  RingPtr W;
  RingPoly f_over_W;
};

/// f squarefree monic over a field ring with f(0) != 0, k >= 1.
RepeatedRootSetup reproot_setup(const RingPoly& f, unsigned k);

/// mu(C) as a code of W[y]/<f(y)>; C must be a code with modulus f(x^(p^k)).
PolycyclicCode reproot_transfer(const RepeatedRootSetup& setup, const PolycyclicCode& C);

/// All ideals <prod g_i^(j_i)>, 0 <= j_i <= p^k, of F_q[x]/<f(x^(p^k))>,
/// where f_i(x^(p^k)) = g_i(x)^(p^k).
std::vector<PolycyclicCode> repeated_root_ideals(const RepeatedRootSetup& setup);

}  // namespace trico

#endif  // TRICO_CODES_HPP
