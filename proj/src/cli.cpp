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

#include "trico/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "trico/additive.hpp"
#include "trico/codes.hpp"
#include "trico/equiv.hpp"
#include "trico/error.hpp"
#include "trico/numeric.hpp"
#include "trico/poly.hpp"
#include "trico/serialize.hpp"

namespace trico {

namespace {

// Largest |R|^n the ambient min-distance oracle will scan.
constexpr std::uint64_t kAmbientOracleBound = std::uint64_t{1} << 16;

struct Options {
  bool json = false;
  std::string verify;  // "", "on" or "strict"
  std::uint64_t seed = 0;
  std::uint64_t max_units = ChainRing::kDefaultUnitBound;
  std::uint64_t max_codewords = std::uint64_t{1} << 22;

  bool verifying() const { return !verify.empty(); }
  bool strict() const { return verify == "strict"; }
};

class Report {
 public:
  Report(std::string command, const Options& opt) : opt_(opt) {
    doc_["command"] = std::move(command);
    doc_["ring"] = nullptr;
    doc_["parameters"] = Json::object();
    doc_["results"] = Json::object();
  }

  void set_ring(const ChainRing& R) { doc_["ring"] = R.spec(); }
  Json& params() { return doc_["parameters"]; }
  Json& results() { return doc_["results"]; }

  void check(const std::string& name, const Json& closed, const Json& oracle) {
    const bool match = closed == oracle;
    checks_.push_back({{"name", name}, {"closed_form", closed}, {"oracle", oracle}, {"match", match}});
    mismatch_ = mismatch_ || !match;
  }

  // Runs an oracle; a bound hit is recorded as infeasible, or rethrown
  // under --verify=strict.
  void oracle(const std::string& name, const std::function<void()>& run) {
    try {
      run();
    } catch (const BoundExceeded& e) {
      if (opt_.strict()) throw BoundExceeded("oracle '" + name + "' infeasible: " + e.what());
      checks_.push_back({{"name", name}, {"feasible", false}, {"reason", e.what()}});
    }
  }

  bool mismatch() const { return mismatch_; }

  Json finish() {
    if (opt_.verifying()) doc_["oracle"] = {{"mode", opt_.verify}, {"checks", checks_}, {"match", !mismatch_}};
    return doc_;
  }

 private:
  const Options& opt_;
  Json doc_;
  Json checks_ = Json::array();
  bool mismatch_ = false;
};

// ---------------------------------------------------------------- rendering

bool is_inline(const Json& j) {
  if (j.is_object()) return false;
  if (j.is_array()) return std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_object(); });
  return true;
}

std::string inline_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_table(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_object()) return false;
  const auto& first = j.front();
  for (const auto& row : j) {
    if (!row.is_object() || row.size() != first.size()) return false;
    for (const auto& [key, value] : row.items()) {
      if (!first.contains(key) || !is_inline(value)) return false;
    }
  }
  return true;
}

void render(const Json& j, int indent, std::ostream& out);

void render_table(const Json& rows, int indent, std::ostream& out) {
  std::vector<std::string> keys;
  for (const auto& [key, value] : rows.front().items()) keys.push_back(key);
  // Keep "k" and "name" in the leading column.
  for (const char* lead : {"name", "k"}) {
    const auto it = std::find(keys.begin(), keys.end(), lead);
    if (it != keys.end()) std::rotate(keys.begin(), it, it + 1);
  }
  std::vector<std::size_t> width;
  for (const auto& key : keys) {
    std::size_t w = key.size();
    for (const auto& row : rows) w = std::max(w, inline_text(row.at(key)).size());
    width.push_back(w);
  }
  const std::string pad(indent, ' ');
  auto line = [&](const std::function<std::string(std::size_t)>& cell) {
    std::string s = pad;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      std::string c = cell(i);
      if (i + 1 < keys.size()) c.resize(width[i] + 2, ' ');
      s += c;
    }
    out << s << "\n";
  };
  line([&](std::size_t i) { return keys[i]; });
  for (const auto& row : rows) line([&](std::size_t i) { return inline_text(row.at(keys[i])); });
}

void render_entry(const std::string& key, const Json& v, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  if (is_inline(v)) {
    out << pad << key << ": " << inline_text(v) << "\n";
  } else if (is_table(v)) {
    out << pad << key << ":\n";
    render_table(v, indent + 2, out);
  } else {
    out << pad << key << ":\n";
    render(v, indent + 2, out);
  }
}

void render(const Json& j, int indent, std::ostream& out) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) render_entry(key, value, indent, out);
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (is_inline(item)) {
        out << pad << "- " << inline_text(item) << "\n";
      } else {
        out << pad << "-\n";
        render(item, indent + 2, out);
      }
    }
  } else {
    out << pad << inline_text(j) << "\n";
  }
}

void render_report(const Json& doc, std::ostream& out) {
  for (const char* key : {"command", "ring", "parameters", "results", "oracle", "error"}) {
    if (!doc.contains(key) || doc.at(key).is_null()) continue;
    if (doc.at(key).is_object() && doc.at(key).empty()) continue;
    render_entry(key, doc.at(key), 0, out);
  }
}

// ----------------------------------------------------------------- helpers

void check_n_k(unsigned n, std::optional<unsigned> k) {
  if (n < 2) throw InvalidArgument("need n >= 2");
  if (k && (*k == 0 || *k >= n)) throw InvalidArgument("need 0 < k < n");
}

std::vector<unsigned> degrees(unsigned n, std::optional<unsigned> k) {
  if (k) return {*k};
  std::vector<unsigned> ks(n - 1);
  for (unsigned i = 0; i < ks.size(); ++i) ks[i] = i + 1;
  return ks;
}

bool relation_holds(const Binomial& a, const Binomial& b, unsigned n, const Element& alpha) {
  const unsigned k = a.k();
  return b.b1() * alpha.pow(n - k) == a.b1() && b.b0() * alpha.pow(n) == a.b0();
}

std::pair<Binomial, Binomial> parse_pair(const RingPtr& R, const std::string& a, const std::string& b, unsigned n) {
  Binomial ba = parse_binomial(R, a);
  Binomial bb = parse_binomial(R, b);
  if (ba.k() != bb.k()) throw CrossDegreeRefusal(static_cast<int>(ba.k()), static_cast<int>(bb.k()));
  check_n_k(n, ba.k());
  return {ba, bb};
}

Json rows_json(const PolycyclicCode& code) { return code_to_json(code).at("rows"); }

Json rows_text(const PolycyclicCode& code) {
  // gamma is u in a ramified ring and p otherwise.
  const std::string gamma = code.ring().e() > 1 ? "u" : std::to_string(code.ring().p());
  Json out = Json::array();
  for (const auto& row : code.rows()) {
    const std::string g = "(" + format_poly(row.g) + ")";
    if (row.lambda == 0) {
      out.push_back(g);
    } else {
      out.push_back(gamma + (row.lambda > 1 ? "^" + std::to_string(row.lambda) : "") + "*" + g);
    }
  }
  return out;
}

// ----------------------------------------------------------------- commands

Report cmd_ring_info(const Options& o, const std::string& spec) {
  Report rep("ring info", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  auto& res = rep.results();
  res["p"] = R->p();
  res["m"] = R->m();
  res["r"] = R->r();
  res["e"] = R->e();
  res["t"] = R->t();
  res["s"] = R->s();
  res["q"] = R->q();
  res["characteristic"] = R->characteristic();
  res["cardinality"] = R->cardinality();
  res["unit_count"] = R->unit_count();
  const auto dec = R->unit_decomposition();
  res["unit_decomposition"] = decomposition_to_json(dec);
  const Element xi = R->teichmuller_generator();
  res["teichmuller_generator"] = element_to_json(xi);
  Json types = Json::array();
  for (unsigned l = 0; l <= dec.max_exponent(); ++l) {
    for (const auto u : num::divisors(dec.cyclic_part)) {
      types.push_back({{"l", l}, {"u", u}, {"order", num::ipow(R->p(), l) * u}, {"count", ord_count(dec, l, u)}});
    }
  }
  res["order_types"] = types;
  if (o.verifying()) {
    rep.oracle("order_histogram", [&] {
      std::map<std::uint64_t, std::uint64_t> hist;
      for (const auto& x : R->units(o.max_units)) ++hist[R->element_order(x)];
      Json closed = Json::object(), seen = Json::object();
      for (const auto& t : types) {
        if (t.at("count") != 0) closed[std::to_string(t.at("order").get<std::uint64_t>())] = t.at("count");
      }
      for (const auto& [ord, cnt] : hist) seen[std::to_string(ord)] = cnt;
      rep.check("order_histogram", closed, seen);
    });
    rep.oracle("unit_group", [&] {
      const auto units = R->units(o.max_units);
      rep.check("unit_count", R->unit_count(), units.size());
      rep.check("unit_decomposition", dec.to_string(), decompose_from_elements(units, R->p()).to_string());
    });
    rep.check("teichmuller_order", R->q() - 1, R->element_order(xi));
  }
  return rep;
}

Report cmd_classes_count(const Options& o, const std::string& spec, unsigned n, std::optional<unsigned> k) {
  Report rep("classes count", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  check_n_k(n, k);
  rep.params()["n"] = n;
  if (k) rep.params()["k"] = *k;
  const std::uint64_t units = R->unit_count();
  const std::uint64_t bk = num::checked_mul(units, units);
  Json rows = Json::array();
  std::uint64_t total = 0;
  for (const unsigned kk : degrees(n, k)) {
    const std::uint64_t ker = kernel_size(*R, n, kk);
    const std::uint64_t classes = count_classes_k(*R, n, kk);
    total += classes;
    rows.push_back({{"k", kk}, {"classes", classes}, {"kernel_size", ker}, {"omega", omega(*R, n, kk)},
                    {"hk_size", units / ker}, {"squarefree_criterion", squarefree_criterion(n, kk, R->p())}});
    if (!o.verifying()) continue;
    const std::string tag = " k=" + std::to_string(kk);
    rep.oracle("kernel_size" + tag,
               [&] { rep.check("kernel_size" + tag, ker, kernel_size_bruteforce(*R, n, kk, o.max_units)); });
    rep.oracle("hk_index" + tag,
               [&] { rep.check("hk_index" + tag, classes, count_classes_k_bruteforce(R, n, kk, o.max_units)); });
    rep.oracle("coset_partition" + tag, [&] {
      rep.check("coset_partition" + tag, classes, class_representatives(R, n, kk, o.max_codewords).size());
    });
  }
  auto& res = rep.results();
  res["per_k"] = rows;
  res["total"] = total;
  res["unit_count"] = units;
  res["b_k_size"] = bk;
  res["b_size"] = num::checked_mul(bk, rows.size());
  return rep;
}

Report cmd_classes_reps(const Options& o, const std::string& spec, unsigned n, unsigned k) {
  Report rep("classes reps", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  check_n_k(n, k);
  rep.params()["n"] = n;
  rep.params()["k"] = k;
  const auto reps = class_representatives(R, n, k, o.max_codewords);
  Json list = Json::array();
  for (const auto& b : reps) list.push_back(format_binomial(b));
  rep.results()["count"] = reps.size();
  rep.results()["representatives"] = list;
  if (o.verifying()) rep.check("count", count_classes_k(*R, n, k), reps.size());
  return rep;
}

void restricted_check(Report& rep, const Options& o, const RingPtr& R, const Binomial& a, const Binomial& b,
                      unsigned n, const std::string& selector) {
  const auto G = UnitSubgroup::parse(R, selector);
  rep.params()["group"] = G.label();
  auto& res = rep.results();
  res["group_order"] = G.order();
  const auto alpha = restricted_equivalent(a, b, n, G);
  res["related"] = alpha.has_value();
  res["verdict"] = alpha ? "(n,G)-equivalent" : "not (n,G)-equivalent";
  if (alpha) {
    res["certificate"] = certificate_to_json({*alpha, 0});
    res["certificate_valid"] = G.contains(*alpha) && relation_holds(a, b, n, *alpha);
  } else {
    res["certificate"] = nullptr;
    res["reason"] = "no alpha in " + G.label() + " with b1*alpha^(n-k) = a1 and b0*alpha^n = a0";
  }
  if (o.verifying()) {
    rep.oracle("group_scan", [&] {
      bool found = false;
      for (const auto& x : G.elements(o.max_units)) found = found || relation_holds(a, b, n, x);
      rep.check("related", alpha.has_value(), found);
    });
  }
}

Report cmd_check(const Options& o, const std::string& spec, unsigned n, const std::string& as, const std::string& bs,
                 const std::string& mode) {
  Report rep("check", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  const auto [a, b] = parse_pair(R, as, bs, n);
  rep.params()["n"] = n;
  rep.params()["a"] = format_binomial(a);
  rep.params()["b"] = format_binomial(b);
  rep.params()["mode"] = mode;
  auto& res = rep.results();

  if (mode.rfind("restricted:", 0) == 0) {
    restricted_check(rep, o, R, a, b, n, mode.substr(11));
    return rep;
  }

  auto in_class = [&](const Binomial& target) {
    const auto cls = equivalence_class(target, n, o.max_units);
    return std::binary_search(cls.begin(), cls.end(), a, binomial_less);
  };

  if (mode == "equiv") {
    const auto cert = n_equivalent(a, b, n, o.max_units);
    res["related"] = cert.has_value();
    res["verdict"] = cert ? "n-equivalent" : "not n-equivalent";
    if (cert) {
      res["certificate"] = certificate_to_json(*cert);
      res["certificate_valid"] = verify_certificate(a, b, n, *cert);
    } else {
      res["certificate"] = nullptr;
      res["reason"] = "no unit alpha with b1*alpha^(n-k) = a1 and b0*alpha^n = a0";
    }
    if (o.verifying()) rep.oracle("coset_scan", [&] { rep.check("related", cert.has_value(), in_class(b)); });
    return rep;
  }

  if (mode == "isometry-b1") {
    if (a.k() != 1) throw InvalidArgument("isometry-b1 needs degree-one binomials (k = 1)");
    const auto cert = isometry_b1_classify(a, b, n, o.max_units);
    const bool char_p = R->m() == 1;
    res["related"] = cert.has_value();
    if (!cert) {
      res["certificate"] = nullptr;
      if (char_p) {
        res["verdict"] = "not isometric";
        res["reason"] = "no Frobenius twist b^(star p^l) with p^l < n is n-equivalent to a";
      } else {
        res["verdict"] = "not isometric (char p^m, m>1)";
        res["reason"] = "in characteristic p^m with m > 1, degree-one n-isometry coincides with n-equivalence";
      }
    } else {
      res["certificate"] = certificate_to_json(*cert);
      res["certificate_valid"] = verify_certificate(a, b, n, *cert);
      res["verdict"] = cert->l == 0 ? "n-equivalent (isometric)" : "Frobenius-related (l = " + std::to_string(cert->l) + ")";
    }
    if (o.verifying()) {
      rep.oracle("frobenius_scan", [&] {
        Json ls = Json::array();
        std::uint64_t pl = 1;
        for (unsigned l = 0; l == 0 || (char_p && pl < n); ++l, pl *= R->p()) {
          if (in_class(star_pow(b, static_cast<std::int64_t>(pl)))) ls.push_back(l);
        }
        rep.check("related", cert.has_value(), !ls.empty());
        if (cert) rep.check("certificate_l_found", true, std::find(ls.begin(), ls.end(), cert->l) != ls.end());
      });
    }
    return rep;
  }
  throw InvalidArgument("unknown mode '" + mode + "' (expected equiv, isometry-b1 or restricted:<G>)");
}

struct CodeInput {
  RingPtr R;
  RingPoly f;
  std::vector<RingPoly> gens;
};

CodeInput code_input(Report& rep, const std::string& spec, const std::string& modulus,
                     const std::vector<std::string>& gens) {
  CodeInput in{ChainRing::parse(spec), RingPoly(nullptr), {}};
  rep.set_ring(*in.R);
  in.f = parse_poly(in.R, modulus);
  rep.params()["modulus"] = format_poly(in.f);
  Json g = Json::array();
  for (const auto& s : gens) {
    in.gens.push_back(parse_poly(in.R, s));
    g.push_back(format_poly(in.gens.back()));
  }
  if (!gens.empty()) rep.params()["gens"] = g;
  return in;
}

Report cmd_codes_enumerate(const Options& o, const std::string& spec, const std::string& modulus) {
  Report rep("codes enumerate", o);
  const auto in = code_input(rep, spec, modulus, {});
  const auto fac = factor_basic_irreducible(in.f);
  const auto nu = static_cast<unsigned>(fac.factors.size());
  const std::uint64_t expected = num::ipow(in.R->s() + 1, nu);
  if (expected > o.max_codewords) {
    throw BoundExceeded(std::to_string(expected) + " codes exceed --max-codewords=" + std::to_string(o.max_codewords));
  }
  Json factors = Json::array();
  for (const auto& [g, mult] : fac.factors) factors.push_back(format_poly(g));
  Json codes = Json::array();
  std::uint64_t violations = 0;
  std::uint64_t round_trips = 0;
  enumerate_codes_squarefree(in.f, [&](const std::vector<unsigned>& exps, const PolycyclicCode& code) {
    codes.push_back({{"exponents", exps}, {"cardinality", code_cardinality(code)}, {"rows", rows_json(code)},
                     {"generators", rows_text(code)}});
    if (o.verifying()) {
      violations += standard_form_violations(code).size();
      round_trips += standard_form(in.f, {principal_generator(code)}) == code ? 1 : 0;
    }
  });
  auto& res = rep.results();
  res["factors"] = factors;
  res["count"] = codes.size();
  res["codes"] = codes;
  if (o.verifying()) {
    rep.check("count", expected, codes.size());
    rep.check("standard_form_violations", 0, violations);
    rep.check("principal_generator_round_trip", codes.size(), round_trips);
  }
  return rep;
}

Report cmd_codes_standard_form(const Options& o, const std::string& spec, const std::string& modulus,
                               const std::vector<std::string>& gens) {
  Report rep("codes standard-form", o);
  const auto in = code_input(rep, spec, modulus, gens);
  const auto code = standard_form(in.f, in.gens);
  auto& res = rep.results();
  res["code"] = code_to_json(code);
  res["generators"] = rows_text(code);
  res["cardinality"] = code_cardinality(code);
  res["lambda_profile"] = code.lambda_profile();
  const auto sgb = minimal_sgb(code);
  Json sgb_json = Json::array();
  for (const auto& row : sgb) sgb_json.push_back({{"lambda", row.lambda}, {"g", format_poly(row.g)}});
  res["minimal_sgb"] = sgb_json;
  if (o.verifying()) {
    rep.check("standard_form_violations", Json::array(), standard_form_violations(code));
    rep.check("minimal_sgb_violations", Json::array(), minimal_sgb_violations(sgb));
    std::size_t members = 0;
    for (const auto& g : in.gens) members += code_membership(code, g) ? 1 : 0;
    rep.check("generators_in_code", in.gens.size(), members);
  }
  return rep;
}

Report cmd_codes_min_distance(const Options& o, const std::string& spec, const std::string& modulus,
                              const std::vector<std::string>& gens) {
  Report rep("codes min-distance", o);
  const auto in = code_input(rep, spec, modulus, gens);
  const auto code = standard_form(in.f, in.gens);
  const auto d = min_distance(code, o.max_codewords);
  auto& res = rep.results();
  res["generators"] = rows_text(code);
  res["cardinality"] = code_cardinality(code);
  res["length"] = code.length();
  res["min_distance"] = d ? Json(*d) : Json(nullptr);
  if (o.verifying()) {
    rep.oracle("ambient_scan", [&] {
      const auto& R = *in.R;
      const unsigned len = code.length();
      std::uint64_t total = 1;
      for (unsigned i = 0; i < len; ++i) {
        if (total > kAmbientOracleBound / R.cardinality()) throw BoundExceeded("|R|^n exceeds the ambient scan bound");
        total *= R.cardinality();
      }
      std::vector<Element> els;
      R.for_each_element([&](const Element& a) { els.push_back(a); });
      std::optional<unsigned> best;
      std::vector<std::size_t> digit(len, 0);
      for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t v = idx;
        std::vector<Element> c;
        unsigned weight = 0;
        for (unsigned i = 0; i < len; ++i) {
          c.push_back(els[v % els.size()]);
          weight += c.back().is_zero() ? 0 : 1;
          v /= els.size();
        }
        if (weight == 0 || (best && weight >= *best)) continue;
        if (code_membership(code, RingPoly(in.R, c))) best = weight;
      }
      rep.check("min_distance", d ? Json(*d) : Json(nullptr), best ? Json(*best) : Json(nullptr));
    });
  }
  return rep;
}

Report cmd_codes_principal_gen(const Options& o, const std::string& spec, const std::string& modulus,
                               const std::vector<std::string>& gens) {
  Report rep("codes principal-gen", o);
  const auto in = code_input(rep, spec, modulus, gens);
  const auto code = standard_form(in.f, in.gens);
  const auto g = principal_generator(code);
  auto& res = rep.results();
  res["generators"] = rows_text(code);
  res["principal_generator"] = format_poly(g);
  res["principal_generator_coeffs"] = poly_to_json(g);
  if (o.verifying()) rep.check("round_trip", code_to_json(code), code_to_json(standard_form(in.f, {g})));
  return rep;
}

Report cmd_codes_transfer(const Options& o, const std::string& spec, const std::string& modulus, unsigned k) {
  Report rep("codes transfer", o);
  const auto in = code_input(rep, spec, modulus, {});
  rep.params()["k"] = k;
  const auto S = reproot_setup(in.f, k);
  const auto sources = repeated_root_ideals(S);
  if (sources.size() > o.max_codewords) throw BoundExceeded("ideal count exceeds --max-codewords");
  std::vector<PolycyclicCode> images;
  Json pairs = Json::array();
  for (const auto& C : sources) {
    images.push_back(reproot_transfer(S, C));
    pairs.push_back({{"source", rows_text(C)},
                     {"image", rows_text(images.back())},
                     {"cardinality", code_cardinality(C)},
                     {"image_cardinality", code_cardinality(images.back())}});
  }
  const std::size_t target_count = enumerate_codes_squarefree(S.f_over_W).size();
  auto& res = rep.results();
  res["order"] = S.order;
  res["e_prime"] = S.e_prime;
  res["source_modulus"] = format_poly(S.big_modulus);
  res["target_ring"] = S.W->spec();
  res["target_modulus"] = format_poly(S.f_over_W, 'y');
  res["ideal_counts"] = {sources.size(), target_count};
  res["pairs"] = pairs;
  if (o.verifying()) {
    bool card = true;
    bool distinct = true;
    bool inclusion = true;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      card = card && code_cardinality(sources[i]) == code_cardinality(images[i]);
      for (std::size_t j = 0; j < sources.size(); ++j) {
        if (i == j) continue;
        distinct = distinct && !(images[i] == images[j]);
        inclusion = inclusion && code_subset(sources[i], sources[j]) == code_subset(images[i], images[j]);
      }
    }
    rep.check("ideal_count", sources.size(), target_count);
    rep.check("cardinality_preserved", true, card);
    rep.check("injective", true, distinct);
    rep.check("inclusion_preserved", true, inclusion);
  }
  return rep;
}

Report cmd_additive_count(const Options& o, const std::string& spec, unsigned n, std::optional<unsigned> k,
                          const std::string& group, const std::string& coefficients) {
  Report rep("additive count", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  check_n_k(n, k);
  const auto W = UnitSubgroup::parse(R, group);
  const auto C = UnitSubgroup::parse(R, coefficients.empty() ? group : coefficients);
  rep.params()["n"] = n;
  if (k) rep.params()["k"] = *k;
  rep.params()["group"] = W.label();
  rep.params()["coefficients"] = C.label();
  Json rows = Json::array();
  std::uint64_t total = 0;
  for (const unsigned kk : degrees(n, k)) {
    const std::uint64_t classes = restricted_class_count(n, kk, C, W);
    total += classes;
    rows.push_back({{"k", kk}, {"classes", classes}});
    if (!o.verifying()) continue;
    const std::string tag = " k=" + std::to_string(kk);
    rep.oracle("hk_index" + tag, [&] {
      rep.check("hk_index" + tag, classes, restricted_class_count_bruteforce(n, kk, C, W, o.max_units));
    });
    rep.oracle("coset_partition" + tag, [&] {
      rep.check("coset_partition" + tag, classes, restricted_coset_count(n, kk, C, W, o.max_codewords));
    });
  }
  auto& res = rep.results();
  res["per_k"] = rows;
  res["total"] = total;
  res["group_order"] = W.order();
  res["coefficient_group_order"] = C.order();
  res["group_decomposition"] = W.decomposition().to_string();
  return rep;
}

Report cmd_additive_check(const Options& o, const std::string& spec, unsigned n, const std::string& as,
                          const std::string& bs, const std::string& group) {
  Report rep("additive check", o);
  const auto R = ChainRing::parse(spec);
  rep.set_ring(*R);
  const auto [a, b] = parse_pair(R, as, bs, n);
  rep.params()["n"] = n;
  rep.params()["a"] = format_binomial(a);
  rep.params()["b"] = format_binomial(b);
  restricted_check(rep, o, R, a, b, n, group);
  return rep;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const CrossDegreeRefusal*>(&e)) return "CrossDegreeRefusal";
  if (dynamic_cast<const BoundExceeded*>(&e)) return "BoundExceeded";
  if (dynamic_cast<const RingMismatch*>(&e)) return "RingMismatch";
  if (dynamic_cast<const NotAUnit*>(&e)) return "NotAUnit";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "InvalidArgument";
  return "Error";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite chain ring arithmetic and classification of binomials and polycyclic codes", "trico"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit the report as JSON");
  app.add_flag("--verify{on}", o.verify,
               "Cross-check closed forms against brute-force oracles; --verify=strict fails when an oracle "
               "is infeasible")
      ->check(CLI::IsMember({"on", "strict"}));
  app.add_option("--seed", o.seed, "Seed for randomized checks (echoed in the report)");
  app.add_option("--max-units", o.max_units, "Largest unit group any command may enumerate")
      ->capture_default_str();
  app.add_option("--max-codewords", o.max_codewords, "Largest listing (codewords, codes, B_k) any command may build")
      ->capture_default_str();

  std::string command;
  std::function<Report()> action;
  std::string spec, a, b, mode = "equiv", modulus, group = "T", coefficients;
  std::vector<std::string> gens;
  unsigned n = 0, k = 0;

  auto add_spec = [&](CLI::App* sub) { sub->add_option("spec", spec, "Ring spec, e.g. \"FU(9,4)\"")->required(); };
  auto add_n = [&](CLI::App* sub) { sub->add_option("-n", n, "Code length n")->required(); };
  auto on = [&](CLI::App* sub, std::string name, std::function<Report()> fn) {
    sub->callback([&command, &action, name = std::move(name), fn = std::move(fn)] {
      command = name;
      action = fn;
    });
  };

  auto* ring = app.add_subcommand("ring", "Ring invariants")->require_subcommand(1);
  auto* ring_info = ring->add_subcommand("info", "Invariants, unit group and Teichmuller generator");
  add_spec(ring_info);
  on(ring_info, "ring info", [&] { return cmd_ring_info(o, spec); });

  auto* classes = app.add_subcommand("classes", "n-equivalence classes of binomials")->require_subcommand(1);
  auto* cc = classes->add_subcommand("count", "Per-k class counts and total");
  add_spec(cc);
  add_n(cc);
  auto* cc_k = cc->add_option("-k", k, "Only this degree k");
  on(cc, "classes count", [&] {
    return cmd_classes_count(o, spec, n, cc_k->count() ? std::optional<unsigned>(k) : std::nullopt);
  });
  auto* cr = classes->add_subcommand("reps", "One representative per class of B_k");
  add_spec(cr);
  add_n(cr);
  cr->add_option("-k", k, "Degree k")->required();
  on(cr, "classes reps", [&] { return cmd_classes_reps(o, spec, n, k); });

  auto* check = app.add_subcommand("check", "Decide whether two binomials are related");
  add_spec(check);
  add_n(check);
  check->add_option("a", a, "Binomial a1*x^k + a0")->required();
  check->add_option("b", b, "Binomial b1*x^k + b0")->required();
  check->add_option("--mode", mode, "equiv, isometry-b1 or restricted:<G> (G: T, S:r'=<d>, GR, full)")
      ->capture_default_str();
  on(check, "check", [&] { return cmd_check(o, spec, n, a, b, mode); });

  auto* codes = app.add_subcommand("codes", "Polycyclic codes in R[x]/<f>")->require_subcommand(1);
  auto add_modulus = [&](CLI::App* sub) {
    sub->add_option("--modulus", modulus, "Monic f as \"x^3 - 1\" or \"[3,0,0,1]\"")->required();
  };
  auto add_gens = [&](CLI::App* sub) {
    sub->add_option("--gens", gens, "Generator polynomial (repeatable)")->required()->take_all();
  };
  auto* ce = codes->add_subcommand("enumerate", "Every code when f has squarefree residue");
  add_spec(ce);
  add_modulus(ce);
  on(ce, "codes enumerate", [&] { return cmd_codes_enumerate(o, spec, modulus); });
  auto* cs = codes->add_subcommand("standard-form", "Standard-form generating set of <gens>");
  add_spec(cs);
  add_modulus(cs);
  add_gens(cs);
  on(cs, "codes standard-form", [&] { return cmd_codes_standard_form(o, spec, modulus, gens); });
  auto* cm = codes->add_subcommand("min-distance", "Minimum Hamming distance by enumeration");
  add_spec(cm);
  add_modulus(cm);
  add_gens(cm);
  on(cm, "codes min-distance", [&] { return cmd_codes_min_distance(o, spec, modulus, gens); });
  auto* cp = codes->add_subcommand("principal-gen", "Single generator of a code over a squarefree modulus");
  add_spec(cp);
  add_modulus(cp);
  add_gens(cp);
  on(cp, "codes principal-gen", [&] { return cmd_codes_principal_gen(o, spec, modulus, gens); });
  auto* ct = codes->add_subcommand("transfer", "Repeated-root ideals of F_q[x]/<f(x^(p^k))> as chain ring codes");
  add_spec(ct);
  add_modulus(ct);
  ct->add_option("-k", k, "Exponent k of p^k")->required();
  on(ct, "codes transfer", [&] { return cmd_codes_transfer(o, spec, modulus, k); });

  auto* additive = app.add_subcommand("additive", "Equivalence restricted to a unit subgroup")->require_subcommand(1);
  auto* ac = additive->add_subcommand("count", "Per-k class counts on B_{G,k}");
  add_spec(ac);
  add_n(ac);
  auto* ac_k = ac->add_option("-k", k, "Only this degree k");
  ac->add_option("--group", group, "Witness group: T, S:r'=<d>, GR or full")->capture_default_str();
  ac->add_option("--coefficients", coefficients, "Coefficient group (defaults to --group)");
  on(ac, "additive count", [&] {
    return cmd_additive_count(o, spec, n, ac_k->count() ? std::optional<unsigned>(k) : std::nullopt, group,
                              coefficients);
  });
  auto* ak = additive->add_subcommand("check", "(n,G)-equivalence of two binomials");
  add_spec(ak);
  add_n(ak);
  ak->add_option("a", a, "Binomial a1*x^k + a0")->required();
  ak->add_option("b", b, "Binomial b1*x^k + b0")->required();
  ak->add_option("--group", group, "Subgroup: T, S:r'=<d>, GR or full")->capture_default_str();
  on(ak, "additive check", [&] { return cmd_additive_check(o, spec, n, a, b, group); });

  std::vector<std::string> argv_store{"trico"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  Json doc;
  int code = kExitOk;
  try {
    Report rep = action();
    if (o.seed != 0) rep.params()["seed"] = o.seed;
    code = rep.mismatch() ? kExitOracleMismatch : kExitOk;
    doc = rep.finish();
  } catch (const std::exception& e) {
    code = dynamic_cast<const BoundExceeded*>(&e) ? kExitResourceBound : kExitUsage;
    Json error = {{"type", error_type(e)}, {"message", e.what()}};
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) error["position"] = pe->position();
    doc = {{"command", command}, {"ring", nullptr}, {"parameters", Json::object()}, {"results", nullptr},
           {"error", error}};
    err << "error: " << e.what() << "\n";
  }
  doc["exit_code"] = code;
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    render_report(doc, out);
  }
  return code;
}

}  // namespace trico
