#pragma once

// JSON encodings of reports and the Selmer ledger input format. Integers
// that can exceed 64 bits are written as decimal strings.

#include "monolab/group_cohomology.hpp"
#include "monolab/prime_scan.hpp"
#include "monolab/selmer.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

namespace monolab {

using Json = nlohmann::ordered_json;

inline constexpr int kLedgerSchemaVersion = 1;

inline Json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

template <class Ring>
Json element_to_json(const LieElement<Ring>& e) {
  Json out = Json::object();
  const auto& alg = *e.algebra();
  for (const auto& [i, c] : e.terms()) {
    if constexpr (std::is_same_v<typename Ring::value_type, BigInt>)
      out[alg.basis_label(i)] = c.str();
    else if constexpr (std::is_same_v<typename Ring::value_type, ModP>)
      out[alg.basis_label(i)] = c.value();
    else
      out[alg.basis_label(i)] = c.str();
  }
  return out;
}

inline Json to_json(const RootDatum& d) {
  Json roots = Json::array();
  for (const auto& r : d.positive_roots()) roots.push_back(r);
  return Json{{"type", d.simple_type().name()},
              {"rank", d.rank()},
              {"cartan_matrix", d.cartan()},
              {"num_positive_roots", d.num_positive()},
              {"num_roots", d.num_roots()},
              {"dimension", d.dim()},
              {"coxeter_number", d.coxeter_number()},
              {"exponents", d.exponents()},
              {"highest_root", d.highest_root()},
              {"height_counts", d.height_counts()},
              {"weyl_contains_minus_one", d.weyl_has_minus_one()},
              {"positive_roots", roots}};
}

inline Json to_json(const KostantDecomposition& k) {
  Json pairs = Json::array();
  for (const auto& [m, p] : k.pairs) pairs.push_back({{"exponent", m}, {"eigenvalue", 2 * m}, {"vector", element_to_json(p)}});
  const auto& d = k.triple.X.algebra()->datum();
  return Json{{"type", d.simple_type().name()},
              {"exponents", k.exponents()},
              {"principal_coefficients", k.triple.c},
              {"X", element_to_json(k.triple.X)},
              {"H", element_to_json(k.triple.H)},
              {"Y", element_to_json(k.triple.Y)},
              {"centralizer", pairs}};
}

inline Json to_json(const PrimeScanReport& r) {
  Json per = Json::array();
  for (const auto& s : r.per_exponent) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients) coeffs.push_back(c.str());
    per.push_back({{"exponent", s.exponent}, {"coefficients", coeffs}, {"zero_in_char_zero", s.zero_in_char_zero}});
  }
  Json bad = Json::array();
  for (const auto& q : r.bad_primes) bad.push_back(big_to_json(q));
  Json out{{"type", r.type.name()}, {"informational", r.informational}, {"per_exponent", per}};
  if (r.e6_cartan_scan) {
    Json cs = Json::array();
    for (const auto& c : *r.e6_cartan_scan) cs.push_back({{"exponent", c.exponent}, {"h1_component", c.h1_component.str()}});
    out["e6_cartan_scan"] = cs;
  }
  out["bad_primes"] = bad;
  if (r.e8)
    out["e8_adjudication"] = {{"divides_367", r.e8->divides_367},
                              {"divides_397", r.e8->divides_397},
                              {"matches_lemma_list", r.e8->matches_lemma_list},
                              {"matches_alternative_list", r.e8->matches_alternative_list}};
  return out;
}

inline Json to_json(const CohomologyReport& c) {
  return Json{{"h0", c.h0}, {"dim_Z1", c.dim_Z1}, {"dim_B1", c.dim_B1}, {"h1", c.h1}};
}

inline Json to_json(const AdjointH1Report& a) {
  Json s = Json::array();
  for (const auto& x : a.summands)
    s.push_back({{"exponent", x.exponent}, {"sym_degree", 2 * x.exponent}, {"multiplicity", x.multiplicity}, {"h1", x.h1}});
  return Json{{"h1_total", a.total}, {"summands", s}};
}

inline Json to_json(const LiftingBounds& b) {
  Json out{{"type", b.type.name()},
           {"center_order", b.center_order},
           {"maximal_image_bound", b.maximal_image_bound},
           {"maximal_image_condition", "ell - 1 > " + std::to_string(b.maximal_image_bound)},
           {"principal_sl2_bound", b.principal_sl2_bound},
           {"principal_sl2_condition", "ell > " + std::to_string(b.principal_sl2_bound)}};
  if (!b.e8_exclusions.empty()) {
    out["e8_exclusions"] = b.e8_exclusions;
    out["e8_flagged"] = *b.e8_flagged;
    out["e8_computed"] = *b.e8_computed;
  }
  return out;
}

inline Json to_json(const LocalCondition& c) {
  Json out{{"kind", to_string(c.kind)}, {"h0", c.h0_local}, {"field_degree", c.field_degree}};
  if (c.custom_dim) out["custom_dim"] = *c.custom_dim;
  return out;
}

inline Json to_json(const SelmerLedger& l) {
  Json locals = Json::array();
  for (const auto& c : l.locals) locals.push_back(to_json(c));
  return Json{{"schema_version", kLedgerSchemaVersion},
              {"h0_global", l.h0_global},
              {"h0_global_twist", l.h0_global_twist},
              {"dim_n", l.dim_n},
              {"totally_real_degree", l.totally_real_degree},
              {"archimedean_fixed_dims", l.archimedean_fixed_dims},
              {"locals", locals}};
}

inline SelmerLedger ledger_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("ledger: expected a JSON object");
  if (!j.contains("schema_version") || j.at("schema_version") != kLedgerSchemaVersion)
    throw std::invalid_argument("ledger: unsupported or missing schema_version (expected " +
                                std::to_string(kLedgerSchemaVersion) + ")");
  SelmerLedger l;
  l.h0_global = j.value("h0_global", std::int64_t{0});
  l.h0_global_twist = j.value("h0_global_twist", std::int64_t{0});
  l.dim_n = j.at("dim_n").get<std::int64_t>();
  l.totally_real_degree = j.value("totally_real_degree", std::int64_t{0});
  l.archimedean_fixed_dims = j.value("archimedean_fixed_dims", std::vector<std::int64_t>{});
  if (static_cast<std::int64_t>(l.archimedean_fixed_dims.size()) != l.totally_real_degree)
    throw std::invalid_argument("ledger: archimedean_fixed_dims must have one entry per real place");
  for (const auto& c : j.value("locals", Json::array())) {
    LocalCondition lc;
    lc.kind = parse_local_kind(c.at("kind").get<std::string>());
    lc.h0_local = c.value("h0", std::int64_t{0});
    lc.field_degree = c.value("field_degree", std::int64_t{0});
    if (c.contains("custom_dim")) lc.custom_dim = c.at("custom_dim").get<std::int64_t>();
    local_dim(lc, l.dim_n);  // validates
    l.locals.push_back(lc);
  }
  return l;
}

inline Json selmer_summary(const SelmerLedger& l) {
  return Json{{"wiles_difference", wiles_difference(l)},
              {"oddness_deficit", oddness_deficit(l)},
              {"lgroup_euler_difference", lgroup_euler_difference(l)}};
}

/// Reference fixtures in the layout of data/fixtures/reference.json.
inline Json embedded_fixtures() {
  Json bad = Json::object();
  for (const auto& [k, v] : fixtures::bad_prime_lists()) bad[k] = v;
  Json ex = Json::object();
  for (const auto& [k, v] : fixtures::exponent_tables()) ex[k] = v;
  Json roots = Json::object();
  for (const auto& [k, v] : fixtures::root_counts()) roots[k] = v;
  return Json{{"bad_primes", bad},
              {"e8_alternative_list", fixtures::e8_alternative_list()},
              {"e8_theorem_exclusions", fixtures::e8_theorem_exclusions()},
              {"exponents", ex},
              {"root_counts", roots},
              {"e6_principal_sl2_bound", fixtures::kE6PrincipalBound}};
}

}  // namespace monolab
