#pragma once

// JSON views of library objects. Arbitrary-precision values are strings, rationals "num/den".

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3/catalog.hpp"
#include "k3/verify.hpp"

namespace k3::report {

using json = nlohmann::json;

inline json big(const BigInt& n) { return n.str(); }
inline json rational(const Rational& r) { return to_string(r); }

inline json character(const CharacterVector& c) {
  return json{{"m", c.m},
              {"full", {c.a[0], c.a[1], c.a[2], c.a[3]}},
              {"bracket", to_bracket_string(c)},
              {"norm", alpha_norm(c)}};
}

inline json cyclotomic(const CycInt& x) {
  json coeffs = json::array();
  for (const auto& c : x.coefficients()) coeffs.push_back(big(c));
  return json{{"conductor", x.conductor()}, {"coefficients", coeffs}, {"text", x.to_string()}};
}

inline json polynomial(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(big(c));
  return json{{"coefficients", coeffs}, {"degree", p.degree()}, {"text", p.to_string()}};
}

inline json lattice(const GramLattice& l) {
  json gram = json::array(), blocks = json::array();
  for (const auto& row : l.gram()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_int64(v));
    gram.push_back(r);
  }
  for (const auto& b : l.blocks()) blocks.push_back({{"name", b.name}, {"offset", b.offset}, {"size", b.size}});
  Signature s = l.signature();
  json out{{"rank", l.rank()},
           {"gram", gram},
           {"blocks", blocks},
           {"description", l.describe()},
           {"signature", {s.positive, s.negative}},
           {"determinant", big(l.determinant())}};
  if (l.determinant() != 0 && l.is_even()) out["discriminant_form"] = discriminant_form(l).describe();
  return out;
}

inline json monomial_map(const MonomialMap& pi, const std::vector<std::string>& vars) {
  json images = json::array();
  for (std::size_t i = 0; i < pi.images.size(); ++i) {
    const auto& im = pi.images[i];
    images.push_back({{"variable", i < vars.size() ? vars[i] : ""},
                      {"root", im.root},
                      {"exponents", {im.exponents[0], im.exponents[1], im.exponents[2]}}});
  }
  return json{{"m", pi.m}, {"images", images}, {"text", pi.describe(vars)}};
}

inline json fiber(const KodairaFiber& f) {
  json out{{"type", f.symbol.name()},
           {"location", f.location.infinity ? std::string("infinity") : std::to_string(f.location.t.value)},
           {"euler_number", f.euler_number()},
           {"components", f.component_count()},
           {"name", f.name()}};
  return out;
}

inline json entry(const K3CatalogEntry& e) {
  json action = json::object();
  for (const auto& [v, x] : e.action) action[v] = x;
  json out{{"k", e.k},
           {"class", e.unimodular ? "unimodular" : "non-unimodular"},
           {"elliptic", e.elliptic},
           {"equation", e.equation_text},
           {"action", action},
           {"S", lattice(e.S)},
           {"T", lattice(e.T)},
           {"mirror", e.mirror}};
  if (e.m) out["m"] = e.m;
  if (e.cover) {
    out["cover"] = {{"chart", e.cover->chart_text},
                    {"chart_at_infinity", e.cover->chart_at_infinity},
                    {"map", monomial_map(e.cover->map, e.cover->chart.variables)}};
    json rows = json::array();
    for (const auto& b : e.expected_brackets) rows.push_back(to_bracket_string(b));
    out["expected_characters"] = rows;
    out["bracket_slots"] = e.bracket_slots;
  }
  if (e.fibration) {
    const auto& f = *e.fibration;
    json fib = json::array();
    for (const auto& s : f.reducible_fibers) fib.push_back(s.name());
    json row{{"reducible_fibers", fib}, {"disc", big(f.disc)}};
    if (f.section) row["section"] = {f.section->x.to_string(), f.section->y.to_string()};
    if (f.height) row["height"] = rational(*f.height);
    out["fibration"] = row;
  }
  json primes = json::array();
  for (auto p : default_primes(e)) primes.push_back(p);
  out["default_primes"] = primes;
  return out;
}

inline json checks(const std::vector<CheckResult>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return out;
}

inline json entry_report(const EntryReport& r) {
  json primes = json::array();
  for (auto p : r.primes) primes.push_back(p);
  return json{{"k", r.k}, {"primes", primes}, {"checks", checks(r.checks)}, {"status", r.ok() ? "pass" : "fail"}};
}

inline json zeta(const ZetaReport& z) {
  json vals = json::array();
  for (const auto& [a, j] : z.jacobi_values) vals.push_back({{"alpha", character(a)}, {"j", cyclotomic(j)}});
  json out{{"k", z.k},
           {"q", z.q},
           {"n_plus", z.n_plus},
           {"n_minus", z.n_minus},
           {"R_a", polynomial(z.R_a)},
           {"R_t", polynomial(z.R_t)},
           {"jacobi_values", vals},
           {"trace", big(z.trace)},
           {"predicted_count", big(z.predicted_count)},
           {"notes", z.notes}};
  if (z.m) out["m"] = z.m;
  return out;
}

// ReportDocument: command echo, inputs, per-check status, result payload
struct Document {
  std::string command;
  json inputs = json::object();
  json checks = json::array();
  json result = json::object();
  bool ok = true;

  void add_check(const std::string& name, CheckStatus s, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", to_string(s)}, {"detail", detail}});
    if (s == CheckStatus::fail) ok = false;
  }
  json to_json() const {
    json out{{"command", command}, {"inputs", inputs}, {"checks", checks}, {"result", result}, {"status", ok ? "pass" : "fail"}};
    return out;
  }
};

}  // namespace k3::report
