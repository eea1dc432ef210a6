#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3/characters.hpp"
#include "k3/delsarte.hpp"
#include "k3/error.hpp"
#include "k3/kodaira.hpp"
#include "k3/lattice.hpp"
#include "k3/numeric.hpp"
#include "k3/pointcount.hpp"
#include "k3/surface.hpp"

namespace k3 {

// c * t^e with c in Z[i]; zero when both parts vanish
struct GaussianMonomial {
  long long re = 0, im = 0;
  int exponent = 0;
  bool is_zero() const { return re == 0 && im == 0; }
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string c;
    if (im == 0) c = std::to_string(re);
    else if (re == 0) c = (im == 1 ? "" : im == -1 ? "-" : std::to_string(im)) + "i";
    else c = "(" + std::to_string(re) + (im > 0 ? "+" : "") + std::to_string(im) + "i)";
    if (exponent == 0) return c;
    if (c == "1") c = "";
    else if (c == "-1") c = "-";
    else if (!c.empty() && c.back() == 'i') c += "*";
    else if (!c.empty()) c += "*";
    std::string t = exponent == 1 ? "t" : "t^" + std::to_string(exponent);
    if (exponent < 0) t = "1/t^" + std::to_string(-exponent);
    if (exponent == -1) t = "1/t";
    return c + t;
  }
};

struct SectionSpec {
  GaussianMonomial x, y;
};

struct FibrationRow {
  std::vector<KodairaSymbol> reducible_fibers;
  std::optional<SectionSpec> section;
  std::optional<Rational> height;
  BigInt disc = 0;
};

struct CoverSpec {
  std::string chart_text;  // equation the printed map lands on
  DelsarteSurface chart;
  MonomialMap map;
  bool chart_at_infinity = false;
};

struct K3CatalogEntry {
  unsigned k = 0;
  bool unimodular = false;
  bool elliptic = true;
  unsigned m = 0;  // 0 for k = 3
  std::string equation_text;
  DelsarteSurface equation;
  std::optional<WeierstrassModel> weierstrass;
  std::vector<std::pair<std::string, long long>> action;  // variable -> exponent of zeta_k
  std::string action_fiber_variable = "y";
  GramLattice S, T;
  std::optional<FibrationRow> fibration;
  std::optional<CoverSpec> cover;
  std::vector<std::array<unsigned, 3>> expected_brackets;  // verbatim table row
  std::array<int, 3> bracket_slots{1, 2, 3};                // full index of each printed coordinate
  std::string mirror;                                       // partner list, "family" or "none"
  std::vector<unsigned> mirror_partners;

  std::vector<long long> action_in_surface_order() const {
    std::vector<long long> out(equation.variables.size(), 0);
    for (const auto& [v, e] : action) {
      int i = equation.variable_index(v);
      if (i < 0) throw InvalidArgument("action names unknown variable " + v);
      out[i] = e;
    }
    return out;
  }

  std::vector<CharacterVector> expected_characters() const {
    std::vector<CharacterVector> out;
    for (const auto& b : expected_brackets) {
      std::array<long long, 4> full{0, 0, 0, 0};
      long long s = 0;
      for (int i = 0; i < 3; ++i) {
        full[bracket_slots[i]] = b[i];
        s += b[i];
      }
      full[0] = mod(-s, static_cast<long long>(m));
      out.push_back(CharacterVector::from_full(m, full));
    }
    return out;
  }
};

namespace detail {

inline GramLattice U() { return standard_lattice("U2"); }
inline GramLattice mE8() { return standard_lattice("E8", {}, -1); }
inline GramLattice mE6() { return standard_lattice("E6", {}, -1); }
inline GramLattice mA(long long n) { return standard_lattice("A", {n}, -1); }
inline GramLattice gram(std::vector<std::vector<long long>> rows) { return explicit_lattice(rows); }

inline MonomialMap signed_map(unsigned m, std::vector<std::pair<int, Exponent3>> images) {
  MonomialMap pi;
  pi.m = m;
  for (auto& [s, e] : images) pi.images.push_back(MonomialMap::signed_image(s, e, m));
  return pi;
}

inline std::vector<KodairaSymbol> fibers(std::initializer_list<const char*> names) {
  std::vector<KodairaSymbol> out;
  for (auto n : names) out.push_back(KodairaSymbol::parse(n));
  return out;
}

struct RawEntry {
  unsigned k;
  bool unimodular;
  unsigned m;
  const char* equation;
  std::vector<std::pair<std::string, long long>> action;
  GramLattice S, T;
  std::optional<FibrationRow> fibration;
  const char* chart;  // nullptr: same as equation
  std::vector<std::pair<int, Exponent3>> images;
  std::vector<std::array<unsigned, 3>> brackets;
  std::array<int, 3> slots;
  std::string mirror;
  std::vector<unsigned> partners;
};

inline K3CatalogEntry build(RawEntry r) {
  K3CatalogEntry e;
  e.k = r.k;
  e.unimodular = r.unimodular;
  e.m = r.m;
  e.equation_text = r.equation;
  e.equation = parse_surface(r.equation);
  e.elliptic = e.equation.variable_index("x") >= 0;
  if (e.elliptic) e.weierstrass = WeierstrassModel::from_surface(e.equation);
  e.action = std::move(r.action);
  e.S = std::move(r.S);
  e.T = std::move(r.T);
  e.fibration = std::move(r.fibration);
  if (r.m != 0) {
    CoverSpec c;
    c.chart_text = r.chart ? r.chart : r.equation;
    c.chart = parse_surface(c.chart_text);
    c.chart_at_infinity = r.chart != nullptr;
    c.map = signed_map(r.m, std::move(r.images));
    e.cover = std::move(c);
  }
  e.expected_brackets = std::move(r.brackets);
  e.bracket_slots = r.slots;
  e.mirror = std::move(r.mirror);
  e.mirror_partners = std::move(r.partners);
  return e;
}

inline std::vector<K3CatalogEntry> build_catalog() {
  using A = std::array<unsigned, 3>;
  auto xyt = [](long long ax, long long ay, long long at) {
    return std::vector<std::pair<std::string, long long>>{{"x", ax}, {"y", ay}, {"t", at}};
  };
  auto sec = [](GaussianMonomial x, GaussianMonomial y) { return SectionSpec{x, y}; };
  auto row = [](std::vector<KodairaSymbol> f, std::optional<SectionSpec> s, std::optional<Rational> h,
                long long disc) { return FibrationRow{std::move(f), s, h, BigInt(disc)}; };
  const std::array<int, 3> wuv{3, 1, 2}, vuw{2, 1, 3}, wvu{3, 2, 1}, id{1, 2, 3};
  GramLattice m2_5_6 = gram({{-2, 5}, {5, -6}});
  GramLattice m17 = gram({{-2, 0, 0, 1}, {0, -2, 1, 1}, {0, 1, -2, 0}, {1, 1, 0, -4}});
  GramLattice m3 = gram({{-2, 3}, {3, -2}});

  std::vector<RawEntry> raw;
  raw.push_back({66, true, 66, "y^2 = x^3 - t*(t^11 + 1)", xyt(2, 3, 6), U(),
                 direct_sum({U(), U(), mE8(), mE8()}), std::nullopt, "eta^2 = xi^3 - 1 - s^11",
                 {{1, {33, 0, 0}}, {-1, {0, 22, 0}}, {1, {0, 0, 6}}},
                 {A{6, 33, 22}, {6, 33, 44}, {12, 33, 22}, {12, 33, 44}, {18, 33, 22}, {18, 33, 44},
                  {24, 33, 22}, {24, 33, 44}, {30, 33, 22}, {30, 33, 44}, {36, 33, 22}, {36, 33, 44},
                  {42, 33, 22}, {42, 33, 44}, {48, 33, 22}, {48, 33, 44}, {54, 33, 22}, {54, 33, 44},
                  {60, 33, 22}, {60, 33, 44}},
                 wuv, "12", {12}});
  raw.push_back({44, true, 44, "y^2 = x^3 + x + t^11", xyt(22, 11, 2), U(),
                 direct_sum({U(), U(), mE8(), mE8()}), std::nullopt, nullptr,
                 {{1, {22, 11, 0}}, {-1, {0, 22, 0}}, {-1, {0, 2, 4}}},
                 {A{1, 22, 24}, {3, 22, 28}, {5, 22, 32}, {7, 22, 36}, {9, 22, 40}, {13, 22, 4},
                  {15, 22, 8}, {17, 22, 12}, {19, 22, 16}, {21, 22, 20}, {23, 22, 24}, {25, 22, 28},
                  {27, 22, 32}, {29, 22, 36}, {31, 22, 40}, {35, 22, 4}, {37, 22, 8}, {39, 22, 12},
                  {41, 22, 16}, {43, 22, 20}},
                 vuw, "12", {12}});
  raw.push_back({42, true, 42, "y^2 = x^3 - t^5*(t^7 + 1)", xyt(2, 3, 18), direct_sum({U(), mE8()}),
                 direct_sum({U(), U(), mE8()}), std::nullopt, "eta^2 = xi^3 - 1 - s^7",
                 {{1, {21, 0, 0}}, {-1, {0, 14, 0}}, {1, {0, 0, 6}}},
                 {A{6, 21, 14}, {6, 21, 28}, {12, 21, 14}, {12, 21, 28}, {18, 21, 14}, {18, 21, 28},
                  {24, 21, 14}, {24, 21, 28}, {30, 21, 14}, {30, 21, 28}, {36, 21, 14}, {36, 21, 28}},
                 wuv, "28,36,42", {28, 36, 42}});
  raw.push_back({36, true, 36, "y^2 = x^3 - t^5*(t^6 + 1)", xyt(2, 3, 30), direct_sum({U(), mE8()}),
                 direct_sum({U(), U(), mE8()}), std::nullopt, nullptr,
                 {{1, {18, 0, 15}}, {-1, {0, 12, 10}}, {1, {0, 0, 6}}},
                 {A{1, 18, 12}, {5, 18, 24}, {7, 18, 12}, {11, 18, 24}, {13, 18, 12}, {17, 18, 24},
                  {19, 18, 12}, {23, 18, 24}, {25, 18, 12}, {29, 18, 24}, {31, 18, 12}, {35, 18, 24}},
                 wuv, "28,36,42", {28, 36, 42}});
  raw.push_back({28, true, 28, "y^2 = x^3 + x + t^7", xyt(14, 7, 2), direct_sum({U(), mE8()}),
                 direct_sum({U(), U(), mE8()}), std::nullopt, nullptr,
                 {{1, {14, 7, 0}}, {-1, {0, 14, 0}}, {-1, {0, 2, 4}}},
                 {A{1, 14, 16}, {3, 14, 20}, {5, 14, 24}, {9, 14, 4}, {11, 14, 8}, {13, 14, 12},
                  {15, 14, 16}, {17, 14, 20}, {19, 14, 24}, {23, 14, 4}, {25, 14, 8}, {27, 14, 12}},
                 vuw, "28,36,42", {28, 36, 42}});
  raw.push_back({12, true, 12, "y^2 = x^3 + t^5*(t^2 + 1)", xyt(2, 3, 6), direct_sum({U(), mE8(), mE8()}),
                 direct_sum({U(), U()}), std::nullopt, nullptr,
                 {{1, {6, 0, 15}}, {-1, {0, 4, 10}}, {-1, {0, 0, 6}}},
                 {A{1, 6, 4}, {5, 6, 8}, {7, 6, 4}, {11, 6, 8}}, wuv, "44,66", {44, 66}});
  raw.push_back({19, false, 38, "y^2 = x^3 + t^7*x - t", xyt(7, 1, 2), direct_sum({U(), gram({{-2, 1}, {1, -10}})}),
                 direct_sum({mE8(), mE8(), gram({{2, 1}, {1, 10}})}),
                 row(fibers({"III"}), sec({1, 0, -6}, {1, 0, -9}), Rational(19, 2), -19), nullptr,
                 {{1, {19, -1, 3}}, {-1, {0, 12, 2}}, {1, {0, -2, 6}}},
                 {A{19, 1, 35}, {19, 3, 29}, {19, 5, 23}, {19, 7, 17}, {19, 9, 11}, {19, 11, 5},
                  {19, 13, 37}, {19, 15, 31}, {19, 17, 25}, {19, 21, 13}, {19, 23, 7}, {19, 25, 1},
                  {19, 27, 33}, {19, 29, 27}, {19, 31, 21}, {19, 33, 15}, {19, 35, 9}, {19, 37, 3}},
                 id, "family", {}});
  raw.push_back({17, false, 34, "y^2 = x^3 + t^7*x - t^2", xyt(7, 2, 2), direct_sum({U(), m17}),
                 direct_sum({U(), U(), mE8(), m17}),
                 row(fibers({"III", "IV"}), sec({0, 0, 0}, {0, 1, 1}), Rational(17, 6), -17), nullptr,
                 {{1, {17, -2, 6}}, {-1, {0, 10, 4}}, {1, {0, -2, 6}}},
                 {A{17, 2, 28}, {17, 4, 22}, {17, 6, 16}, {17, 8, 10}, {17, 10, 4}, {17, 12, 32},
                  {17, 14, 26}, {17, 16, 20}, {17, 18, 14}, {17, 20, 8}, {17, 22, 2}, {17, 24, 30},
                  {17, 26, 24}, {17, 28, 18}, {17, 30, 12}, {17, 32, 6}},
                 id, "family", {}});
  raw.push_back({13, false, 26, "y^2 = x^3 + t^5*x - t", xyt(5, 1, 2), direct_sum({mE8(), m2_5_6}),
                 direct_sum({U(), mE8(), m2_5_6}),
                 row(fibers({"III*"}), sec({1, 0, -4}, {1, 0, -6}), Rational(13, 2), -13), nullptr,
                 {{1, {13, -1, 3}}, {-1, {0, 8, 2}}, {1, {0, -2, 6}}},
                 {A{13, 1, 23}, {13, 3, 17}, {13, 5, 11}, {13, 7, 5}, {13, 9, 25}, {13, 11, 19},
                  {13, 15, 7}, {13, 17, 1}, {13, 19, 21}, {13, 21, 15}, {13, 23, 9}, {13, 25, 3}},
                 id, "13", {13}});
  raw.push_back({11, false, 22, "y^2 = x^3 + t^5*x - t^2", xyt(5, 2, 2), direct_sum({U(), mA(10)}),
                 direct_sum({mE8(), gram({{2, 1}, {1, 6}})}),
                 row(fibers({"IV", "III*"}), sec({0, 0, 0}, {0, 1, 1}), Rational(11, 6), -11), nullptr,
                 {{1, {11, -2, 6}}, {-1, {0, 6, 4}}, {1, {0, -2, 6}}},
                 {A{11, 2, 16}, {11, 4, 10}, {11, 6, 4}, {11, 8, 20}, {11, 10, 14}, {11, 12, 8},
                  {11, 14, 2}, {11, 16, 18}, {11, 18, 12}, {11, 20, 6}},
                 id, "family", {}});
  raw.push_back({7, false, 14, "y^2 = x^3 + t^3*x - t^8", xyt(3, 1, 2), direct_sum({U(), mE8(), mA(6)}),
                 direct_sum({U(), U(), gram({{-2, 1}, {1, -4}})}),
                 row(fibers({"IV*", "III*"}), sec({0, 0, 0}, {0, 1, 4}), Rational(7, 6), -7), nullptr,
                 {{1, {7, 8, -24}}, {-1, {0, 10, -16}}, {1, {0, 2, -6}}},
                 {A{7, 2, 8}, {7, 4, 2}, {7, 6, 10}, {7, 8, 4}, {7, 10, 12}, {7, 12, 6}}, id, "family", {}});
  raw.push_back({5, false, 10, "y^2 = x^3 + t^3*x - t^7", xyt(3, 2, 2), direct_sum({mE8(), mE8(), m3}),
                 direct_sum({U(), m3}),
                 row(fibers({"III*", "II*"}), sec({1, 0, 4}, {1, 0, 6}), Rational(5, 2), -5), nullptr,
                 {{1, {5, 7, -21}}, {-1, {0, 8, -14}}, {1, {0, 2, -6}}},
                 {A{5, 1, 7}, {5, 3, 1}, {5, 7, 9}, {5, 9, 3}}, id, "25", {25}});
  raw.push_back({25, false, 50, "y^2 = u^5 + u*v^5 - 1",
                 {{"u", 20}, {"v", 1}, {"y", 0}}, m3, direct_sum({U(), mE8(), mE8(), m3}), std::nullopt,
                 nullptr, {{1, {25, 0, 0}}, {-1, {0, 10, 0}}, {1, {0, -2, 10}}},
                 {A{25, 2, 40}, {25, 4, 30}, {25, 6, 20}, {25, 8, 10}, {25, 12, 40}, {25, 14, 30},
                  {25, 16, 20}, {25, 18, 10}, {25, 22, 40}, {25, 24, 30}, {25, 26, 20}, {25, 28, 10},
                  {25, 32, 40}, {25, 34, 30}, {25, 36, 20}, {25, 38, 10}, {25, 42, 40}, {25, 44, 30},
                  {25, 46, 20}, {25, 48, 10}},
                 id, "5", {5}});
  raw.push_back({27, false, 54, "y^2 = x^3 - t*(t^9 + 1)", xyt(2, 3, 6), direct_sum({U(), mA(2)}),
                 direct_sum({U(), U(), mE6(), mE8()}), row(fibers({"IV"}), std::nullopt, std::nullopt, -3),
                 nullptr, {{1, {27, 0, 3}}, {-1, {0, 18, 2}}, {1, {0, 0, 6}}},
                 {A{1, 36, 27}, {5, 18, 27}, {7, 36, 27}, {11, 18, 27}, {13, 36, 27}, {17, 18, 27},
                  {19, 36, 27}, {23, 18, 27}, {25, 36, 27}, {29, 18, 27}, {31, 36, 27}, {35, 18, 27},
                  {37, 36, 27}, {41, 18, 27}, {43, 36, 27}, {47, 18, 27}, {49, 36, 27}, {53, 18, 27}},
                 wvu, "9", {9}});
  raw.push_back({9, false, 18, "y^2 = x^3 - t^5*(t^3 + 1)", xyt(2, 3, 3), direct_sum({U(), mE6(), mE8()}),
                 direct_sum({U(), U(), mA(2)}), row(fibers({"IV*", "II*"}), std::nullopt, std::nullopt, -3),
                 nullptr, {{1, {9, 0, 15}}, {-1, {0, 6, 10}}, {1, {0, 0, 6}}},
                 {A{1, 6, 9}, {5, 12, 9}, {7, 6, 9}, {11, 12, 9}, {13, 6, 9}, {17, 12, 9}}, wvu, "27", {27}});
  raw.push_back({3, false, 0, "y^2 = x^3 + t^5*(t - 1)^2", xyt(1, 0, 0), direct_sum({U(), mA(2), mE8(), mE8()}),
                 gram({{2, 1}, {1, 2}}), row(fibers({"IV", "II*", "II*"}), std::nullopt, std::nullopt, -3),
                 nullptr, {}, {}, id, "none", {}});

  std::vector<K3CatalogEntry> out;
  for (auto& r : raw) out.push_back(build(std::move(r)));
  return out;
}

}  // namespace detail

inline const std::vector<K3CatalogEntry>& load_catalog() {
  static const std::vector<K3CatalogEntry> catalog = detail::build_catalog();
  return catalog;
}

inline const K3CatalogEntry& catalog_entry(unsigned k) {
  for (const auto& e : load_catalog())
    if (e.k == k) return e;
  throw UnknownEntry("no catalog entry for k = " + std::to_string(k));
}

// Fermat degree of the cover: m = k for the unimodular set, 2k for the others, 54 and 50 for 27 and 25
inline unsigned theorem_degree(unsigned k) {
  if (k == 27) return 54;
  if (k == 25) return 50;
  for (unsigned u : {66u, 44u, 42u, 36u, 28u, 12u})
    if (k == u) return k;
  return 2 * k;
}

inline std::vector<std::uint32_t> default_primes(const K3CatalogEntry& e) {
  if (e.k == 3) return {5, 7, 11, 13};
  return admissible_primes(e.m, 2);
}

// Surfaces outside the catalog used as supplementary Delsarte fixtures
struct DelsarteFixture {
  std::string name;
  std::string equation;
  unsigned expected_m;
  std::size_t expected_characters;
};

inline std::vector<DelsarteFixture> supplementary_fixtures() {
  return {{"W", "y^2 = x^3 + t^7*x + 1", 42, 6}, {"Z", "y^2 = x^3 + x^2 + t^11", 22, 10}};
}

}  // namespace k3
