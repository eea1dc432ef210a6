#pragma once

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "k3/catalog.hpp"
#include "k3/jacobi_zeta.hpp"
#include "k3/pointcount.hpp"

namespace k3 {

enum class CheckStatus { pass, fail, skip, discrepancy };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
    case CheckStatus::discrepancy: return "discrepancy";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct EntryReport {
  unsigned k = 0;
  std::vector<std::uint32_t> primes;
  std::vector<CheckResult> checks;
  bool ok() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::fail; });
  }
};

inline void require_entry_prime(const K3CatalogEntry& e, std::uint32_t q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
  if (e.k == 3) {
    if (q == 2 || q == 3) throw NotAdmissible("k = 3 needs p different from 2 and 3");
    return;
  }
  if ((q - 1) % e.m != 0) throw NotAdmissible("q = " + std::to_string(q) + " is not 1 mod " + std::to_string(e.m));
}

inline TranscendentalCharacters entry_characters(const K3CatalogEntry& e) {
  if (!e.cover) throw InvalidArgument("k = 3 has no Fermat cover");
  return transcendental_characters(e.cover->chart, e.cover->map);
}

// printed coordinates of a character in the entry's table convention
inline std::array<unsigned, 3> printed_bracket(const K3CatalogEntry& e, const CharacterVector& c) {
  return {c.a[e.bracket_slots[0]], c.a[e.bracket_slots[1]], c.a[e.bracket_slots[2]]};
}

template <FiniteField F>
EllipticCount count_entry(const F& f, const K3CatalogEntry& e) {
  if (!e.weierstrass) throw InvalidArgument("entry has no Weierstrass model");
  return count_elliptic_smooth(f, *e.weierstrass);
}

inline BigInt k3_observed_trace(std::uint32_t p, const BigInt& count) {
  BigInt bp = p;
  return count - 1 - bp * bp - 20 * bp;
}

inline ZetaReport zeta_report(const K3CatalogEntry& e, std::uint32_t q) {
  require_entry_prime(e, q);
  ZetaReport r;
  r.k = e.k;
  r.q = q;
  r.m = e.m;
  auto alg = algebraic_factor(e.k, q);
  r.n_minus = alg.n_minus;
  r.n_plus = alg.n_plus;
  r.R_a = alg.polynomial;
  if (e.k == 3) {
    auto f = make_field(q);
    std::optional<BigInt> obs;
    if (q % 3 == 1) obs = k3_observed_trace(q, count_entry(f, e).total);
    auto cm = cm_factor_k3(q, obs);
    r.R_t = cm.polynomial;
    r.trace = cm.trace;
    r.notes.push_back(cm.split ? "split prime: trace selected from the norm-equation candidates by the point count"
                               : "inert prime");
  } else {
    auto chars = entry_characters(e);
    auto tf = transcendental_factor(make_field(q), e.m, chars.characters);
    r.R_t = tf.polynomial;
    r.trace = tf.trace;
    r.jacobi_values = tf.values;
  }
  r.predicted_count = predicted_count(q, alg, r.trace);
  if (!e.elliptic) r.notes.push_back("affine-only oracle; smooth count out of scope");
  return r;
}

inline ZetaReport zeta_report(unsigned k, std::uint32_t q) { return zeta_report(catalog_entry(k), q); }

namespace detail {

using GaussPoly = std::map<int, std::pair<BigInt, BigInt>>;

inline void gauss_add(GaussPoly& p, int e, const BigInt& re, const BigInt& im) {
  auto& c = p[e];
  c.first += re;
  c.second += im;
  if (c.first == 0 && c.second == 0) p.erase(e);
}

inline GaussPoly gauss_mul(const GaussPoly& a, const GaussPoly& b) {
  GaussPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b)
      gauss_add(out, ea + eb, ca.first * cb.first - ca.second * cb.second,
                ca.first * cb.second + ca.second * cb.first);
  return out;
}

inline GaussPoly gauss_from(const GaussianMonomial& m) {
  GaussPoly p;
  if (!m.is_zero()) gauss_add(p, m.exponent, m.re, m.im);
  return p;
}

inline constexpr int kNoPole = INT_MAX;

inline int valuation_at(const GaussianMonomial& m, bool infinity, int weight) {
  if (m.is_zero()) return kNoPole;
  return infinity ? weight - m.exponent : m.exponent;
}

inline int leading_valuation(const std::vector<long long>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) return static_cast<int>(i);
  return kNoPole;
}

}  // namespace detail

// y^2 = x^3 + A x + B over Z[i][t, 1/t]
inline bool section_on_curve(const WeierstrassModel& w, const SectionSpec& s) {
  auto x = detail::gauss_from(s.x), y = detail::gauss_from(s.y);
  detail::GaussPoly a, b;
  for (std::size_t i = 0; i < w.A.size(); ++i)
    if (w.A[i]) detail::gauss_add(a, static_cast<int>(i), w.A[i], 0);
  for (std::size_t i = 0; i < w.B.size(); ++i)
    if (w.B[i]) detail::gauss_add(b, static_cast<int>(i), w.B[i], 0);
  auto lhs = detail::gauss_mul(y, y);
  auto rhs = detail::gauss_mul(detail::gauss_mul(x, x), x);
  for (const auto& [e, c] : detail::gauss_mul(a, x)) detail::gauss_add(rhs, e, c.first, c.second);
  for (const auto& [e, c] : b) detail::gauss_add(rhs, e, c.first, c.second);
  for (const auto& [e, c] : rhs) detail::gauss_add(lhs, e, -c.first, -c.second);
  return lhs.empty();
}

// (P.O) and component indices from a monomial section at the places t = 0 and t = infinity
inline SectionData derive_section_data(const WeierstrassModel& w, const SectionSpec& s,
                                       const std::vector<KodairaFiber>& bad_fibers) {
  SectionData out;
  for (bool inf : {false, true}) {
    int vx = detail::valuation_at(s.x, inf, 2 * w.index);
    int vy = detail::valuation_at(s.y, inf, 3 * w.index);
    const KodairaFiber* fib = nullptr;
    for (const auto& f : bad_fibers)
      if (f.location.infinity == inf && (inf || f.location.t.value == 0)) fib = &f;
    if (vx < 0) {
      if (vx % 2 != 0 || vy != vx / 2 * 3) throw InvalidArgument("section pole orders are inconsistent");
      out.pai += -vx / 2;
      continue;
    }
    if (!fib || !fib->symbol.reducible()) continue;
    int va = inf ? (w.A.empty() ? detail::kNoPole : 4 * w.index - (static_cast<int>(w.A.size()) - 1))
                 : detail::leading_valuation(w.A);
    int vb = inf ? (w.B.empty() ? detail::kNoPole : 6 * w.index - (static_cast<int>(w.B.size()) - 1))
                 : detail::leading_valuation(w.B);
    if (std::min(va, 1 << 20) != std::min(fib->va, 1 << 20) || std::min(vb, 1 << 20) != std::min(fib->vb, 1 << 20))
      throw InvalidArgument("model is not minimal at the section's place");
    if (fib->symbol.type == KodairaType::I)
      throw InvalidArgument("component index for multiplicative fibers is not derived");
    bool through_singular = vx > 0 && vy > 0;
    out.contributions.push_back({fib->symbol, through_singular ? 1u : 0u});
  }
  return out;
}

namespace detail {

inline std::string join_fibers(std::vector<KodairaSymbol> v) {
  std::sort(v.begin(), v.end());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].name();
  return out.empty() ? "-" : out;
}

inline bool same_genus(const GramLattice& a, const GramLattice& b) {
  if (a.rank() != b.rank() || !(a.signature() == b.signature())) return false;
  return fqf_equivalent(discriminant_form(a), discriminant_form(b));
}

}  // namespace detail

inline std::vector<CheckResult> lattice_checks(const K3CatalogEntry& e) {
  std::vector<CheckResult> out;
  auto add = [&](std::string n, bool ok, std::string d) {
    out.push_back({std::move(n), ok ? CheckStatus::pass : CheckStatus::fail, std::move(d)});
  };
  std::size_t phi = euler_phi(e.k);
  std::size_t rho = e.S.rank();
  add("lattice-rank", e.T.rank() == phi && rho + e.T.rank() == 22,
      "rank S = " + std::to_string(rho) + ", rank T = " + std::to_string(e.T.rank()) + ", phi(k) = " + std::to_string(phi));
  Signature ss = e.S.signature(), ts = e.T.signature();
  add("lattice-signature",
      ss == Signature{1, static_cast<int>(rho) - 1} && ts == Signature{2, 20 - static_cast<int>(rho)},
      "S " + ss.to_string() + ", T " + ts.to_string());
  BigInt ds = e.S.determinant(), dt = e.T.determinant();
  bool det_ok = abs(ds) == abs(dt) && (e.unimodular == (abs(ds) == 1));
  if (e.fibration) det_ok = det_ok && ds == e.fibration->disc;
  add("lattice-determinant", det_ok, "det S = " + ds.str() + ", det T = " + dt.str());
  auto nk = nikulin_complement_check(e.S, e.T);
  add("nikulin", nk.ok, nk.ok ? "q_S = -q_T" : "failed: " + nk.failure);
  return out;
}

inline std::vector<CheckResult> mirror_checks(const K3CatalogEntry& e) {
  std::vector<CheckResult> out;
  auto split = mirror_split(e.T);
  if (e.mirror == "none") {
    out.push_back({"mirror", split.exists ? CheckStatus::fail : CheckStatus::pass,
                   split.exists ? "unexpected splitting" : "none: " + split.reason});
    return out;
  }
  if (!split.exists) {
    out.push_back({"mirror", CheckStatus::fail, "no U2 splitting: " + split.reason});
    return out;
  }
  std::string d = "T = U2 + M via " + split.method + ", M = " + split.complement->describe() +
                  " (rank " + std::to_string(split.complement->rank()) + ", det " +
                  split.complement->determinant().str() + ")";
  bool ok = true;
  for (unsigned p : e.mirror_partners) {
    const auto& other = catalog_entry(p);
    bool g = detail::same_genus(*split.complement, other.S);
    ok = ok && g;
    d += "; S(" + std::to_string(p) + ") " + (g ? "matches" : "differs");
  }
  out.push_back({"mirror", ok ? CheckStatus::pass : CheckStatus::fail, d});
  return out;
}

// Fibration data, Euler sum and section checks, using the fibers found over F_q
inline std::vector<CheckResult> fibration_checks(const K3CatalogEntry& e, std::uint32_t q) {
  std::vector<CheckResult> out;
  auto add = [&](std::string n, CheckStatus s, std::string d) { out.push_back({std::move(n), s, std::move(d)}); };
  auto add_bool = [&](std::string n, bool ok, std::string d) {
    add(std::move(n), ok ? CheckStatus::pass : CheckStatus::fail, std::move(d));
  };
  if (!e.elliptic) {
    add("fibers", CheckStatus::skip, "double sextic, no elliptic fibration");
    return out;
  }
  auto count = count_entry(make_field(q), e);
  std::vector<KodairaSymbol> reducible;
  for (const auto& f : count.bad_fibers)
    if (f.symbol.reducible()) reducible.push_back(f.symbol);
  add_bool("euler", count.euler_sum == 24, "sum of local Euler numbers = " + std::to_string(count.euler_sum));
  if (!e.fibration) {
    add("fibers", CheckStatus::pass, "reducible fibers " + detail::join_fibers(reducible));
    return out;
  }
  const auto& fr = *e.fibration;
  bool same = detail::join_fibers(reducible) == detail::join_fibers(fr.reducible_fibers);
  add_bool("fibers", same, "found " + detail::join_fibers(reducible) + ", table " + detail::join_fibers(fr.reducible_fibers));
  if (fr.section) {
    add_bool("section", section_on_curve(*e.weierstrass, *fr.section),
             "P = (" + fr.section->x.to_string() + ", " + fr.section->y.to_string() + ") over Z[i]");
    auto sd = derive_section_data(*e.weierstrass, *fr.section, count.bad_fibers);
    Rational h = height(sd);
    add_bool("height", h == *fr.height, "(P.O) = " + std::to_string(sd.pai) + ", h(P) = " + to_string(h));
    BigInt disc = signed_discriminant(disc_from_height(h, reducible), e.S.rank());
    add_bool("disc", disc == fr.disc && disc == e.S.determinant(), "disc(S) = " + disc.str());
    auto qf = discriminant_form(e.S);
    Rational target = -1 / h;
    bool cyc = qf.orders == std::vector<long long>{static_cast<long long>(e.k)} && has_generator_with_value(qf, target);
    add_bool("discriminant-form", cyc, "q_S = " + qf.describe() + ", generator value " + to_string(reduce_mod(target, 2)));
  } else {
    BigInt prod = 1;
    for (const auto& f : reducible) prod *= f.root_discriminant();
    BigInt disc = signed_discriminant(prod, e.S.rank());
    add_bool("disc", disc == fr.disc && disc == e.S.determinant(), "disc(S) = " + disc.str() + " from the trivial lattice");
  }
  return out;
}

inline constexpr std::uint64_t kHeckeCountCap = 10'000'000;  // p^4 bound for the F_{p^2} count

inline EntryReport verify_entry(const K3CatalogEntry& e, std::vector<std::uint32_t> primes = {}) {
  EntryReport r;
  r.k = e.k;
  if (primes.empty()) primes = default_primes(e);
  for (auto q : primes) require_entry_prime(e, q);
  r.primes = primes;
  auto add = [&](std::string n, CheckStatus s, std::string d) { r.checks.push_back({std::move(n), s, std::move(d)}); };
  auto add_bool = [&](std::string n, bool ok, std::string d) {
    add(std::move(n), ok ? CheckStatus::pass : CheckStatus::fail, std::move(d));
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& ex) {
      add(name, CheckStatus::fail, std::string("error: ") + ex.what());
    }
  };

  // Delsarte side
  if (!e.cover) {
    add("cover", CheckStatus::skip, "no Fermat cover for k = 3");
    add("characters", CheckStatus::skip, "no Fermat cover for k = 3");
  } else {
    guarded("cover", [&] {
      auto c = verify_cover(e.cover->chart, e.cover->map);
      add_bool("cover", c.divisible && e.m == theorem_degree(e.k),
               "m = " + std::to_string(e.m) + " on " + e.cover->chart_text + ": " +
                   e.cover->map.describe(e.cover->chart.variables) +
                   (c.divisible ? "" : "; remainder " + c.remainder));
      if (e.cover->chart_at_infinity) {
        auto composed = compose_chart_at_infinity(e.cover->map);
        auto cc = verify_cover(e.equation, composed);
        add_bool("cover-composed", cc.divisible, composed.describe(e.equation.variables));
      }
    });
    guarded("characters", [&] {
      auto tc = entry_characters(e);
      auto expected = e.expected_characters();
      std::set<CharacterVector> a(tc.characters.begin(), tc.characters.end()), b(expected.begin(), expected.end());
      std::size_t phi = euler_phi(e.k);
      auto orbit = galois_orbit(tc.characters.front());
      bool single = std::set<CharacterVector>(orbit.begin(), orbit.end()) == a;
      add_bool("characters", a == b && a.size() == phi && single,
               std::to_string(a.size()) + " characters, rho = " + std::to_string(tc.picard_number) +
                   (a == b ? ", equal to the table row" : ", differ from the table row") +
                   (single ? ", single orbit" : ", several orbits"));
      std::size_t hodge = std::count_if(a.begin(), a.end(), [](const CharacterVector& c) { return alpha_norm(c) == 1; });
      add_bool("characters-hodge", hodge == 1, std::to_string(hodge) + " member(s) with |alpha| = 1");
      auto derived_first = printed_bracket(e, tc.characters.front());
      auto printed_first = e.expected_brackets.front();
      if (derived_first == printed_first)
        add("characters-first-entry", CheckStatus::pass, "first entry " + to_bracket_string(printed_first) + " has |alpha| = 1");
      else
        add("characters-first-entry", CheckStatus::discrepancy,
            "printed first entry " + to_bracket_string(printed_first) + " has |alpha| = " +
                std::to_string(alpha_norm(expected.front())) + "; the |alpha| = 1 member is " +
                to_bracket_string(derived_first));
    });
  }
  guarded("action", [&] {
    auto fa = action_on_form(e.equation, e.k, e.action_in_surface_order(), e.action_fiber_variable);
    add_bool("action", fa.primitive,
             "equation invariant; omega -> zeta_" + std::to_string(e.k) + "^" + std::to_string(fa.exponent) + " omega");
  });

  guarded("lattice", [&] {
    for (auto& c : lattice_checks(e)) r.checks.push_back(std::move(c));
  });

  guarded("fibers", [&] {
    for (auto& c : fibration_checks(e, primes.front())) r.checks.push_back(std::move(c));
  });

  // zeta versus count
  for (auto q : primes) {
    std::string name = "zeta-count q=" + std::to_string(q);
    guarded(name, [&] {
      auto z = zeta_report(e, q);
      bool fe = functional_equation_holds(z.R_t, q) && z.R_t.degree() == static_cast<int>(euler_phi(e.k));
      add_bool("zeta-shape q=" + std::to_string(q), fe,
               "deg R_t = " + std::to_string(z.R_t.degree()) + ", n+ = " + std::to_string(z.n_plus) +
                   ", n- = " + std::to_string(z.n_minus));
      if (!e.elliptic) {
        add(name, CheckStatus::skip, "skipped: out of scope (affine-only oracle for the double sextic)");
        return;
      }
      auto count = count_entry(make_field(q), e).total;
      add_bool(name, count == z.predicted_count,
               "count " + count.str() + ", predicted " + z.predicted_count.str() + " (trace " + z.trace.str() + ")");
      if (e.k == 3 && q % 3 == 1 && std::uint64_t(q) * q * q * q <= kHeckeCountCap) {
        auto cm = cm_factor_k3(q, z.trace);
        PrimeSquareField f2(q);
        BigInt c2 = count_entry(f2, e).total;
        BigInt q2 = BigInt(q) * q;
        BigInt pred = 1 + q2 * q2 + 20 * q2 + cm.hecke_trace;
        add_bool("hecke q=" + std::to_string(q) + "^2", c2 == pred,
                 "count over F_" + q2.str() + " = " + c2.str() + ", t^2 - 2p^2 gives " + pred.str());
      }
    });
  }

  guarded("mirror", [&] {
    for (auto& c : mirror_checks(e)) r.checks.push_back(std::move(c));
  });
  return r;
}

}  // namespace k3
