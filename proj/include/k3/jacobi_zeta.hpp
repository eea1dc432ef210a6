#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3/characters.hpp"
#include "k3/cyclotomic.hpp"
#include "k3/error.hpp"
#include "k3/field.hpp"
#include "k3/numeric.hpp"

namespace k3 {

inline void require_admissible(const PrimeField& f, unsigned m) {
  if (m == 0 || (f.p() - 1) % m != 0)
    throw NotAdmissible("q = " + std::to_string(f.p()) + " is not 1 mod " + std::to_string(m));
}

// Bulk evaluator: the dlog triples (L(v1), L(v2), L(v3)) mod m with v1 + v2 + v3 = -1
class JacobiEvaluator {
 public:
  JacobiEvaluator(const PrimeField& f, unsigned m) : m_(m), q_(f.p()) {
    require_admissible(f, m);
    if (m > 65535) throw TooLarge("conductor too large");
    std::uint32_t p = f.p();
    triples_.reserve(std::size_t(p) * p);
    for (std::uint32_t v1 = 1; v1 < p; ++v1) {
      auto l1 = static_cast<std::uint16_t>(f.dlog(FieldElement{v1}) % m);
      for (std::uint32_t v2 = 1; v2 < p; ++v2) {
        std::uint32_t v3 = static_cast<std::uint32_t>((2ull * p - 1 - v1 - v2) % p);
        if (v3 == 0) continue;
        triples_.push_back({l1, static_cast<std::uint16_t>(f.dlog(FieldElement{v2}) % m),
                            static_cast<std::uint16_t>(f.dlog(FieldElement{v3}) % m)});
      }
    }
  }

  unsigned conductor() const { return m_; }
  std::uint32_t q() const { return q_; }

  template <class Int = BigInt>
  BasicCycInt<Int> evaluate(const CharacterVector& alpha) const {
    if (alpha.m != m_) throw ConductorMismatch("character conductor differs from evaluator");
    std::array<std::vector<unsigned>, 3> t;
    for (int i = 0; i < 3; ++i) {
      t[i].resize(m_);
      for (unsigned d = 0; d < m_; ++d) t[i][d] = (alpha.a[i + 1] * d) % m_;
    }
    std::vector<long long> hist(3 * m_, 0);
    for (const auto& tr : triples_) ++hist[t[0][tr[0]] + t[1][tr[1]] + t[2][tr[2]]];
    std::vector<Int> raw(m_, Int(0));
    for (unsigned i = 0; i < 3 * m_; ++i) raw[i % m_] += Int(hist[i]);
    return BasicCycInt<Int>::from_group_ring(m_, std::move(raw));
  }

 private:
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::array<std::uint16_t, 3>> triples_;
};

template <class Int = BigInt>
BasicCycInt<Int> jacobi_sum(const PrimeField& f, unsigned m, const CharacterVector& alpha) {
  require_admissible(f, m);
  if (alpha.m != m) throw ConductorMismatch("character conductor differs from m");
  std::uint32_t p = f.p();
  std::vector<Int> raw(m, Int(0));
  for (std::uint32_t v1 = 1; v1 < p; ++v1)
    for (std::uint32_t v2 = 1; v2 < p; ++v2) {
      std::uint32_t v3 = static_cast<std::uint32_t>((2ull * p - 1 - v1 - v2) % p);
      if (v3 == 0) continue;
      std::uint64_t e = std::uint64_t(alpha.a[1]) * f.dlog(FieldElement{v1}) +
                        std::uint64_t(alpha.a[2]) * f.dlog(FieldElement{v2}) +
                        std::uint64_t(alpha.a[3]) * f.dlog(FieldElement{v3});
      raw[e % m] += 1;
    }
  return BasicCycInt<Int>::from_group_ring(m, std::move(raw));
}

// P(T) = (1 - qT) prod_{alpha in A_m} (1 - j(alpha) T), product taken orbit by orbit
inline IntPolynomial fermat_zeta_factor(const PrimeField& f, unsigned m) {
  IntPolynomial out{1, -static_cast<long long>(f.p())};
  if (m < 2) return out;
  JacobiEvaluator ev(f, m);
  std::map<CharacterVector, bool> done;
  for (const auto& a : enumerate_A(m)) {
    if (done.count(a)) continue;
    std::vector<CycInt> vals;
    for (const auto& b : galois_orbit(a)) {
      done[b] = true;
      vals.push_back(ev.evaluate(b));
    }
    out = out * orbit_product(vals);
  }
  return out;
}

inline IntPolynomial fermat_zeta_factor(unsigned m, std::uint32_t q) {
  return fermat_zeta_factor(make_field(q), m);
}

struct TranscendentalFactor {
  IntPolynomial polynomial;
  std::vector<std::pair<CharacterVector, CycInt>> values;
  BigInt trace = 0;  // sum of j(alpha)
};

inline TranscendentalFactor transcendental_factor(const PrimeField& f, unsigned m,
                                                  const std::vector<CharacterVector>& chars) {
  JacobiEvaluator ev(f, m);
  TranscendentalFactor out;
  std::vector<CycInt> vals;
  CycInt sum(m);
  for (const auto& c : chars) {
    CycInt j = ev.evaluate(c);
    sum += j;
    vals.push_back(j);
    out.values.emplace_back(c, j);
  }
  auto t = sum.as_rational_integer();
  if (!t) throw NonIntegralOrbit("sum of Jacobi sums is not a rational integer");
  out.trace = *t;
  out.polynomial = orbit_product(vals);
  return out;
}

// multiset of reciprocal roots stable under r -> q^2/r
inline bool functional_equation_holds(const IntPolynomial& p, std::uint64_t q) {
  int d = p.degree();
  if (d < 0) return false;
  BigInt cd = p.coefficient(d), q2 = BigInt(q) * q, w = 1;
  for (int j = 0; j <= d; ++j) {
    if (p.coefficient(d - j) * w != cd * p.coefficient(j)) return false;
    w *= q2;
  }
  return true;
}

struct AlgebraicFactor {
  int n_minus = 0;
  int n_plus = 0;
  IntPolynomial polynomial;
};

inline AlgebraicFactor algebraic_factor(unsigned k, std::uint64_t q) {
  if (std::gcd(q, std::uint64_t(2) * k) != 1)
    throw InvalidArgument("q must be coprime to 2k");
  AlgebraicFactor out;
  if (q % 4 == 3) {
    switch (k) {
      case 25: case 27: out.n_minus = 1; break;
      case 9: case 11: case 17: out.n_minus = 2; break;
      case 7: out.n_minus = 3; break;
      default: break;
    }
  }
  out.n_plus = 22 - static_cast<int>(euler_phi(k)) - out.n_minus;
  long long sq = static_cast<long long>(q);
  out.polynomial = IntPolynomial{1, -sq}.pow(out.n_plus) * IntPolynomial{1, sq}.pow(out.n_minus);
  return out;
}

struct CmFactor {
  bool split = false;
  std::vector<BigInt> candidates;  // traces of u * pi^2 over unit squares u
  BigInt trace = 0;
  IntPolynomial polynomial;
  BigInt hecke_trace = 0;  // trace over F_{p^2}: t^2 - 2p^2
};

// Eisenstein integers a + b w, w^2 = -1 - w
struct Eisenstein {
  BigInt a, b;
  Eisenstein operator*(const Eisenstein& o) const {
    return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
  }
  BigInt trace() const { return 2 * a - b; }
  BigInt norm() const { return a * a - a * b + b * b; }
};

inline std::vector<BigInt> cm_candidate_traces(std::uint32_t p) {
  for (long long a = 0; a * a <= 4ll * p; ++a)
    for (long long b = 0; b <= a; ++b) {
      Eisenstein pi{a, b};
      if (pi.norm() != p) continue;
      Eisenstein sq = pi * pi;
      std::vector<BigInt> out;
      Eisenstein u{1, 0};
      for (int i = 0; i < 3; ++i) {
        out.push_back((u * sq).trace());
        u = u * Eisenstein{0, 1};
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  throw InvalidArgument(std::to_string(p) + " is not a norm from Z[zeta_3]");
}

// observed_trace: count - 1 - p^2 - 20p from the smooth point count (needed for split p)
inline CmFactor cm_factor_k3(std::uint32_t p, std::optional<BigInt> observed_trace = std::nullopt) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  if (p == 2 || p == 3) throw InvalidArgument("p must be different from 2 and 3");
  CmFactor out;
  BigInt p2 = BigInt(p) * p;
  if (p % 3 == 2) {
    out.polynomial = IntPolynomial(std::vector<BigInt>{1, 0, -p2});
    out.hecke_trace = -2 * p2;
    return out;
  }
  out.split = true;
  out.candidates = cm_candidate_traces(p);
  if (!observed_trace) throw InvalidArgument("split prime needs the observed trace");
  if (std::find(out.candidates.begin(), out.candidates.end(), *observed_trace) == out.candidates.end())
    throw Error("observed trace " + observed_trace->str() + " matches no candidate");
  out.trace = *observed_trace;
  out.polynomial = IntPolynomial(std::vector<BigInt>{1, -out.trace, p2});
  out.hecke_trace = out.trace * out.trace - 2 * p2;
  return out;
}

// For algebraic alpha, j(alpha) = sign * q * zeta_m^e; returns (sign, e)
template <class Int>
std::optional<std::pair<int, unsigned>> root_of_unity_diagnostic(const BasicCycInt<Int>& j, std::uint64_t q) {
  unsigned m = j.conductor();
  for (int s : {1, -1})
    for (unsigned e = 0; e < m; ++e) {
      auto z = BasicCycInt<Int>::zeta_power(m, e) * BasicCycInt<Int>::from_integer(m, Int(s) * Int(q));
      if (z == j) return std::make_pair(s, e);
    }
  return std::nullopt;
}

struct ZetaReport {
  unsigned k = 0;
  std::uint32_t q = 0;
  unsigned m = 0;
  int n_plus = 0, n_minus = 0;
  IntPolynomial R_a, R_t;
  std::vector<std::pair<CharacterVector, CycInt>> jacobi_values;
  BigInt trace = 0;
  BigInt predicted_count = 0;
  std::vector<std::string> notes;
};

inline BigInt predicted_count(std::uint64_t q, const AlgebraicFactor& a, const BigInt& trace) {
  BigInt bq = q;
  return 1 + bq * bq + BigInt(a.n_plus - a.n_minus) * bq + trace;
}

}  // namespace k3
