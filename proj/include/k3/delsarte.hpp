#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "k3/characters.hpp"
#include "k3/cyclotomic.hpp"
#include "k3/error.hpp"
#include "k3/matrix.hpp"
#include "k3/surface.hpp"

namespace k3 {

// Laurent polynomial in U, V, W
template <class Coeff>
class LaurentPoly3 {
 public:
  using Terms = std::map<Exponent3, Coeff>;

  void add(const Exponent3& e, const Coeff& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!is_zero(c)) terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (is_zero(it->second)) terms_.erase(it);
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // multiply by the monomial U^s0 V^s1 W^s2 that makes every exponent nonnegative and minimal
  LaurentPoly3 shifted_to_polynomial() const {
    if (terms_.empty()) return *this;
    Exponent3 mn = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
      for (int i = 0; i < 3; ++i) mn[i] = std::min(mn[i], e[i]);
    LaurentPoly3 out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(Exponent3{e[0] - mn[0], e[1] - mn[1], e[2] - mn[2]}, c);
    return out;
  }

  // remainder modulo U^m + V^m + W^m + 1, U the main variable
  LaurentPoly3 remainder_mod_fermat(int m) const {
    LaurentPoly3 r = *this;
    while (true) {
      auto it = std::find_if(r.terms_.rbegin(), r.terms_.rend(),
                             [m](const auto& kv) { return kv.first[0] >= m; });
      if (it == r.terms_.rend()) break;
      Exponent3 e = it->first;
      Coeff c = it->second;
      Exponent3 base{e[0] - m, e[1], e[2]};
      r.add(e, -c);
      r.add(Exponent3{base[0], base[1] + m, base[2]}, -c);
      r.add(Exponent3{base[0], base[1], base[2] + m}, -c);
      r.add(base, -c);
    }
    return r;
  }

 private:
  static bool is_zero(const BigInt& c) { return c == 0; }
  template <class I>
  static bool is_zero(const BasicCycInt<I>& c) { return c.is_zero(); }
  Terms terms_;
};

// image of a surface variable: zeta_{2m}^root * U^e0 V^e1 W^e2
struct MonomialImage {
  unsigned root = 0;
  Exponent3 exponents{};
  friend bool operator==(const MonomialImage&, const MonomialImage&) = default;
};

struct MonomialMap {
  unsigned m = 0;
  std::vector<MonomialImage> images;  // one per surface variable, in surface order
  friend bool operator==(const MonomialMap&, const MonomialMap&) = default;

  static MonomialImage signed_image(int sign, Exponent3 e, unsigned m) {
    return MonomialImage{sign < 0 ? m : 0u, e};
  }
  std::string describe(const std::vector<std::string>& vars) const {
    std::string out;
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (j) out += ", ";
      out += (j < vars.size() ? vars[j] : "v" + std::to_string(j)) + " -> ";
      const auto& im = images[j];
      unsigned r = im.root % (2 * m);
      if (r == m)
        out += "-";
      else if (r != 0)
        out += "z" + std::to_string(2 * m) + "^" + std::to_string(r) + "*";
      static const char* names[3] = {"U", "V", "W"};
      bool any = false;
      for (int i = 0; i < 3; ++i) {
        if (im.exponents[i] == 0) continue;
        if (any) out += "*";
        out += names[i];
        if (im.exponents[i] != 1) out += "^" + std::to_string(im.exponents[i]);
        any = true;
      }
      if (!any) out += "1";
    }
    return out;
  }
};

struct CoverCheck {
  bool divisible = false;
  std::size_t remainder_terms = 0;
  std::string remainder;
};

inline LaurentPoly3<CycInt> substitute(const DelsarteSurface& s, const MonomialMap& pi) {
  if (s.variables.size() != pi.images.size())
    throw InvalidArgument("map has " + std::to_string(pi.images.size()) +
                          " images for a surface in " + std::to_string(s.variables.size()) +
                          " variables");
  unsigned n = 2 * pi.m;
  LaurentPoly3<CycInt> out;
  for (const auto& t : s.terms) {
    Exponent3 e{0, 0, 0};
    long long root = 0;
    for (std::size_t j = 0; j < pi.images.size(); ++j) {
      root += static_cast<long long>(t.exponents[j]) * pi.images[j].root;
      for (int i = 0; i < 3; ++i) e[i] += t.exponents[j] * pi.images[j].exponents[i];
    }
    out.add(e, CycInt::from_integer(n, t.coefficient) * CycInt::zeta_power(n, root));
  }
  return out;
}

inline CoverCheck verify_cover(const DelsarteSurface& s, const MonomialMap& pi) {
  if (pi.m == 0) throw InvalidArgument("map degree must be positive");
  auto rem = substitute(s, pi).shifted_to_polynomial().remainder_mod_fermat(static_cast<int>(pi.m));
  CoverCheck out;
  out.divisible = rem.is_zero();
  out.remainder_terms = rem.terms().size();
  std::size_t shown = 0;
  for (const auto& [e, c] : rem.terms()) {
    if (shown++ == 6) {
      out.remainder += " + ...";
      break;
    }
    out.remainder += (out.remainder.empty() ? "" : " + ") + std::string("(") + c.to_string() +
                     ")*U^" + std::to_string(e[0]) + "*V^" + std::to_string(e[1]) + "*W^" +
                     std::to_string(e[2]);
  }
  return out;
}

struct DeckGroup {
  unsigned m = 0;
  std::vector<Exponent3> generators;       // elements (c1,c2,c3) of (Z/m)^3
  std::vector<unsigned> generator_orders;  // order of each generator
  BigInt order() const {
    BigInt r = 1;
    for (auto o : generator_orders) r *= o;
    return r;
  }
};

inline Matrix exponent_matrix(const MonomialMap& pi) {
  Matrix e;
  for (const auto& im : pi.images) {
    std::vector<BigInt> row;
    for (int i = 0; i < 3; ++i) row.emplace_back(im.exponents[i]);
    e.push_back(std::move(row));
  }
  return e;
}

// {c in (Z/m)^3 : every image monomial is invariant under U,V,W -> zeta^c U, ...}
inline DeckGroup compute_G(const MonomialMap& pi) {
  Matrix e = exponent_matrix(pi);
  if (e.size() != 3) throw InvalidArgument("compute_G needs a map in three variables");
  SmithForm snf = smith_normal_form(e);
  DeckGroup g;
  g.m = pi.m;
  long long m = pi.m;
  for (int i = 0; i < 3; ++i) {
    long long d = to_int64(snf.diag[i][i]);
    long long order = std::gcd(d, m);  // d = 0 gives m
    if (order == 1) continue;
    long long step = m / order;
    Exponent3 c{};
    for (int r = 0; r < 3; ++r) c[r] = static_cast<int>(mod(to_int64(snf.right[r][i] * step), m));
    g.generators.push_back(c);
    g.generator_orders.push_back(static_cast<unsigned>(order));
  }
  return g;
}

inline bool is_invariant(const CharacterVector& a, const DeckGroup& g) {
  for (const auto& c : g.generators) {
    long long s = 0;
    for (int i = 0; i < 3; ++i) s += static_cast<long long>(a.a[i + 1]) * c[i];
    if (s % g.m != 0) return false;
  }
  return true;
}

inline std::vector<CharacterVector> invariant_characters(const DeckGroup& g) {
  std::vector<CharacterVector> out;
  for (const auto& a : enumerate_A(g.m))
    if (is_invariant(a, g)) out.push_back(a);
  return out;
}

struct TranscendentalCharacters {
  unsigned m = 0;
  std::vector<CharacterVector> characters;  // |alpha| = 1 member first when unique
  int picard_number = 0;
};

inline void order_hodge_first(std::vector<CharacterVector>& v) {
  std::stable_sort(v.begin(), v.end(), [](const CharacterVector& x, const CharacterVector& y) {
    return (alpha_norm(x) == 1) > (alpha_norm(y) == 1);
  });
}

inline TranscendentalCharacters transcendental_characters(const DelsarteSurface& s,
                                                          const MonomialMap& pi) {
  auto check = verify_cover(s, pi);
  if (!check.divisible)
    throw CoverInconsistent("map does not cover the surface; remainder " + check.remainder);
  TranscendentalCharacters out;
  out.m = pi.m;
  for (const auto& a : invariant_characters(compute_G(pi)))
    if (!is_algebraic(a)) out.characters.push_back(a);
  order_hodge_first(out.characters);
  out.picard_number = 22 - static_cast<int>(out.characters.size());
  return out;
}

// Shioda's recipe for a four-monomial surface with coefficients +-1
inline MonomialMap derive_cover(const DelsarteSurface& s) {
  if (s.monomial_count() != 4)
    throw NotDelsarte("derive_cover needs exactly 4 monomials, got " +
                      std::to_string(s.monomial_count()));
  if (s.variables.size() != 3) throw NotDelsarte("derive_cover needs exactly 3 variables");
  for (const auto& t : s.terms)
    if (abs(t.coefficient) != 1) throw NotDelsarte("derive_cover needs coefficients +-1");
  std::size_t base = s.terms.size() - 1;
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    if (s.terms[i].exponents == Exponent3{0, 0, 0}) base = i;
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 4; ++i)
    if (i != base) others.push_back(i);

  Matrix d(3, std::vector<BigInt>(3));
  std::vector<BigInt> rhs_flags(3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c)
      d[r][c] = s.terms[others[r]].exponents[c] - s.terms[base].exponents[c];
    rhs_flags[r] = s.terms[others[r]].coefficient == s.terms[base].coefficient ? 0 : 1;
  }
  if (determinant(d) == 0) throw SingularExponents("exponent matrix is singular");
  auto inv = rational_inverse(d);
  BigInt m = 1;
  for (const auto& row : inv)
    for (const auto& v : row) m = boost::multiprecision::lcm(m, boost::multiprecision::denominator(v));
  // B = m * D^{-1}; row j is the image exponent of variable j
  MonomialMap pi;
  pi.m = static_cast<unsigned>(to_int64(m));
  Matrix b(3, std::vector<BigInt>(3));
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      Rational v = inv[j][i] * Rational(m);
      b[j][i] = boost::multiprecision::numerator(v);
    }

  // roots sigma_j of zeta_{2m} on each variable: D sigma = m * flags (mod 2m)
  long long n = 2 * static_cast<long long>(pi.m);
  SmithForm snf = smith_normal_form(d);
  std::vector<long long> lb(3);
  for (int i = 0; i < 3; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < 3; ++j) acc += snf.left[i][j] * rhs_flags[j] * BigInt(pi.m);
    lb[i] = to_int64(mod(acc, BigInt(n)));
  }
  std::vector<long long> y(3);
  for (int i = 0; i < 3; ++i) {
    long long di = mod(to_int64(snf.diag[i][i]), n);
    long long g = std::gcd(di, n);
    if (lb[i] % g != 0) throw CoverInconsistent("no root-of-unity normalization exists");
    long long nn = n / g, dd = di / g, bb = lb[i] / g;
    long long inv_d = 0;
    for (long long t = 0; t < nn; ++t)
      if ((dd * t) % nn == 1 % nn) {
        inv_d = t;
        break;
      }
    y[i] = mod(bb * inv_d, nn);
  }
  for (int j = 0; j < 3; ++j) {
    BigInt acc = 0;
    for (int i = 0; i < 3; ++i) acc += snf.right[j][i] * y[i];
    MonomialImage im;
    im.root = static_cast<unsigned>(to_int64(mod(acc, BigInt(n))));
    for (int i = 0; i < 3; ++i) im.exponents[i] = static_cast<int>(to_int64(b[j][i]));
    pi.images.push_back(im);
  }
  auto check = verify_cover(s, pi);
  if (!check.divisible) throw CoverInconsistent("derived map fails verification");
  return pi;
}

struct FormAction {
  unsigned exponent = 0;
  bool primitive = false;
};

// action g: v_j -> zeta_k^{a_j} v_j; omega = d(others)/y
inline FormAction action_on_form(const DelsarteSurface& s, unsigned k,
                                 const std::vector<long long>& action,
                                 std::string_view fiber_variable = "y") {
  if (action.size() != s.variables.size())
    throw InvalidArgument("action needs one exponent per variable");
  std::optional<long long> weight;
  for (const auto& t : s.terms) {
    long long w = 0;
    for (std::size_t j = 0; j < action.size(); ++j) w += t.exponents[j] * action[j];
    w = mod(w, static_cast<long long>(k));
    if (weight && *weight != w) throw ActionNotPreserved("action does not preserve the equation");
    weight = w;
  }
  int yi = s.variable_index(fiber_variable);
  if (yi < 0) throw InvalidArgument("no variable named " + std::string(fiber_variable));
  long long e = 0;
  for (std::size_t j = 0; j < action.size(); ++j) e += (static_cast<int>(j) == yi ? -1 : 1) * action[j];
  FormAction out;
  out.exponent = static_cast<unsigned>(mod(e, static_cast<long long>(k)));
  out.primitive = std::gcd(out.exponent, k) == 1;
  return out;
}

// map on (eta, xi, s) for eta^2 = xi^3 + ... composed with t = 1/s, x = xi/s^4, y = eta/s^6
inline MonomialMap compose_chart_at_infinity(const MonomialMap& pi) {
  if (pi.images.size() != 3) throw InvalidArgument("chart composition needs three variables");
  const auto& ey = pi.images[0];
  const auto& ex = pi.images[1];
  const auto& es = pi.images[2];
  unsigned n = 2 * pi.m;
  MonomialMap out;
  out.m = pi.m;
  auto combine = [&](const MonomialImage& a, int k) {
    MonomialImage r;
    r.root = static_cast<unsigned>(mod(static_cast<long long>(a.root) - static_cast<long long>(k) * es.root, n));
    for (int i = 0; i < 3; ++i) r.exponents[i] = a.exponents[i] - k * es.exponents[i];
    return r;
  };
  out.images.push_back(combine(ey, 6));
  out.images.push_back(combine(ex, 4));
  MonomialImage t;
  t.root = static_cast<unsigned>(mod(-static_cast<long long>(es.root), n));
  for (int i = 0; i < 3; ++i) t.exponents[i] = -es.exponents[i];
  out.images.push_back(t);
  return out;
}

}  // namespace k3
