#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/numeric.hpp"

namespace k3 {

// alpha = (a0, a1, a2, a3) with 0 < a_i < m and sum = 0 mod m
struct CharacterVector {
  unsigned m = 0;
  std::array<unsigned, 4> a{};

  static CharacterVector from_full(unsigned m, std::array<long long, 4> full) {
    CharacterVector c;
    c.m = m;
    long long s = 0;
    for (int i = 0; i < 4; ++i) {
      long long r = mod(full[i], static_cast<long long>(m));
      if (r == 0) throw InvalidArgument("character entries must be nonzero mod m");
      c.a[i] = static_cast<unsigned>(r);
      s += r;
    }
    if (s % m != 0) throw InvalidArgument("character entries must sum to 0 mod m");
    return c;
  }
  // bracket [a1,a2,a3]; a0 is determined by the sum condition
  static CharacterVector from_bracket(unsigned m, std::array<long long, 3> b) {
    long long s = b[0] + b[1] + b[2];
    return from_full(m, {-s, b[0], b[1], b[2]});
  }

  std::array<unsigned, 3> bracket() const { return {a[1], a[2], a[3]}; }

  friend auto operator<=>(const CharacterVector&, const CharacterVector&) = default;
};

inline std::string to_bracket_string(const std::array<unsigned, 3>& b) {
  return "[" + std::to_string(b[0]) + "," + std::to_string(b[1]) + "," + std::to_string(b[2]) +
         "]";
}

inline std::string to_bracket_string(const CharacterVector& c) {
  return to_bracket_string(c.bracket());
}

inline std::vector<CharacterVector> enumerate_A(unsigned m) {
  std::vector<CharacterVector> out;
  if (m < 2) return out;
  for (unsigned a1 = 1; a1 < m; ++a1)
    for (unsigned a2 = 1; a2 < m; ++a2)
      for (unsigned a3 = 1; a3 < m; ++a3) {
        unsigned s = (a1 + a2 + a3) % m;
        if (s == 0) continue;
        out.push_back(CharacterVector{m, {m - s, a1, a2, a3}});
      }
  return out;
}

// |alpha| = (a0+a1+a2+a3)/m, always in {1,2,3}
inline int alpha_norm(const CharacterVector& c) {
  unsigned s = c.a[0] + c.a[1] + c.a[2] + c.a[3];
  return static_cast<int>(s / c.m);
}

inline CharacterVector scale(const CharacterVector& c, unsigned u) {
  CharacterVector r = c;
  for (auto& x : r.a) x = static_cast<unsigned>((std::uint64_t(x) * u) % c.m);
  return r;
}

inline bool is_algebraic(const CharacterVector& c) {
  for (unsigned u : units_mod(c.m))
    if (alpha_norm(scale(c, u)) != 2) return false;
  return true;
}

inline std::vector<CharacterVector> galois_orbit(const CharacterVector& c) {
  std::set<CharacterVector> s;
  for (unsigned u : units_mod(c.m)) s.insert(scale(c, u));
  return {s.begin(), s.end()};
}

// V(alpha) lies in H^{|alpha|-1, 3-|alpha|}
inline std::pair<int, int> hodge_type(const CharacterVector& c) {
  int n = alpha_norm(c);
  return {n - 1, 3 - n};
}

}  // namespace k3
