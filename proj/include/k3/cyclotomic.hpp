#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/numeric.hpp"

namespace k3 {

// Dense integer polynomial, ascending coefficients, no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (auto v : coeffs) c_.emplace_back(v);
    trim();
  }

  static IntPolynomial monomial(const BigInt& c, std::size_t deg) {
    std::vector<BigInt> v(deg + 1);
    v[deg] = c;
    return IntPolynomial(std::move(v));
  }

  const std::vector<BigInt>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) + b.coefficient(i);
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<BigInt> v(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coefficient(i) - b.coefficient(i);
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(v));
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial pow(unsigned e) const {
    IntPolynomial r{1};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  BigInt evaluate(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  // exact quotient by a monic divisor; throws if the remainder is nonzero
  IntPolynomial divide_exact(const IntPolynomial& d) const {
    if (d.is_zero() || d.c_.back() != 1) throw InvalidArgument("divisor must be monic");
    std::vector<BigInt> r = c_;
    int dd = d.degree();
    if (degree() < dd) {
      if (!is_zero()) throw InvalidArgument("polynomial division is not exact");
      return {};
    }
    std::vector<BigInt> q(degree() - dd + 1);
    for (int i = degree(); i >= dd; --i) {
      BigInt c = r[i];
      q[i - dd] = c;
      if (c != 0)
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= c * d.c_[j];
    }
    for (auto& v : r)
      if (v != 0) throw InvalidArgument("polynomial division is not exact");
    return IntPolynomial(std::move(q));
  }

  std::string to_string(char var = 'T') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      BigInt a = abs(c_[i]);
      bool neg = c_[i] < 0;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (i == 0 || a != 1) out += a.str();
      if (i > 0) {
        if (a != 1) out += "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline IntPolynomial cyclotomic_poly(unsigned m) {
  if (m == 0) throw InvalidArgument("cyclotomic_poly needs m >= 1");
  IntPolynomial p = IntPolynomial::monomial(1, m) - IntPolynomial{1};
  for (unsigned d : divisors(m))
    if (d < m) p = p.divide_exact(cyclotomic_poly(d));
  return p;
}

namespace detail {

// Phi_m as small integers, cached per conductor
inline const std::vector<long long>& cyclotomic_table(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<long long>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<long long> v;
  const IntPolynomial phi = cyclotomic_poly(m);
  for (const auto& c : phi.coefficients()) v.push_back(to_int64(c));
  return cache.emplace(m, std::move(v)).first->second;
}

// reduce a coefficient vector (any length) in place modulo Phi_m, result length phi(m)
template <class Int>
void reduce_mod_cyclotomic(std::vector<Int>& v, unsigned m) {
  const auto& phi = cyclotomic_table(m);
  std::size_t d = phi.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    Int c = v[i];
    for (std::size_t j = 0; j < d; ++j)
      if (phi[j] != 0) v[i - d + j] -= c * Int(phi[j]);
    v[i] = 0;
  }
  v.resize(d);
}

}  // namespace detail

// Element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
template <class Int>
class BasicCycInt {
 public:
  explicit BasicCycInt(unsigned m = 1) : m_(m), c_(detail::cyclotomic_table(m).size() - 1) {}

  static BasicCycInt from_integer(unsigned m, const Int& n) {
    BasicCycInt r(m);
    r.c_[0] = n;
    return r;
  }
  static BasicCycInt zeta_power(unsigned m, long long e) {
    std::vector<Int> raw(m);
    raw[mod(e, static_cast<long long>(m))] = 1;
    return from_group_ring(m, std::move(raw));
  }
  // raw[j] is the coefficient of zeta^j, j taken mod m
  static BasicCycInt from_group_ring(unsigned m, std::vector<Int> raw) {
    if (raw.size() > m) {
      std::vector<Int> folded(m);
      for (std::size_t j = 0; j < raw.size(); ++j) folded[j % m] += raw[j];
      raw = std::move(folded);
    }
    detail::reduce_mod_cyclotomic(raw, m);
    BasicCycInt r(m);
    r.c_ = std::move(raw);
    return r;
  }
  static BasicCycInt from_coefficients(unsigned m, std::vector<Int> coeffs) {
    return from_group_ring(m, std::move(coeffs));
  }

  unsigned conductor() const { return m_; }
  const std::vector<Int>& coefficients() const { return c_; }
  bool is_zero() const {
    for (const auto& v : c_)
      if (v != 0) return false;
    return true;
  }

  friend BasicCycInt operator+(const BasicCycInt& a, const BasicCycInt& b) {
    check(a, b);
    BasicCycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend BasicCycInt operator-(const BasicCycInt& a, const BasicCycInt& b) {
    check(a, b);
    BasicCycInt r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  BasicCycInt operator-() const {
    BasicCycInt r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend BasicCycInt operator*(const BasicCycInt& a, const BasicCycInt& b) {
    check(a, b);
    std::vector<Int> v(2 * a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    detail::reduce_mod_cyclotomic(v, a.m_);
    BasicCycInt r(a.m_);
    r.c_ = std::move(v);
    return r;
  }
  BasicCycInt& operator+=(const BasicCycInt& b) { return *this = *this + b; }
  BasicCycInt& operator-=(const BasicCycInt& b) { return *this = *this - b; }
  BasicCycInt& operator*=(const BasicCycInt& b) { return *this = *this * b; }
  friend bool operator==(const BasicCycInt& a, const BasicCycInt& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

  // zeta -> zeta^u for u coprime to m
  BasicCycInt galois(long long u) const {
    long long uu = mod(u, static_cast<long long>(m_));
    if (std::gcd(static_cast<unsigned long long>(uu), static_cast<unsigned long long>(m_)) != 1)
      throw InvalidArgument("galois_apply needs a unit");
    std::vector<Int> raw(m_);
    for (std::size_t j = 0; j < c_.size(); ++j)
      if (c_[j] != 0) raw[(j * uu) % m_] += c_[j];
    return from_group_ring(m_, std::move(raw));
  }
  BasicCycInt conj() const { return galois(-1); }

  std::optional<Int> as_rational_integer() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (c_[j] != 0) return std::nullopt;
    return c_[0];
  }

  template <class Other>
  BasicCycInt<Other> convert() const {
    std::vector<Other> v;
    for (const auto& x : c_) v.push_back(Other(x));
    return BasicCycInt<Other>::from_coefficients(m_, std::move(v));
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j] == 0) continue;
      BigInt a = BigInt(c_[j]);
      bool neg = a < 0;
      if (neg) a = -a;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (j == 0 || a != 1) out += a.str();
      if (j > 0) {
        if (a != 1) out += "*";
        out += "z";
        if (j > 1) out += "^" + std::to_string(j);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static void check(const BasicCycInt& a, const BasicCycInt& b) {
    if (a.m_ != b.m_)
      throw ConductorMismatch("conductors " + std::to_string(a.m_) + " and " +
                              std::to_string(b.m_));
  }
  unsigned m_;
  std::vector<Int> c_;
};

using CycInt = BasicCycInt<BigInt>;
using SmallCycInt = BasicCycInt<long long>;

template <class Int>
BasicCycInt<Int> galois_apply(const BasicCycInt<Int>& x, long long u) {
  return x.galois(u);
}

// prod (1 - v T) over the given values; must land in Z[T]
template <class Int>
IntPolynomial orbit_product(std::span<const BasicCycInt<Int>> values) {
  if (values.empty()) return IntPolynomial{1};
  unsigned m = values.front().conductor();
  std::vector<BasicCycInt<Int>> c{BasicCycInt<Int>::from_integer(m, Int(1))};
  for (const auto& v : values) {
    c.emplace_back(m);
    for (std::size_t i = c.size() - 1; i >= 1; --i) c[i] = c[i] - v * c[i - 1];
  }
  std::vector<BigInt> out;
  for (const auto& x : c) {
    auto r = x.as_rational_integer();
    if (!r) throw NonIntegralOrbit("orbit product has a non-rational coefficient");
    out.emplace_back(*r);
  }
  return IntPolynomial(std::move(out));
}

template <class Int>
IntPolynomial orbit_product(const std::vector<BasicCycInt<Int>>& values) {
  return orbit_product(std::span<const BasicCycInt<Int>>(values));
}

}  // namespace k3
