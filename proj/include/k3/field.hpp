#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "k3/error.hpp"
#include "k3/numeric.hpp"

namespace k3 {

// Elements of both field types are indexed by codes 0..q-1; code 0 is zero.
struct FieldElement {
  std::uint32_t value = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
};

template <class F>
concept FiniteField = requires(const F& f, FieldElement a, std::int64_t n) {
  { f.size() } -> std::convertible_to<std::uint64_t>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
  { f.element(n) } -> std::same_as<FieldElement>;
  { f.add(a, a) } -> std::same_as<FieldElement>;
  { f.sub(a, a) } -> std::same_as<FieldElement>;
  { f.mul(a, a) } -> std::same_as<FieldElement>;
  { f.neg(a) } -> std::same_as<FieldElement>;
  { f.inv(a) } -> std::same_as<FieldElement>;
  { f.quadratic_character(a) } -> std::convertible_to<int>;
};

namespace detail {

inline constexpr std::uint64_t kMaxFieldSize = 1u << 24;

// log/exp tables over a cyclic multiplicative group of order q-1
class LogTables {
 public:
  std::uint32_t dlog(FieldElement v) const {
    if (v.value == 0) throw InvalidArgument("dlog of zero");
    return dlog_[v.value];
  }
  FieldElement exp(std::uint64_t j) const { return FieldElement{exp_[j % (q_ - 1)]}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    std::uint64_t s = std::uint64_t(dlog_[a.value]) + dlog_[b.value];
    if (s >= q_ - 1) s -= q_ - 1;
    return FieldElement{exp_[s]};
  }
  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw InvalidArgument("inverse of zero");
    std::uint32_t d = dlog_[a.value];
    return FieldElement{exp_[d == 0 ? 0 : (q_ - 1 - d)]};
  }
  FieldElement pow(FieldElement a, std::int64_t e) const {
    if (a.value == 0) {
      if (e == 0) return FieldElement{exp_[0]};
      if (e < 0) throw InvalidArgument("negative power of zero");
      return a;
    }
    std::int64_t d = mod(std::int64_t(dlog_[a.value]) * mod(e, std::int64_t(q_ - 1)),
                         std::int64_t(q_ - 1));
    return FieldElement{exp_[d]};
  }
  int quadratic_character(FieldElement a) const {
    if (a.value == 0) return 0;
    if (q_ % 2 == 0) return 1;
    return dlog_[a.value] % 2 == 0 ? 1 : -1;
  }
  // number of u with u^n = c
  std::uint64_t nth_power_count(FieldElement c, std::uint64_t n) const {
    if (n == 0) throw InvalidArgument("nth_power_count needs n >= 1");
    if (c.value == 0) return 1;
    std::uint64_t g = std::gcd(n, q_ - 1);
    return dlog_[c.value] % g == 0 ? g : 0;
  }

 protected:
  template <class MulFn>
  void build(std::uint64_t q, FieldElement one, FieldElement gen, MulFn mul) {
    q_ = q;
    exp_.assign(q - 1, 0);
    dlog_.assign(q, 0);
    FieldElement x = one;
    for (std::uint64_t j = 0; j + 1 < q; ++j) {
      exp_[j] = x.value;
      dlog_[x.value] = static_cast<std::uint32_t>(j);
      x = mul(x, gen);
    }
  }
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> dlog_;
};

inline bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
  if (p == 2) return g % 2 == 1;
  if (g % p == 0) return false;
  for (auto r : prime_factors(p - 1))
    if (pow_mod(g, (p - 1) / r, p) == 1) return false;
  return true;
}

}  // namespace detail

class PrimeField : public detail::LogTables {
 public:
  PrimeField(std::uint32_t p, std::uint32_t g) : p_(p), g_(g) {
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    if (p >= detail::kMaxFieldSize) throw TooLarge("field too large for log tables");
    if (!detail::is_primitive_root(g, p))
      throw InvalidArgument(std::to_string(g) + " is not a primitive root mod " +
                            std::to_string(p));
    build(p, FieldElement{1 % p}, FieldElement{g % p},
          [p](FieldElement a, FieldElement b) {
            return FieldElement{std::uint32_t(std::uint64_t(a.value) * b.value % p)};
          });
  }

  std::uint64_t size() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t generator() const { return g_; }

  FieldElement element(std::int64_t v) const {
    return FieldElement{static_cast<std::uint32_t>(mod(v, std::int64_t(p_)))};
  }
  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1 % p_}; }
  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.value + b.value;
    return FieldElement{s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  FieldElement neg(FieldElement a) const { return FieldElement{a.value == 0 ? 0 : p_ - a.value}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return FieldElement{std::uint32_t(std::uint64_t(a.value) * b.value % p_)};
  }
  using LogTables::dlog;
  using LogTables::exp;
  using LogTables::inv;
  using LogTables::nth_power_count;
  using LogTables::pow;
  using LogTables::quadratic_character;

 private:
  std::uint32_t p_;
  std::uint32_t g_;
};

inline std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  for (std::uint32_t g = 1; g < p + 1; ++g)
    if (detail::is_primitive_root(g, p)) return g;
  throw Error("no primitive root");
}

inline PrimeField make_field(std::uint32_t p) { return PrimeField(p, smallest_primitive_root(p)); }
inline PrimeField make_field(std::uint32_t p, std::uint32_t g) { return PrimeField(p, g); }

// F_{p^2} = F_p[i]/(i^2 - n), n the smallest non-residue; code a + b*p is a + b*i.
// Used only for Hecke cross-checks of point counts.
class PrimeSquareField : public detail::LogTables {
 public:
  explicit PrimeSquareField(std::uint32_t p) : p_(p) {
    if (!is_prime(p) || p == 2) throw NotPrime("PrimeSquareField needs an odd prime");
    if (std::uint64_t(p) * p >= detail::kMaxFieldSize) throw TooLarge("field too large");
    for (nonresidue_ = 2; pow_mod(nonresidue_, (p - 1) / 2, p) != p - 1; ++nonresidue_) {
    }
    std::uint64_t q = std::uint64_t(p) * p;
    auto slow_mul = [this](FieldElement a, FieldElement b) { return mul_direct(a, b); };
    auto order_ok = [&](FieldElement g) {
      for (auto r : prime_factors(q - 1))
        if (pow_direct(g, (q - 1) / r).value == 1) return false;
      return true;
    };
    FieldElement g{0};
    for (std::uint32_t c = 2; c < q; ++c)
      if (order_ok(FieldElement{c})) {
        g = FieldElement{c};
        break;
      }
    build(q, FieldElement{1}, g, slow_mul);
  }

  std::uint64_t size() const { return std::uint64_t(p_) * p_; }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t nonresidue() const { return nonresidue_; }

  FieldElement element(std::int64_t v) const {
    return FieldElement{static_cast<std::uint32_t>(mod(v, std::int64_t(p_)))};
  }
  FieldElement make(std::int64_t a, std::int64_t b) const {
    return FieldElement{static_cast<std::uint32_t>(mod(a, p_) + mod(b, p_) * p_)};
  }
  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement add(FieldElement x, FieldElement y) const {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return make(a + c, b + d);
  }
  FieldElement sub(FieldElement x, FieldElement y) const {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return make(a - c, b - d);
  }
  FieldElement neg(FieldElement x) const {
    auto [a, b] = split(x);
    return make(-a, -b);
  }
  using LogTables::dlog;
  using LogTables::exp;
  using LogTables::inv;
  using LogTables::mul;
  using LogTables::nth_power_count;
  using LogTables::pow;
  using LogTables::quadratic_character;

 private:
  std::pair<std::int64_t, std::int64_t> split(FieldElement x) const {
    return {x.value % p_, x.value / p_};
  }
  FieldElement mul_direct(FieldElement x, FieldElement y) const {
    auto [a, b] = split(x);
    auto [c, d] = split(y);
    return make((a * c + b * d % p_ * nonresidue_) % p_, (a * d + b * c) % p_);
  }
  FieldElement pow_direct(FieldElement x, std::uint64_t e) const {
    FieldElement r{1};
    while (e) {
      if (e & 1) r = mul_direct(r, x);
      x = mul_direct(x, x);
      e >>= 1;
    }
    return r;
  }

  std::uint32_t p_;
  std::uint32_t nonresidue_ = 2;
};

static_assert(FiniteField<PrimeField>);
static_assert(FiniteField<PrimeSquareField>);

}  // namespace k3
