#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3/error.hpp"
#include "k3/field.hpp"
#include "k3/kodaira.hpp"
#include "k3/numeric.hpp"
#include "k3/surface.hpp"

namespace k3 {

// y^2 = x^3 + A(t) x + B(t); deg A <= 4N, deg B <= 6N (N = 2 for K3, 1 for rational)
struct WeierstrassModel {
  std::vector<long long> A;  // ascending in t
  std::vector<long long> B;
  int index = 2;

  static WeierstrassModel from_surface(const DelsarteSurface& s, std::string_view x = "x",
                                       std::string_view y = "y", std::string_view t = "t",
                                       int index = 2) {
    int xi = s.variable_index(x), yi = s.variable_index(y), ti = s.variable_index(t);
    if (xi < 0 || yi < 0) throw InvalidArgument("equation is not in Weierstrass form in x, y");
    WeierstrassModel w;
    w.index = index;
    bool has_y = false, has_x3 = false;
    for (const auto& term : s.terms) {
      int ex = term.exponents[xi], ey = term.exponents[yi];
      int et = ti < 0 ? 0 : term.exponents[ti];
      for (int j = 0; j < 3; ++j)
        if (j != xi && j != yi && j != ti && term.exponents[j] != 0)
          throw InvalidArgument("unexpected variable in Weierstrass equation");
      if (et < 0) throw InvalidArgument("negative power of t in Weierstrass equation");
      long long c = to_int64(term.coefficient);
      if (ey == 2 && ex == 0 && et == 0 && c == -1) {
        has_y = true;
      } else if (ex == 3 && ey == 0 && et == 0 && c == 1) {
        has_x3 = true;
      } else if (ey == 0 && ex == 1) {
        if (w.A.size() <= std::size_t(et)) w.A.resize(et + 1);
        w.A[et] += c;
      } else if (ey == 0 && ex == 0) {
        if (w.B.size() <= std::size_t(et)) w.B.resize(et + 1);
        w.B[et] += c;
      } else {
        throw InvalidArgument("equation is not in short Weierstrass form y^2 = x^3 + A x + B");
      }
    }
    if (!has_y || !has_x3) throw InvalidArgument("equation is not in short Weierstrass form");
    w.trim();
    if (static_cast<int>(w.A.size()) - 1 > 4 * index || static_cast<int>(w.B.size()) - 1 > 6 * index)
      throw InvalidArgument("coefficient degrees exceed the fibration index");
    return w;
  }

  void trim() {
    while (!A.empty() && A.back() == 0) A.pop_back();
    while (!B.empty() && B.back() == 0) B.pop_back();
  }

  // 4A^3 + 27B^2 over Z
  std::vector<BigInt> discriminant_core() const {
    auto mul = [](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
      if (a.empty() || b.empty()) return std::vector<BigInt>{};
      std::vector<BigInt> c(a.size() + b.size() - 1);
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
      return c;
    };
    std::vector<BigInt> a(A.begin(), A.end()), b(B.begin(), B.end());
    auto a3 = mul(mul(a, a), a), b2 = mul(b, b);
    std::vector<BigInt> d(std::max(a3.size(), b2.size()));
    for (std::size_t i = 0; i < a3.size(); ++i) d[i] += 4 * a3[i];
    for (std::size_t i = 0; i < b2.size(); ++i) d[i] += 27 * b2[i];
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
  }
};

struct FiberLocation {
  bool infinity = false;
  FieldElement t{};
  friend bool operator==(const FiberLocation&, const FiberLocation&) = default;
};

enum class Splitting { not_applicable, split, nonsplit };

struct KodairaFiber {
  FiberLocation location;
  KodairaSymbol symbol;
  Splitting splitting = Splitting::not_applicable;
  unsigned cubic_roots = 0;          // I0*: rational roots of the associated cubic
  unsigned rational_components = 0;  // r_v
  int multiplicative_sign = 0;       // +1 split I_n, -1 nonsplit I_n, 0 additive
  int va = 0, vb = 0, vd = 0;        // valuations of A, B, 4A^3+27B^2 on the minimal model
  FieldElement a0{}, b0{};           // minimal-model A, B at the point

  unsigned component_count() const { return symbol.component_count(); }
  unsigned euler_number() const { return symbol.euler_number(); }
  std::string name() const {
    std::string s = symbol.name();
    if (splitting == Splitting::split) s += " split";
    if (splitting == Splitting::nonsplit) s += " nonsplit";
    return s;
  }
};

// #F_v(F_q) on the smooth model for a singular fiber
inline std::uint64_t fiber_point_count(const KodairaFiber& f, std::uint64_t q) {
  return static_cast<std::uint64_t>(1 + static_cast<long long>(q) * f.rational_components -
                                    f.multiplicative_sign);
}

namespace detail {

template <FiniteField F>
using Series = std::vector<FieldElement>;

template <FiniteField F>
Series<F> taylor_at(const F& f, const std::vector<long long>& poly, FieldElement t0, std::size_t prec) {
  std::vector<FieldElement> c;
  for (auto v : poly) c.push_back(f.element(v));
  // repeated synthetic division gives coefficients of P(t0 + pi)
  Series<F> out;
  while (!c.empty() && out.size() < prec) {
    FieldElement r = f.zero();
    std::vector<FieldElement> q(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      r = f.add(f.mul(r, t0), c[i]);
      if (i > 0) q[i - 1] = r;
    }
    out.push_back(r);
    c = std::move(q);
  }
  out.resize(prec, f.zero());
  return out;
}

template <FiniteField F>
Series<F> expansion_at_infinity(const F& f, const std::vector<long long>& poly, int degree_bound,
                                std::size_t prec) {
  Series<F> out(prec, f.zero());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    int k = degree_bound - static_cast<int>(i);
    if (k < 0) throw InvalidArgument("coefficient degree exceeds the fibration index");
    if (std::size_t(k) < prec) out[k] = f.element(poly[i]);
  }
  return out;
}

template <FiniteField F>
int valuation(const F&, const Series<F>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].value != 0) return static_cast<int>(i);
  return 1 << 20;
}

template <FiniteField F>
Series<F> series_mul(const F& f, const Series<F>& a, const Series<F>& b) {
  std::size_t n = a.size();
  Series<F> c(n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].value == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

template <FiniteField F>
Series<F> series_add(const F& f, const Series<F>& a, const Series<F>& b) {
  Series<F> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.add(a[i], b[i]);
  return c;
}

template <FiniteField F>
Series<F> series_scale(const F& f, const Series<F>& a, FieldElement s) {
  Series<F> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = f.mul(a[i], s);
  return c;
}

template <FiniteField F>
Series<F> series_shift_down(const F& f, const Series<F>& a, int k) {
  Series<F> c(a.size(), f.zero());
  for (std::size_t i = k; i < a.size(); ++i) c[i - k] = a[i];
  return c;
}

template <FiniteField F>
Series<F> discriminant_series(const F& f, const Series<F>& a, const Series<F>& b) {
  auto a3 = series_mul(f, series_mul(f, a, a), a);
  auto b2 = series_mul(f, b, b);
  return series_add(f, series_scale(f, a3, f.element(4)), series_scale(f, b2, f.element(27)));
}

template <FiniteField F>
bool is_square(const F& f, FieldElement v) {
  return f.quadratic_character(v) >= 0;
}

template <FiniteField F>
unsigned cubic_root_count(const F& f, FieldElement p, FieldElement r) {
  // T^3 + p T + r
  unsigned n = 0;
  for (std::uint64_t c = 0; c < f.size(); ++c) {
    FieldElement x{static_cast<std::uint32_t>(c)};
    FieldElement v = f.add(f.add(f.mul(f.mul(x, x), x), f.mul(p, x)), r);
    if (v.value == 0) ++n;
  }
  return n;
}

// far-component rationality of I_n* (n >= 1): Tate's subprocedure on the series
template <FiniteField F>
std::pair<unsigned, bool> istar_subprocedure(const F& f, Series<F> a4, Series<F> a6) {
  FieldElement A2 = a4[2], B3 = a6[3];
  if (A2.value == 0) throw Error("I_n* fiber without a double root");
  // double root x0 = -3 B3 / (2 A2)
  FieldElement x0 = f.neg(f.mul(f.mul(f.element(3), B3), f.inv(f.mul(f.element(2), A2))));
  std::size_t prec = a4.size();
  Series<F> a2(prec, f.zero());
  auto translate = [&](FieldElement c, int k) {
    // x -> x + c pi^k
    Series<F> r(prec, f.zero());
    if (std::size_t(k) < prec) r[k] = c;
    Series<F> r2 = series_mul(f, r, r), r3 = series_mul(f, r2, r);
    Series<F> n6 = series_add(f, series_add(f, a6, series_mul(f, r, a4)),
                              series_add(f, series_mul(f, r2, a2), r3));
    Series<F> n4 = series_add(f, series_add(f, a4, series_scale(f, series_mul(f, r, a2), f.element(2))),
                              series_scale(f, r2, f.element(3)));
    Series<F> n2 = series_add(f, a2, series_scale(f, r, f.element(3)));
    a2 = std::move(n2);
    a4 = std::move(n4);
    a6 = std::move(n6);
  };
  translate(x0, 1);
  int ex = 2, ey = 2;
  unsigned nu = 1;
  auto at = [&](const Series<F>& s, int i) {
    if (i < 0 || std::size_t(i) >= s.size()) throw Error("series precision exhausted in I_n* loop");
    return s[i];
  };
  while (true) {
    FieldElement w = at(a6, ex + ey);
    if (w.value != 0) return {nu, is_square(f, w)};
    ++ey;
    ++nu;
    FieldElement xa2 = at(a2, 1), xa4 = at(a4, 1 + ex), xa6 = at(a6, ex + ey);
    FieldElement disc = f.sub(f.mul(xa4, xa4), f.mul(f.element(4), f.mul(xa2, xa6)));
    if (disc.value != 0) return {nu, is_square(f, disc)};
    FieldElement root = f.neg(f.mul(xa4, f.inv(f.mul(f.element(2), xa2))));
    translate(root, ex);
    ++ex;
    ++nu;
  }
}

}  // namespace detail

// Kodaira type and rational-component data of the fiber at loc (residue characteristic >= 5)
template <FiniteField F>
KodairaFiber tate_fiber(const F& f, const WeierstrassModel& w, FiberLocation loc) {
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw InvalidArgument("tate_fiber needs residue characteristic >= 5");
  std::size_t prec = static_cast<std::size_t>(12 * w.index + 16);
  detail::Series<F> a, b;
  if (loc.infinity) {
    a = detail::expansion_at_infinity(f, w.A, 4 * w.index, prec);
    b = detail::expansion_at_infinity(f, w.B, 6 * w.index, prec);
  } else {
    a = detail::taylor_at(f, w.A, loc.t, prec);
    b = detail::taylor_at(f, w.B, loc.t, prec);
  }
  int va = detail::valuation(f, a), vb = detail::valuation(f, b);
  while (va >= 4 && vb >= 6) {
    if (va >= (1 << 19) && vb >= (1 << 19)) throw InvalidArgument("degenerate Weierstrass model");
    a = detail::series_shift_down(f, a, 4);
    b = detail::series_shift_down(f, b, 6);
    va = detail::valuation(f, a);
    vb = detail::valuation(f, b);
  }
  auto delta = detail::discriminant_series(f, a, b);
  int vd = detail::valuation(f, delta);
  if (vd >= (1 << 19)) throw InvalidArgument("discriminant vanishes identically");

  KodairaFiber out;
  out.location = loc;
  out.va = va;
  out.vb = vb;
  out.vd = vd;
  out.a0 = a[0];
  out.b0 = b[0];
  auto sq = [&](FieldElement v) { return detail::is_square(f, v); };
  if (vd == 0) {
    out.symbol = {KodairaType::I, 0};
    out.rational_components = 1;
    return out;
  }
  if (va == 0) {
    out.symbol = {KodairaType::I, static_cast<unsigned>(vd)};
    // node at x0 = -3B/(2A); tangent slopes are square roots of 3 x0
    FieldElement x0 = f.neg(f.mul(f.mul(f.element(3), b[0]), f.inv(f.mul(f.element(2), a[0]))));
    bool split = sq(f.mul(f.element(3), x0));
    out.splitting = split ? Splitting::split : Splitting::nonsplit;
    out.multiplicative_sign = split ? 1 : -1;
    unsigned n = out.symbol.n;
    out.rational_components = split ? n : (n % 2 == 0 ? 2 : 1);
    return out;
  }
  if (va == 2 && vb == 3 && vd > 6) {
    auto [nu, split] = detail::istar_subprocedure(f, a, b);
    unsigned n = static_cast<unsigned>(vd - 6);
    if (nu != n) throw Error("I_n* subprocedure disagrees with the discriminant valuation");
    out.symbol = {KodairaType::Istar, n};
    out.splitting = split ? Splitting::split : Splitting::nonsplit;
    out.rational_components = split ? n + 5 : n + 3;
    return out;
  }
  switch (vd) {
    case 2:
      out.symbol = {KodairaType::II, 0};
      out.rational_components = 1;
      break;
    case 3:
      out.symbol = {KodairaType::III, 0};
      out.rational_components = 2;
      break;
    case 4: {
      out.symbol = {KodairaType::IV, 0};
      bool split = sq(b[2]);
      out.splitting = split ? Splitting::split : Splitting::nonsplit;
      out.rational_components = split ? 3 : 1;
      break;
    }
    case 6: {
      out.symbol = {KodairaType::Istar, 0};
      out.cubic_roots = detail::cubic_root_count(f, a[2], b[3]);
      out.rational_components = 2 + out.cubic_roots;
      break;
    }
    case 8: {
      out.symbol = {KodairaType::IVstar, 0};
      bool split = sq(b[4]);
      out.splitting = split ? Splitting::split : Splitting::nonsplit;
      out.rational_components = split ? 7 : 3;
      break;
    }
    case 9:
      out.symbol = {KodairaType::IIIstar, 0};
      out.rational_components = 8;
      break;
    case 10:
      out.symbol = {KodairaType::IIstar, 0};
      out.rational_components = 9;
      break;
    default:
      throw Error("valuations (" + std::to_string(va) + "," + std::to_string(vb) + "," +
                  std::to_string(vd) + ") match no Kodaira type");
  }
  return out;
}

struct EllipticCount {
  BigInt total = 0;
  std::vector<KodairaFiber> bad_fibers;  // at F_q-rational points of P^1, infinity last
  unsigned euler_sum = 0;                // includes bad fibers at non-rational points
  unsigned trivial_rank = 2;             // 2 + sum (m_v - 1) over rational bad fibers
};

template <FiniteField F>
EllipticCount count_elliptic_smooth(const F& f, const WeierstrassModel& w) {
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw InvalidArgument("count_elliptic_smooth needs characteristic >= 5");
  std::uint64_t q = f.size();
  std::vector<FieldElement> cube(q);
  for (std::uint64_t c = 0; c < q; ++c) {
    FieldElement x{static_cast<std::uint32_t>(c)};
    cube[c] = f.mul(f.mul(x, x), x);
  }
  auto eval = [&](const std::vector<long long>& p, FieldElement t) {
    FieldElement r = f.zero();
    for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, t), f.element(p[i]));
    return r;
  };
  auto good_fiber = [&](FieldElement A, FieldElement B) {
    long long s = 0;
    for (std::uint64_t c = 0; c < q; ++c) {
      FieldElement x{static_cast<std::uint32_t>(c)};
      s += f.quadratic_character(f.add(f.add(cube[c], f.mul(A, x)), B));
    }
    return static_cast<long long>(q) + 1 + s;
  };

  EllipticCount out;
  // multiplicities of finite rational roots of the model discriminant
  std::vector<FieldElement> dcoef;
  for (const auto& c : w.discriminant_core()) dcoef.push_back(f.element(to_int64(mod(c, BigInt(f.characteristic())))));
  while (!dcoef.empty() && dcoef.back().value == 0) dcoef.pop_back();
  long long rational_root_mult = 0;
  BigInt total = 0;
  for (std::uint64_t c = 0; c < q; ++c) {
    FieldElement t{static_cast<std::uint32_t>(c)};
    FieldElement A = eval(w.A, t), B = eval(w.B, t);
    FieldElement D = f.add(f.mul(f.element(4), cube[A.value]), f.mul(f.element(27), f.mul(B, B)));
    if (D.value != 0) {
      total += good_fiber(A, B);
      continue;
    }
    KodairaFiber fib = tate_fiber(f, w, FiberLocation{false, t});
    total += fiber_point_count(fib, q);
    out.euler_sum += fib.euler_number();
    out.trivial_rank += fib.component_count() - 1;
    // multiplicity of t as a root of the model discriminant
    std::vector<FieldElement> p = dcoef;
    while (!p.empty()) {
      FieldElement r = f.zero();
      std::vector<FieldElement> qd(p.size() - 1);
      for (std::size_t i = p.size(); i-- > 0;) {
        r = f.add(f.mul(r, t), p[i]);
        if (i > 0) qd[i - 1] = r;
      }
      if (r.value != 0) break;
      ++rational_root_mult;
      p = std::move(qd);
    }
    out.bad_fibers.push_back(fib);
  }
  // fiber at infinity in the s = 1/t chart
  KodairaFiber inf = tate_fiber(f, w, FiberLocation{true, f.zero()});
  if (inf.symbol.euler_number() == 0) {
    total += good_fiber(inf.a0, inf.b0);
  } else {
    total += fiber_point_count(inf, q);
    out.euler_sum += inf.euler_number();
    out.trivial_rank += inf.component_count() - 1;
    out.bad_fibers.push_back(inf);
  }
  long long deg_d = static_cast<long long>(dcoef.size()) - 1;
  if (deg_d > rational_root_mult) out.euler_sum += static_cast<unsigned>(deg_d - rational_root_mult);
  out.total = total;
  return out;
}

// #F_m(F_q) in P^3: chart x0 != 0 plus the curve x0 = 0
template <FiniteField F>
BigInt count_fermat(const F& f, unsigned m) {
  if (m == 0) throw InvalidArgument("count_fermat needs m >= 1");
  std::uint64_t q = f.size();
  std::vector<FieldElement> pw(q);
  for (std::uint64_t c = 0; c < q; ++c) pw[c] = f.pow(FieldElement{static_cast<std::uint32_t>(c)}, m);
  std::vector<std::uint64_t> roots(q);
  for (std::uint64_t c = 0; c < q; ++c) roots[c] = f.nth_power_count(FieldElement{static_cast<std::uint32_t>(c)}, m);
  BigInt affine = 0, cone = 0;
  FieldElement minus_one = f.neg(f.one());
  for (std::uint64_t u = 0; u < q; ++u)
    for (std::uint64_t v = 0; v < q; ++v) {
      FieldElement s = f.add(pw[u], pw[v]);
      affine += roots[f.sub(minus_one, s).value];
      cone += roots[f.neg(s).value];
    }
  return affine + (cone - 1) / (q - 1);
}

struct BivariateTerm {
  long long coefficient;
  int eu, ev;
};

// sum over (u,v) of #{y : y^2 = f(u,v)}
template <FiniteField F>
BigInt count_affine_double_sextic(const F& f, const std::vector<BivariateTerm>& poly) {
  if (f.characteristic() == 2) throw InvalidArgument("count_affine_double_sextic needs q odd");
  std::uint64_t q = f.size();
  BigInt total = 0;
  for (std::uint64_t u = 0; u < q; ++u)
    for (std::uint64_t v = 0; v < q; ++v) {
      FieldElement fu{static_cast<std::uint32_t>(u)}, fv{static_cast<std::uint32_t>(v)};
      FieldElement s = f.zero();
      for (const auto& t : poly) {
        if ((t.eu < 0 && u == 0) || (t.ev < 0 && v == 0)) throw InvalidArgument("negative exponent");
        s = f.add(s, f.mul(f.element(t.coefficient), f.mul(f.pow(fu, t.eu), f.pow(fv, t.ev))));
      }
      total += 1 + f.quadratic_character(s);
    }
  return total;
}

// f(u,v) from y^2 = f(u,v)
inline std::vector<BivariateTerm> double_cover_branch(const DelsarteSurface& s, std::string_view y = "y") {
  int yi = s.variable_index(y);
  if (yi < 0) throw InvalidArgument("no variable named " + std::string(y));
  std::vector<int> others;
  for (int j = 0; j < 3; ++j)
    if (j != yi) others.push_back(j);
  std::vector<BivariateTerm> out;
  bool has_y = false;
  for (const auto& t : s.terms) {
    if (t.exponents[yi] == 2 && t.coefficient == -1 && t.exponents[others[0]] == 0 &&
        t.exponents[others[1]] == 0) {
      has_y = true;
      continue;
    }
    if (t.exponents[yi] != 0) throw InvalidArgument("equation is not of the form y^2 = f");
    out.push_back({to_int64(t.coefficient), t.exponents[others[0]], t.exponents[others[1]]});
  }
  if (!has_y) throw InvalidArgument("equation is not of the form y^2 = f");
  return out;
}

}  // namespace k3
