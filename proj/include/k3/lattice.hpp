#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/kodaira.hpp"
#include "k3/matrix.hpp"
#include "k3/numeric.hpp"

namespace k3 {

struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
  std::string to_string() const {
    return "(" + std::to_string(positive) + "," + std::to_string(negative) + ")";
  }
};

struct LatticeBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

class GramLattice {
 public:
  GramLattice() = default;
  explicit GramLattice(Matrix gram, std::string name = "explicit") : gram_(std::move(gram)) {
    for (std::size_t i = 0; i < gram_.size(); ++i) {
      if (gram_[i].size() != gram_.size()) throw LatticeError("Gram matrix must be square");
      for (std::size_t j = 0; j < i; ++j)
        if (gram_[i][j] != gram_[j][i]) throw LatticeError("Gram matrix must be symmetric");
    }
    blocks_.push_back({std::move(name), 0, gram_.size()});
  }

  const Matrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.size(); }
  const std::vector<LatticeBlock>& blocks() const { return blocks_; }
  BigInt determinant() const { return k3::determinant(gram_); }
  bool is_even() const {
    for (std::size_t i = 0; i < gram_.size(); ++i)
      if (gram_[i][i] % 2 != 0) return false;
    return true;
  }

  Signature signature() const {
    std::size_t n = gram_.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram_[i][j]);
    auto swap_index = [&](std::size_t i, std::size_t j) {
      std::swap(a[i], a[j]);
      for (auto& r : a) std::swap(r[i], r[j]);
    };
    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && a[p][p] == 0) ++p;
      if (p == n) {
        // all remaining diagonal entries vanish: e_i -> e_i + e_j
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (a[i][j] != 0) {
              pi = i;
              pj = j;
              break;
            }
        if (pi == n) break;  // degenerate remainder
        for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
        for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
        p = pi;
      }
      swap_index(k, p);
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k] == 0) continue;
        Rational f = a[i][k] / a[k][k];
        for (std::size_t c = k; c < n; ++c) a[i][c] -= f * a[k][c];
        for (std::size_t r = k; r < n; ++r) a[r][i] -= f * a[r][k];
      }
      if (a[k][k] > 0) ++s.positive;
      else ++s.negative;
    }
    return s;
  }

  friend GramLattice direct_sum(const std::vector<GramLattice>& parts) {
    GramLattice out;
    std::size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    out.gram_.assign(n, std::vector<BigInt>(n));
    std::size_t off = 0;
    for (const auto& p : parts) {
      for (std::size_t i = 0; i < p.rank(); ++i)
        for (std::size_t j = 0; j < p.rank(); ++j) out.gram_[off + i][off + j] = p.gram_[i][j];
      for (const auto& b : p.blocks_) out.blocks_.push_back({b.name, off + b.offset, b.size});
      off += p.rank();
    }
    return out;
  }

  std::string describe() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += " + ";
      out += blocks_[i].name;
    }
    return out.empty() ? "0" : out;
  }

 private:
  Matrix gram_;
  std::vector<LatticeBlock> blocks_;
};

inline GramLattice direct_sum(std::initializer_list<GramLattice> parts) {
  return direct_sum(std::vector<GramLattice>(parts));
}

inline GramLattice explicit_lattice(const std::vector<std::vector<long long>>& rows,
                                    std::string name = "explicit") {
  return GramLattice(to_matrix(rows), std::move(name));
}

namespace detail {

inline Matrix dynkin_gram(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  Matrix g(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = -1;
  return g;
}

inline std::vector<std::pair<int, int>> chain_edges(int len) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < len; ++i) e.push_back({i, i + 1});
  return e;
}

}  // namespace detail

// name in {U2, A, E6, E7, E8, diag}; root lattices positive definite, sign = -1 twists
inline GramLattice standard_lattice(std::string_view name, std::vector<long long> params = {},
                                    int sign = 1) {
  if (sign != 1 && sign != -1) throw LatticeError("sign twist must be +1 or -1");
  Matrix g;
  std::string label(name);
  if (name == "U2" || name == "U") {
    g = to_matrix({{0, 1}, {1, 0}});
    label = "U2";
  } else if (name == "A") {
    if (params.size() != 1 || params[0] < 1) throw LatticeError("A_n needs n >= 1");
    g = detail::dynkin_gram(params[0], detail::chain_edges(static_cast<int>(params[0])));
    label = "A" + std::to_string(params[0]);
  } else if (name == "E6" || name == "E7" || name == "E8") {
    int n = name[1] - '0';
    auto edges = detail::chain_edges(n - 1);
    edges.push_back({2, n - 1});  // branch node attached to the third node of the chain
    g = detail::dynkin_gram(n, edges);
  } else if (name == "diag") {
    if (params.empty()) throw LatticeError("diag needs entries");
    g.assign(params.size(), std::vector<BigInt>(params.size()));
    for (std::size_t i = 0; i < params.size(); ++i) g[i][i] = params[i];
    label = "diag";
  } else {
    throw LatticeError("unknown lattice " + std::string(name));
  }
  if (sign < 0) {
    for (auto& r : g)
      for (auto& v : r) v = -v;
    if (label != "U2") label = "-" + label;
  }
  return GramLattice(std::move(g), label);
}

// Discriminant group (+)Z/d_i with q on generators (mod 2) and b (mod 1)
struct FiniteQuadraticForm {
  std::vector<long long> orders;
  std::vector<Rational> q;
  std::vector<std::vector<Rational>> b;

  long long group_order() const {
    long long n = 1;
    for (auto d : orders) n *= d;
    return n;
  }
  Rational value(const std::vector<long long>& c) const {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      s += Rational(c[i] * c[i]) * q[i];
      for (std::size_t j = i + 1; j < c.size(); ++j) s += Rational(2 * c[i] * c[j]) * b[i][j];
    }
    return reduce_mod(s, 2);
  }
  Rational pairing(const std::vector<long long>& c, const std::vector<long long>& d) const {
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) s += Rational(c[i] * d[j]) * b[i][j];
    return reduce_mod(s, 1);
  }
  FiniteQuadraticForm negated() const {
    FiniteQuadraticForm r = *this;
    for (auto& v : r.q) v = reduce_mod(-v, 2);
    for (auto& row : r.b)
      for (auto& v : row) v = reduce_mod(-v, 1);
    return r;
  }
  std::string describe() const {
    if (orders.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      if (i) out += " + ";
      out += "Z/" + std::to_string(orders[i]) + "(" + to_string(q[i]) + ")";
    }
    return out;
  }
};

inline FiniteQuadraticForm discriminant_form(const GramLattice& l) {
  if (l.determinant() == 0) throw LatticeError("degenerate lattice");
  if (!l.is_even()) throw LatticeError("discriminant form needs an even lattice");
  SmithForm snf = smith_normal_form(l.gram());
  Matrix w = multiply(multiply(transpose(snf.right), l.gram()), snf.right);
  std::vector<std::size_t> idx;
  FiniteQuadraticForm f;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    BigInt d = snf.diag[i][i];
    if (d != 1) {
      idx.push_back(i);
      f.orders.push_back(to_int64(d));
    }
  }
  std::size_t r = idx.size();
  f.b.assign(r, std::vector<Rational>(r));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t c = 0; c < r; ++c) {
      Rational v(w[idx[a]][idx[c]], snf.diag[idx[a]][idx[a]] * snf.diag[idx[c]][idx[c]]);
      f.b[a][c] = reduce_mod(v, 1);
      if (a == c) f.q.push_back(reduce_mod(v, 2));
    }
  }
  return f;
}

namespace detail {

inline void enumerate_group(const std::vector<long long>& orders,
                            const std::function<void(const std::vector<long long>&)>& fn) {
  std::vector<long long> c(orders.size(), 0);
  while (true) {
    fn(c);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == orders[i]) c[i++] = 0;
    if (i == c.size()) return;
  }
}

}  // namespace detail

inline constexpr long long kFqfSearchCap = 10000;

inline bool fqf_equivalent(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  if (a.group_order() > kFqfSearchCap || b.group_order() > kFqfSearchCap)
    throw TooLarge("discriminant group exceeds the search cap");
  if (a.orders != b.orders) return false;
  std::size_t r = a.orders.size();
  if (r == 0) return true;
  std::vector<std::vector<long long>> elements;
  detail::enumerate_group(b.orders, [&](const std::vector<long long>& c) { elements.push_back(c); });
  auto mul = [&](const std::vector<long long>& c, long long k) {
    std::vector<long long> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = mod(c[i] * k, b.orders[i]);
    return out;
  };
  std::vector<std::vector<long long>> images(r);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == r) {
      // injectivity: distinct images for all elements
      std::vector<std::vector<long long>> seen;
      bool ok = true;
      detail::enumerate_group(a.orders, [&](const std::vector<long long>& c) {
        if (!ok) return;
        std::vector<long long> img(b.orders.size(), 0);
        for (std::size_t j = 0; j < r; ++j)
          for (std::size_t t = 0; t < img.size(); ++t) img[t] = mod(img[t] + c[j] * images[j][t], b.orders[t]);
        bool zero = std::all_of(img.begin(), img.end(), [](long long v) { return v == 0; });
        bool c_zero = std::all_of(c.begin(), c.end(), [](long long v) { return v == 0; });
        if (zero && !c_zero) ok = false;
      });
      return ok;
    }
    std::vector<long long> unit(r, 0);
    unit[i] = 1;
    Rational qi = a.q[i];
    for (const auto& h : elements) {
      auto z = mul(h, a.orders[i]);
      if (!std::all_of(z.begin(), z.end(), [](long long v) { return v == 0; })) continue;
      if (b.value(h) != qi) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (b.pairing(h, images[j]) != a.b[i][j]) ok = false;
      if (!ok) continue;
      images[i] = h;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  return assign(0);
}

// cyclic form: is there a generator with the given value mod 2?
inline bool has_generator_with_value(const FiniteQuadraticForm& f, const Rational& value) {
  if (f.orders.size() != 1) return false;
  long long n = f.orders[0];
  Rational target = reduce_mod(value, 2);
  for (long long u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1 && f.value({u}) == target) return true;
  return false;
}

struct FiberContribution {
  KodairaSymbol fiber;
  unsigned component = 0;  // index j of the simple component met by the section
};

struct SectionData {
  long long pai = 0;  // (P.O)
  std::vector<FiberContribution> contributions;
};

inline Rational correction_term(const FiberContribution& c) {
  unsigned j = c.component;
  if (j == 0) return 0;
  switch (c.fiber.type) {
    case KodairaType::IVstar:
      if (j <= 2) return Rational(4, 3);
      break;
    case KodairaType::IIIstar:
      if (j == 1) return Rational(3, 2);
      break;
    case KodairaType::III:
      if (j == 1) return Rational(1, 2);
      break;
    case KodairaType::IV:
      if (j <= 2) return Rational(j * (3 - j), 3);
      break;
    case KodairaType::I:
      if (c.fiber.n >= 2 && j < c.fiber.n) return Rational(j * (c.fiber.n - j), c.fiber.n);
      break;
    default:
      break;
  }
  throw InvalidArgument("invalid component index " + std::to_string(j) + " for fiber " + c.fiber.name());
}

inline Rational height(const SectionData& s) {
  if (s.pai < 0) throw InvalidArgument("(P.O) must be nonnegative");
  Rational h = 4 + 2 * s.pai;
  for (const auto& c : s.contributions) h -= correction_term(c);
  return h;
}

// |disc S| = h * prod disc(F_v); sign (-1)^(rank-1) for hyperbolic S is applied by signed_discriminant
inline BigInt disc_from_height(const Rational& h, const std::vector<KodairaSymbol>& fibers) {
  Rational v = h;
  for (const auto& f : fibers) v *= f.root_discriminant();
  if (boost::multiprecision::denominator(v) != 1) throw InvalidArgument("discriminant is not integral");
  return boost::multiprecision::numerator(v);
}

inline BigInt signed_discriminant(const BigInt& magnitude, std::size_t hyperbolic_rank) {
  return hyperbolic_rank % 2 == 0 ? BigInt(-magnitude) : magnitude;
}

struct NikulinResult {
  bool ok = false;
  std::string failure;  // "", "rank", "signature", "form"
};

inline NikulinResult nikulin_complement_check(const GramLattice& s, const GramLattice& t) {
  if (s.rank() + t.rank() != 22) return {false, "rank"};
  Signature a = s.signature(), b = t.signature();
  if (a.positive + b.positive != 3 || a.negative + b.negative != 19) return {false, "signature"};
  if (!fqf_equivalent(discriminant_form(s), discriminant_form(t).negated())) return {false, "form"};
  return {true, ""};
}

struct MirrorSplit {
  bool exists = false;
  std::string method;  // visible-summand, embedding, search
  std::optional<GramLattice> complement;
  std::string reason;
};

namespace detail {

using IntVec = std::vector<BigInt>;

inline BigInt form(const Matrix& g, const IntVec& x, const IntVec& y) {
  BigInt s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g[i][j] * y[j];
  }
  return s;
}

// orthogonal complement of a hyperbolic plane with basis u1, u2 (u1^2 = u2^2 = 0, u1.u2 = 1)
inline GramLattice hyperbolic_complement(const GramLattice& t, const IntVec& u1, const IntVec& u2) {
  const Matrix& g = t.gram();
  std::size_t n = g.size();
  Matrix rows;
  for (std::size_t i = 0; i < n; ++i) {
    IntVec e(n);
    e[i] = 1;
    BigInt a = form(g, e, u2), b = form(g, e, u1);
    IntVec w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = e[j] - a * u1[j] - b * u2[j];
    rows.push_back(w);
  }
  Matrix basis = row_basis(rows);
  Matrix gram = multiply(multiply(basis, g), transpose(basis));
  return GramLattice(gram, "complement");
}

}  // namespace detail

inline MirrorSplit mirror_split(const GramLattice& t) {
  MirrorSplit out;
  Signature sig = t.signature();
  if (sig.negative == 0 || sig.positive == 0) {
    out.reason = sig.negative == 0 ? "T_X positive definite" : "T_X negative definite";
    return out;
  }
  // visible U2 summand in the stated block structure
  const auto& blocks = t.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].name != "U2") continue;
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < t.rank(); ++j)
      if (j < blocks[i].offset || j >= blocks[i].offset + blocks[i].size) keep.push_back(j);
    std::vector<GramLattice> parts;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (b == i) continue;
      Matrix g(blocks[b].size, std::vector<BigInt>(blocks[b].size));
      for (std::size_t r = 0; r < blocks[b].size; ++r)
        for (std::size_t c = 0; c < blocks[b].size; ++c)
          g[r][c] = t.gram()[blocks[b].offset + r][blocks[b].offset + c];
      parts.emplace_back(g, blocks[b].name);
    }
    out.exists = true;
    out.method = "visible-summand";
    out.complement = direct_sum(parts);
    return out;
  }
  const Matrix& g = t.gram();
  std::size_t n = g.size();
  // b^2 = 2 orthogonal to adjacent roots a1, a2 (a_i^2 = -2, a1.a2 = 1): <b+a1, b+a1+a2> = U2
  for (std::size_t b = 0; b < n; ++b) {
    if (g[b][b] != 2) continue;
    for (std::size_t a1 = 0; a1 < n; ++a1) {
      if (a1 == b || g[a1][a1] != -2 || g[b][a1] != 0) continue;
      for (std::size_t a2 = 0; a2 < n; ++a2) {
        if (a2 == b || a2 == a1 || g[a2][a2] != -2 || g[b][a2] != 0 || g[a1][a2] != 1) continue;
        detail::IntVec u1(n), u2(n);
        u1[b] = u1[a1] = 1;
        u2[b] = u2[a1] = u2[a2] = 1;
        out.exists = true;
        out.method = "embedding";
        out.complement = detail::hyperbolic_complement(t, u1, u2);
        return out;
      }
    }
  }
  // bounded search: vectors with entries in {-1,0,1} and support <= 2
  std::vector<detail::IntVec> cands;
  for (std::size_t i = 0; i < n; ++i) {
    for (int si : {1, -1}) {
      detail::IntVec v(n);
      v[i] = si;
      cands.push_back(v);
      for (std::size_t j = i + 1; j < n; ++j)
        for (int sj : {1, -1}) {
          detail::IntVec w = v;
          w[j] = sj;
          cands.push_back(w);
        }
    }
  }
  std::vector<detail::IntVec> iso;
  for (const auto& v : cands)
    if (detail::form(g, v, v) == 0) iso.push_back(v);
  for (const auto& e : iso)
    for (const auto& f : iso)
      if (detail::form(g, e, f) == 1) {
        out.exists = true;
        out.method = "search";
        out.complement = detail::hyperbolic_complement(t, e, f);
        return out;
      }
  out.reason = "no hyperbolic plane found by visible summands, embedding or bounded search";
  return out;
}

struct HyperbolicEmbedding {
  Matrix gram;  // Gram of (b+a1, b+a1+a2) in <2> + (-A2)
  bool is_hyperbolic_plane = false;
};

inline HyperbolicEmbedding embedding_check_hyperbolic() {
  GramLattice l = direct_sum({standard_lattice("diag", {2}), standard_lattice("A", {2}, -1)});
  detail::IntVec u1{1, 1, 0}, u2{1, 1, 1};
  HyperbolicEmbedding out;
  out.gram = {{detail::form(l.gram(), u1, u1), detail::form(l.gram(), u1, u2)},
              {detail::form(l.gram(), u2, u1), detail::form(l.gram(), u2, u2)}};
  out.is_hyperbolic_plane = out.gram == to_matrix({{0, 1}, {1, 0}});
  return out;
}

}  // namespace k3
