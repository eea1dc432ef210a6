#pragma once

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/numeric.hpp"

namespace k3 {

using Exponent3 = std::array<int, 3>;

struct SurfaceTerm {
  BigInt coefficient;
  Exponent3 exponents{};
  friend bool operator==(const SurfaceTerm&, const SurfaceTerm&) = default;
};

// Polynomial equation RHS - LHS = 0 in up to three named variables
struct DelsarteSurface {
  std::vector<std::string> variables;
  std::vector<SurfaceTerm> terms;  // order of first appearance, like terms combined
  std::string source;

  std::size_t monomial_count() const { return terms.size(); }
  int variable_index(std::string_view name) const {
    for (std::size_t i = 0; i < variables.size(); ++i)
      if (variables[i] == name) return static_cast<int>(i);
    return -1;
  }
  std::string to_string() const;
};

namespace detail {

using TermList = std::vector<SurfaceTerm>;

inline TermList combine(const TermList& in) {
  TermList out;
  for (const auto& t : in) {
    bool merged = false;
    for (auto& o : out)
      if (o.exponents == t.exponents) {
        o.coefficient += t.coefficient;
        merged = true;
        break;
      }
    if (!merged) out.push_back(t);
  }
  TermList nz;
  for (auto& t : out)
    if (t.coefficient != 0) nz.push_back(t);
  return nz;
}

inline TermList multiply_terms(const TermList& a, const TermList& b) {
  TermList out;
  for (const auto& x : a)
    for (const auto& y : b) {
      SurfaceTerm t{x.coefficient * y.coefficient, {}};
      for (int i = 0; i < 3; ++i) t.exponents[i] = x.exponents[i] + y.exponents[i];
      out.push_back(t);
    }
  return combine(out);
}

class SurfaceParser {
 public:
  explicit SurfaceParser(std::string_view s) : s_(s) {}

  DelsarteSurface parse() {
    TermList lhs = expression();
    skip_ws();
    TermList rhs;
    bool has_eq = false;
    if (peek() == '=') {
      ++pos_;
      has_eq = true;
      rhs = expression();
    }
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
    TermList all = rhs;
    for (auto t : lhs) {
      if (has_eq) t.coefficient = -t.coefficient;
      all.push_back(t);
    }
    // RHS - LHS, with LHS terms listed first
    TermList ordered;
    if (has_eq) {
      for (std::size_t i = rhs.size(); i < all.size(); ++i) ordered.push_back(all[i]);
      for (std::size_t i = 0; i < rhs.size(); ++i) ordered.push_back(all[i]);
    } else {
      ordered = all;
    }
    DelsarteSurface out;
    out.variables = vars_;
    out.terms = combine(ordered);
    out.source = std::string(s_);
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  TermList expression() {
    TermList acc;
    char c = peek();
    int sign = 1;
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    TermList t = term();
    for (auto& x : t) x.coefficient *= sign;
    acc.insert(acc.end(), t.begin(), t.end());
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      TermList u = term();
      if (c == '-')
        for (auto& x : u) x.coefficient = -x.coefficient;
      acc.insert(acc.end(), u.begin(), u.end());
    }
    return combine(acc);
  }

  TermList term() {
    TermList acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = multiply_terms(acc, factor());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        acc = multiply_terms(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  TermList factor() {
    TermList base = primary();
    if (peek() == '^') {
      ++pos_;
      bool paren = false;
      if (peek() == '(') {
        paren = true;
        ++pos_;
      }
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      } else if (peek() == '+') {
        ++pos_;
      }
      skip_ws();
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        fail("expected integer exponent");
      long e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + (s_[pos_++] - '0');
        if (e > 100000) fail("exponent too large");
      }
      if (paren) {
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      }
      e *= sign;
      if (e < 0) {
        if (base.size() != 1 || abs(base[0].coefficient) != 1)
          fail("negative exponent needs a monomial base");
        for (auto& x : base[0].exponents) x *= static_cast<int>(e);
        if (e % 2 != 0 && base[0].coefficient < 0) base[0].coefficient = -1;
        else base[0].coefficient = 1;
        return base;
      }
      TermList r{SurfaceTerm{1, {0, 0, 0}}};
      for (long i = 0; i < e; ++i) r = multiply_terms(r, base);
      return r;
    }
    return base;
  }

  TermList primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      TermList e = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = v * 10 + (s_[pos_++] - '0');
      return {SurfaceTerm{v, {0, 0, 0}}};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      std::size_t idx = 0;
      while (idx < vars_.size() && vars_[idx] != name) ++idx;
      if (idx == vars_.size()) {
        if (vars_.size() == 3) {
          pos_ = start;
          fail("more than 3 variables");
        }
        vars_.push_back(name);
      }
      SurfaceTerm t{1, {0, 0, 0}};
      t.exponents[idx] = 1;
      return {t};
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
};

inline std::string monomial_string(const BigInt& c, const Exponent3& e,
                                   const std::vector<std::string>& vars, bool first) {
  std::string out;
  BigInt a = abs(c);
  out += c < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
  std::string body;
  for (std::size_t i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!body.empty()) body += "*";
    body += i < vars.size() ? vars[i] : ("v" + std::to_string(i));
    if (e[i] != 1) body += "^" + std::to_string(e[i]);
  }
  if (body.empty()) return out + a.str();
  if (a != 1) body = a.str() + "*" + body;
  return out + body;
}

}  // namespace detail

inline DelsarteSurface parse_surface(std::string_view text) {
  return detail::SurfaceParser(text).parse();
}

inline std::string DelsarteSurface::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i)
    out += detail::monomial_string(terms[i].coefficient, terms[i].exponents, variables, i == 0);
  return (out.empty() ? "0" : out) + " = 0";
}

}  // namespace k3
