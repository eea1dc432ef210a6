#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "k3/error.hpp"
#include "k3/numeric.hpp"

namespace k3 {

using Matrix = std::vector<std::vector<BigInt>>;

inline Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Matrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  Matrix m;
  for (const auto& r : rows) {
    std::vector<BigInt> row;
    for (auto v : r) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<BigInt>(p));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < p; ++l) c[i][l] += a[i][j] * b[j][l];
    }
  return c;
}

inline Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<BigInt>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Bareiss fraction-free elimination
inline BigInt determinant(Matrix a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct SmithForm {
  Matrix left;   // unimodular, rows x rows
  Matrix diag;   // left * A * right
  Matrix right;  // unimodular, cols x cols
  std::vector<BigInt> invariants() const {
    std::vector<BigInt> d;
    for (std::size_t i = 0; i < std::min(diag.size(), diag.empty() ? 0 : diag[0].size()); ++i)
      d.push_back(diag[i][i]);
    return d;
  }
};

inline SmithForm smith_normal_form(const Matrix& input) {
  Matrix a = input;
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  Matrix L = identity_matrix(rows), R = identity_matrix(cols);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(L[i], L[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : R) std::swap(r[i], r[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {  // row dst += f*row src
    for (std::size_t j = 0; j < cols; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t j = 0; j < rows; ++j) L[dst][j] += f * L[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows; ++i) a[i][dst] += f * a[i][src];
    for (std::size_t i = 0; i < cols; ++i) R[i][dst] += f * R[i][src];
  };

  std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // smallest nonzero pivot in the remaining block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        add_row(i, t, -floor_div(a[i][t], a[t][t]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        add_col(j, t, -floor_div(a[t][j], a[t][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t < rows && t < cols && a[t][t] < 0) {
      for (std::size_t j = 0; j < cols; ++j) a[t][j] = -a[t][j];
      for (std::size_t j = 0; j < rows; ++j) L[t][j] = -L[t][j];
    }
  }
  return SmithForm{std::move(L), std::move(a), std::move(R)};
}

// Basis of the Z-span of the given rows (row-style Hermite reduction; zero rows dropped)
inline Matrix row_basis(Matrix rows) {
  if (rows.empty()) return {};
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        BigInt f = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        if (rows[r][c] < 0)
          for (auto& v : rows[r]) v = -v;
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

// Inverse over Q
inline std::vector<std::vector<Rational>> rational_inverse(const Matrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw InvalidArgument("singular matrix");
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& v : a[c]) v /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace k3
