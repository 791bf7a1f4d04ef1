#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nashfan/int_vector.hpp"

namespace nashfan {

/// Row-major integer matrix, sized at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows, IntVector(cols)), cols_(cols) {}
  explicit IntMatrix(std::vector<IntVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_[0].dim();
    for (const auto& r : rows_) assert(r.dim() == cols_);
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = 1;
    return m;
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const IntVector& row(std::size_t i) const { return rows_[i]; }
  IntVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<IntVector>& rows() const { return rows_; }

  const Int& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Int& at(std::size_t i, std::size_t j) { return rows_[i][j]; }

  IntVector apply(const IntVector& v) const {
    assert(v.dim() == cols_);
    IntVector r(row_count());
    for (std::size_t i = 0; i < rows_.size(); ++i) r[i] = rows_[i].dot(v);
    return r;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, row_count());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.rows_[j][i] = rows_[i][j];
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    assert(cols_ == o.row_count());
    IntMatrix r(row_count(), o.col_count());
    for (std::size_t i = 0; i < row_count(); ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        if (rows_[i][k] == 0) continue;
        for (std::size_t j = 0; j < o.col_count(); ++j)
          r.rows_[i][j] += rows_[i][k] * o.rows_[k][j];
      }
    return r;
  }

  bool operator==(const IntMatrix& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }

 private:
  std::vector<IntVector> rows_;
  std::size_t cols_ = 0;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
  assert(m.row_count() == m.col_count());
  std::size_t n = m.row_count();
  if (n == 0) return 1;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Int prev = 1;
  int sgn_flips = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      ++sgn_flips;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  Int d = a[n - 1][n - 1];
  return (sgn_flips % 2) ? Int(-d) : d;
}

/// Rank over the rationals.
inline std::size_t rank(const IntMatrix& m) {
  std::size_t nr = m.row_count(), nc = m.col_count();
  std::vector<std::vector<Rat>> a(nr, std::vector<Rat>(nc));
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) a[i][j] = Rat(m.at(i, j));
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

struct HermiteResult {
  IntMatrix h;          // row Hermite normal form
  IntMatrix transform;  // unimodular, transform * input == h
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: echelon with positive pivots, entries above
/// each pivot reduced into [0, pivot). The transform is tracked so callers can
/// read off kernels and completions.
inline HermiteResult hermite_normal_form(const IntMatrix& input) {
  std::size_t nr = input.row_count(), nc = input.col_count();
  IntMatrix h = input;
  IntMatrix u = IntMatrix::identity(nr);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(h.row(i), h.row(j));
    std::swap(u.row(i), u.row(j));
  };
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Int& c) {
    if (c == 0) return;
    h.row(dst) += h.row(src) * c;
    u.row(dst) += u.row(src) * c;
  };
  auto negate_row = [&](std::size_t i) {
    h.row(i) = -h.row(i);
    u.row(i) = -u.row(i);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    // gcd-eliminate column c below row r
    while (true) {
      std::size_t p = nr;
      for (std::size_t i = r; i < nr; ++i)
        if (h.at(i, c) != 0 && (p == nr || abs(h.at(i, c)) < abs(h.at(p, c)))) p = i;
      if (p == nr) break;  // column is zero from r down
      swap_rows(r, p);
      bool clean = true;
      for (std::size_t i = r + 1; i < nr; ++i) {
        if (h.at(i, c) == 0) continue;
        add_multiple(i, r, -floor_div(h.at(i, c), h.at(r, c)));
        if (h.at(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h.at(r, c) == 0) continue;
    if (h.at(r, c) < 0) negate_row(r);
    for (std::size_t i = 0; i < r; ++i)
      add_multiple(i, r, -floor_div(h.at(i, c), h.at(r, c)));
    ++r;
  }
  return HermiteResult{std::move(h), std::move(u), r};
}

/// Canonical basis of the integer kernel lattice {x : m * x = 0}, returned as
/// HNF rows (unique for a given matrix).
inline std::vector<IntVector> kernel_basis(const IntMatrix& m) {
  HermiteResult hr = hermite_normal_form(m.transposed());
  std::vector<IntVector> ker;
  for (std::size_t i = hr.rank; i < hr.h.row_count(); ++i)
    ker.push_back(hr.transform.row(i));
  if (ker.empty()) return ker;
  HermiteResult canon = hermite_normal_form(IntMatrix(std::move(ker)));
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < canon.rank; ++i) out.push_back(canon.h.row(i));
  return out;
}

/// Inverse of a matrix with determinant +-1; throws if not unimodular.
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  std::size_t n = m.row_count();
  assert(m.col_count() == n);
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("matrix is singular");
    std::swap(a[c], a[p]);
    Rat piv = a[c][c];
    for (std::size_t j = 0; j < 2 * n; ++j) a[c][j] /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rat& x = a[i][n + j];
      if (x.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
      inv.at(i, j) = x.get_num();
    }
  return inv;
}

/// Extends a primitive vector to a unimodular matrix having it as first row.
inline IntMatrix complete_to_unimodular(const IntVector& v) {
  if (!v.is_primitive())
    throw std::invalid_argument("cannot complete a non-primitive vector to a basis");
  std::size_t d = v.dim();
  // HNF of the column vector: transform * v^T = e_1, so v is the first row
  // of transform^{-1} transposed appropriately.
  IntMatrix col(d, 1);
  for (std::size_t i = 0; i < d; ++i) col.at(i, 0) = v[i];
  HermiteResult hr = hermite_normal_form(col);
  assert(hr.rank == 1 && hr.h.at(0, 0) == 1);
  IntMatrix w = inverse_unimodular(hr.transform).transposed();
  assert(w.row(0) == v);
  return w;
}

}  // namespace nashfan
