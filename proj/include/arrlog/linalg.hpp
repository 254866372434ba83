#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "arrlog/errors.hpp"
#include "arrlog/fields.hpp"

namespace arrlog {

// Dense exact matrix. Everything downstream (graded pieces, cokernels,
// presentations) reduces to rref/nullspace/quotient_dim on these.
template <class F>
struct Matrix {
  using E = elem_t<F>;

  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<E> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const F& field)
      : rows(r), cols(c), data(r * c, field.zero()) {}

  E& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const E& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static Matrix identity(std::size_t n, const F& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<E>>& rows_in, const F& field) {
    Matrix m(rows_in.size(), rows_in.empty() ? 0 : rows_in.front().size(), field);
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
      check_internal(rows_in[i].size() == m.cols, "ragged row list");
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows_in[i][j];
    }
    return m;
  }

  std::vector<E> row(std::size_t r) const {
    return std::vector<E>(data.begin() + r * cols, data.begin() + (r + 1) * cols);
  }
};

template <class F>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<F> reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
};

// Reduced row echelon form by exact Gauss-Jordan elimination. RREF is unique,
// so the pivot-row choice only affects cost: over Q we pick the candidate
// with the smallest numerator/denominator size to damp coefficient growth.
template <class F>
RrefResult<F> rref(Matrix<F> m, const F& field) {
  RrefResult<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t best = m.rows;
    std::size_t best_metric = 0;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (field.is_zero(m.at(i, c))) continue;
      std::size_t metric = field.size_metric(m.at(i, c));
      if (best == m.rows || metric < best_metric) {
        best = i;
        best_metric = metric;
      }
    }
    if (best == m.rows) continue;
    if (best != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(r, j), m.at(best, j));

    const auto piv_inv = field.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = field.mul(m.at(r, j), piv_inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || field.is_zero(m.at(i, c))) continue;
      const auto factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = field.sub(m.at(i, j), field.mul(factor, m.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m, const F& field) {
  return rref(m, field).rank;
}

// Canonical nullspace basis read off the RREF: one vector per free column,
// with a 1 in the free position. Basis order follows the free columns.
template <class F>
std::vector<std::vector<elem_t<F>>> nullspace(const Matrix<F>& m, const F& field) {
  auto rr = rref(m, field);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : rr.pivots) is_pivot[c] = true;

  std::vector<std::vector<elem_t<F>>> basis;
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<elem_t<F>> v(m.cols, field.zero());
    v[c] = field.one();
    for (std::size_t i = 0; i < rr.rank; ++i)
      v[rr.pivots[i]] = field.neg(rr.reduced.at(i, c));
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
Matrix<F> matrix_inverse(const Matrix<F>& m, const F& field) {
  check_internal(m.rows == m.cols, "inverse of a non-square matrix");
  std::size_t n = m.rows;
  Matrix<F> aug(n, 2 * n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = field.one();
  }
  auto rr = rref(std::move(aug), field);
  if (rr.rank < n) fail(Errc::SingularChart, "matrix is singular");
  Matrix<F> inv(n, n, field);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.reduced.at(i, n + j);
  return inv;
}

template <class F>
Matrix<F> stack_rows(const Matrix<F>& a, const Matrix<F>& b, const F& field) {
  check_internal(a.cols == b.cols || a.rows == 0 || b.rows == 0, "column mismatch in stack");
  std::size_t cols = a.rows ? a.cols : b.cols;
  Matrix<F> m(a.rows + b.rows, cols, field);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(a.rows + i, j) = b.at(i, j);
  return m;
}

// dim((span U + span W) / span W) = rank(U ∪ W) − rank(W)
template <class F>
std::size_t quotient_dim(const std::vector<std::vector<elem_t<F>>>& u,
                         const std::vector<std::vector<elem_t<F>>>& w, const F& field) {
  std::size_t dim = 0;
  for (const auto& v : u) dim = std::max(dim, v.size());
  for (const auto& v : w) dim = std::max(dim, v.size());
  for (const auto& v : u) check_internal(v.size() == dim, "ambient dimension mismatch");
  for (const auto& v : w) check_internal(v.size() == dim, "ambient dimension mismatch");

  Matrix<F> mw = Matrix<F>::from_rows(w, field);
  Matrix<F> mu = Matrix<F>::from_rows(u, field);
  if (mw.rows == 0) return rank(mu, field);
  if (mu.rows == 0) return 0;
  mu.cols = mw.cols = dim;
  std::size_t rw = rank(mw, field);
  return rank(stack_rows(mu, mw, field), field) - rw;
}

// Incremental row-space: used where many vectors are reduced against a
// growing span (generator selection, image ranks). Keeps rows in echelon
// form; insertion order determines nothing but cost.
template <class F>
class RowSpace {
 public:
  explicit RowSpace(std::size_t ambient, const F& field) : ambient_(ambient), field_(&field) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }

  // Reduces v against the span; returns true (and absorbs the remainder)
  // if v was independent.
  bool insert(std::vector<elem_t<F>> v) {
    const F& f = *field_;
    check_internal(v.size() == ambient_, "RowSpace ambient mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& coef = v[lead_[k]];
      if (!f.is_zero(coef)) {
        auto c = coef;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[k][j]));
      }
    }
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!f.is_zero(v[j])) {
        lead = j;
        break;
      }
    if (lead == ambient_) return false;
    auto inv = f.inv(v[lead]);
    for (std::size_t j = lead; j < ambient_; ++j) v[j] = f.mul(v[j], inv);
    // keep full reduction: no stored row may be nonzero at another's lead
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& coef = rows_[k][lead];
      if (!f.is_zero(coef)) {
        auto c = coef;
        for (std::size_t j = 0; j < ambient_; ++j)
          rows_[k][j] = f.sub(rows_[k][j], f.mul(c, v[j]));
      }
    }
    rows_.push_back(std::move(v));
    lead_.push_back(lead);
    return true;
  }

  bool contains(std::vector<elem_t<F>> v) const {
    const F& f = *field_;
    check_internal(v.size() == ambient_, "RowSpace ambient mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto& coef = v[lead_[k]];
      if (!f.is_zero(coef)) {
        auto c = coef;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] = f.sub(v[j], f.mul(c, rows_[k][j]));
      }
    }
    for (const auto& x : v)
      if (!f.is_zero(x)) return false;
    return true;
  }

 private:
  std::size_t ambient_;
  const F* field_;
  std::vector<std::vector<elem_t<F>>> rows_;
  std::vector<std::size_t> lead_;
};

}  // namespace arrlog
