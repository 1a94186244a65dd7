#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace locoh {

/// Dense matrix over an exact field, with deterministic Gaussian
/// elimination (first-nonzero pivoting, full reduction). Dimensions stay in
/// the dozens for every construction in this library, so no sparsity or
/// pivot-growth tricks are attempted.
template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(const F& field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const F& field() const { return field_; }

  Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  bool is_zero() const {
    for (const Elem& e : a_)
      if (!F::is_zero(e)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& x = at(i, k);
        if (F::is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  std::vector<Elem> apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix: vector length mismatch");
    std::vector<Elem> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!F::is_zero(at(i, j))) out[i] += at(i, j) * v[j];
    return out;
  }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pr = row;
      while (pr < rows_ && F::is_zero(at(pr, col))) ++pr;
      if (pr == rows_) continue;
      swap_rows(pr, row);
      const Elem inv = field_.one() / at(row, col);
      for (std::size_t j = col; j < cols_; ++j) at(row, j) = at(row, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || F::is_zero(at(i, col))) continue;
        const Elem f = at(i, col);
        for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  /// Basis of the right kernel, one vector per free column, in ascending
  /// free-column order (deterministic).
  std::vector<std::vector<Elem>> kernel_basis() const {
    Matrix r = *this;
    const std::vector<std::size_t> pivots = r.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<Elem> v(cols_, field_.zero());
      v[f] = field_.one();
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Solves A*X = B for each column of B; free variables are set to zero.
  /// Returns nullopt if any column is inconsistent.
  std::optional<Matrix> solve(const Matrix& b) const {
    if (b.rows_ != rows_) throw std::invalid_argument("Matrix: rhs shape mismatch");
    Matrix aug(field_, rows_, cols_ + b.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) aug.at(i, cols_ + j) = b.at(i, j);
    }
    // eliminate only on the coefficient columns
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pr = row;
      while (pr < rows_ && F::is_zero(aug.at(pr, col))) ++pr;
      if (pr == rows_) continue;
      aug.swap_rows(pr, row);
      const Elem inv = field_.one() / aug.at(row, col);
      for (std::size_t j = col; j < aug.cols_; ++j) aug.at(row, j) = aug.at(row, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row || F::is_zero(aug.at(i, col))) continue;
        const Elem f = aug.at(i, col);
        for (std::size_t j = col; j < aug.cols_; ++j) aug.at(i, j) -= f * aug.at(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    for (std::size_t i = row; i < rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!F::is_zero(aug.at(i, cols_ + j))) return std::nullopt;
    Matrix x(field_, cols_, b.cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) x.at(pivots[i], j) = aug.at(i, cols_ + j);
    return x;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> a_;
};

/// Incrementally maintained row space in reduced echelon form. Used to
/// reduce cocycles modulo coboundaries and to pick deterministic coset
/// representatives.
template <class F>
class RowSpace {
 public:
  using Elem = typename F::Elem;

  explicit RowSpace(const F& field) : field_(field) {}

  /// Residual of v modulo the current row space.
  std::vector<Elem> reduce(std::vector<Elem> v) const {
    for (const Row& row : rows_) {
      if (row.pivot >= v.size()) continue;
      const Elem c = v[row.pivot];
      if (F::is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * row.data[j];
    }
    return v;
  }

  /// Reduces v and, if a nonzero residual remains, normalizes it (leading
  /// coefficient one), inserts it, and returns it. Returns nullopt when v
  /// already lies in the span.
  std::optional<std::vector<Elem>> add(std::vector<Elem> v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && F::is_zero(v[p])) ++p;
    if (p == v.size()) return std::nullopt;
    const Elem inv = field_.one() / v[p];
    for (Elem& e : v) e = e * inv;
    // keep full reduction: clear column p in existing rows
    for (Row& row : rows_) {
      const Elem c = row.data[p];
      if (F::is_zero(c)) continue;
      for (std::size_t j = 0; j < v.size(); ++j) row.data[j] -= c * v[j];
    }
    rows_.push_back(Row{p, v});
    return v;
  }

  std::size_t dim() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    std::vector<Elem> data;
  };

  F field_;
  std::vector<Row> rows_;
};

}  // namespace locoh
