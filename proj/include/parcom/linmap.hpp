#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parcom/rational.hpp"

namespace parcom {

// Dense exact matrix. Column-vector convention: rows=r, cols=c is a linear map
// from a c-dimensional space to an r-dimensional space.
class LinMap {
 public:
  LinMap() : rows_(0), cols_(0) {}
  LinMap(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static LinMap identity(std::size_t n) {
    LinMap m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static LinMap zero(std::size_t rows, std::size_t cols) { return LinMap(rows, cols); }

  static LinMap from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    LinMap m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("LinMap: ragged rows");
      std::size_t j = 0;
      for (const auto& x : row) m.at(i, j++) = x;
      ++i;
    }
    return m;
  }

  static LinMap from_rows(std::size_t cols, const std::vector<std::vector<Rational>>& rows) {
    LinMap m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("LinMap: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  // Single-column matrix from a coordinate vector.
  static LinMap column(const std::vector<Rational>& v) {
    LinMap m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const LinMap& a, const LinMap& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const LinMap& a, const LinMap& b) { return !(a == b); }

  // Composition a∘b as matrix product.
  friend LinMap operator*(const LinMap& a, const LinMap& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("LinMap: compose dim mismatch");
    LinMap r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }

  friend LinMap operator+(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("LinMap: add dim mismatch");
    LinMap r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
  }
  friend LinMap operator-(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("LinMap: sub dim mismatch");
    LinMap r = a;
    for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
  }
  friend LinMap operator*(const Rational& s, const LinMap& m) {
    LinMap r = m;
    for (auto& x : r.e_) x *= s;
    return r;
  }

  LinMap transpose() const {
    LinMap r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("LinMap: apply dim mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  std::vector<Rational> row(std::size_t i) const {
    std::vector<Rational> r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }
  std::vector<Rational> col(std::size_t j) const {
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = at(i, j);
    return r;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i == 0 ? "[" : " [";
      for (std::size_t j = 0; j < cols_; ++j) {
        s += at(i, j).str();
        if (j + 1 < cols_) s += ", ";
      }
      s += "]";
      if (i + 1 < rows_) s += "\n";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

inline LinMap hstack(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  LinMap r(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

inline LinMap vstack(const LinMap& a, const LinMap& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
  LinMap r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

// Kronecker product: the matrix of a⊗b under the flat index convention
// e_i ⊗ e_j ↦ i·(right dim)+j, left factor major.
inline LinMap kron(const LinMap& a, const LinMap& b) {
  LinMap r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rational& bjl = b.at(j, l);
          if (!bjl.is_zero()) r.at(i * b.rows() + j, k * b.cols() + l) = aik * bjl;
        }
    }
  return r;
}

struct Rref {
  LinMap matrix;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

// Reduced row echelon form. Deterministic: for each column in order, the first
// unused row with a nonzero entry becomes the pivot row.
inline Rref rref(LinMap m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m.at(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(lead, j));
    Rational inv = m.at(lead, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m.at(lead, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return Rref{std::move(m), std::move(pivots)};
}

inline std::size_t rank(const LinMap& m) { return rref(m).rank(); }

// Solves a∘x = b for x with the canonical particular solution (free
// coordinates zero). Returns nullopt iff inconsistent.
inline std::optional<LinMap> solve_linear(const LinMap& a, const LinMap& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  Rref r = rref(hstack(a, b));
  for (std::size_t p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  LinMap x(a.cols(), b.cols());
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(r.pivots[k], j) = r.matrix.at(k, a.cols() + j);
  return x;
}

// Factors target through an epimorphism on the right: returns the unique u
// with u∘through = target when kernel(through) ⊆ kernel(target).
inline std::optional<LinMap> solve_factor(const LinMap& through, const LinMap& target) {
  if (through.cols() != target.cols())
    throw std::invalid_argument("solve_factor: domain mismatch");
  auto xt = solve_linear(through.transpose(), target.transpose());
  if (!xt) return std::nullopt;
  LinMap u = xt->transpose();
  if (!(u * through == target)) return std::nullopt;
  return u;
}

// Lifts target through a monomorphism on the left: returns u with
// through∘u = target when image(target) ⊆ image(through).
inline std::optional<LinMap> solve_lift(const LinMap& through, const LinMap& target) {
  if (through.rows() != target.rows())
    throw std::invalid_argument("solve_lift: codomain mismatch");
  auto x = solve_linear(through, target);
  if (!x) return std::nullopt;
  if (!(through * *x == target)) return std::nullopt;
  return x;
}

inline std::optional<LinMap> inverse(const LinMap& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  auto inv = solve_linear(m, LinMap::identity(m.rows()));
  if (!inv) return std::nullopt;
  if (!(*inv * m == LinMap::identity(m.rows()))) return std::nullopt;
  return inv;
}

inline bool is_injective(const LinMap& m) { return rank(m) == m.cols(); }
inline bool is_surjective(const LinMap& m) { return rank(m) == m.rows(); }

}  // namespace parcom
