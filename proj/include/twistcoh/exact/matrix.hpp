#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twistcoh/errors.hpp"
#include "twistcoh/exact/rational.hpp"

namespace twistcoh {

using RationalVector = std::vector<Rational>;

// Coefficients indexed by degree, lowest first.
using Polynomial = std::vector<Rational>;

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += a[i] * b[i];
  }
  return s;
}

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("vector add: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("vector sub: dimension mismatch");
  RationalVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RationalVector operator*(const Rational& c, const RationalVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline RationalVector operator-(const RationalVector& v) { return Rational(-1) * v; }

inline bool is_zero_vector(std::span<const Rational> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw InputError("matrix: entry count does not match shape");
  }
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Columns given as vectors of equal length.
  static RationalMatrix from_columns(const std::vector<RationalVector>& cols, std::size_t rows) {
    RationalMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw InputError("from_columns: dimension mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw InputError("from_rows: dimension mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RationalVector column(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const std::vector<Rational>& entries() const noexcept { return data_; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
    return true;
  }

  void append_encoding(std::string& out) const {
    out.push_back(static_cast<char>(rows_));
    out.push_back(static_cast<char>(cols_));
    for (const auto& x : data_) x.append_encoding(out);
  }
  std::string encoding() const {
    std::string s;
    s.reserve(2 + 3 * data_.size());
    append_encoding(s);
    return s;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += " ";
        s += (*this)(i, j).to_string();
      }
    }
    return s + "]";
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product. Zero entries of either factor are skipped, which makes
/// products of signed-permutation and reflection matrices cheap.
inline RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows())
    throw InputError("mat_mul: dimension mismatch (" + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        if (aik.is_one())
          c(i, j) += bkj;
        else
          c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

inline RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols() != v.size()) throw InputError("matrix-vector: dimension mismatch");
  RationalVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) r[i] = dot(a.row(i), v);
  return r;
}

inline RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sub: dimension mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix add: dimension mismatch");
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline RationalMatrix mat_pow(const RationalMatrix& a, unsigned k) {
  if (!a.is_square()) throw InputError("mat_pow: matrix not square");
  RationalMatrix r = RationalMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) m(p, j).swap(m(r, j));
    const Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(RationalMatrix m) { return rref(m).size(); }

/// Basis of the null space {x : m x = 0}, one vector per free column.
inline std::vector<RationalVector> kernel(RationalMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline RationalMatrix inverse(const RationalMatrix& a) {
  if (!a.is_square()) throw InputError("inverse: matrix not square");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InputError("inverse: matrix is singular");
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

/// Characteristic polynomial det(xI - m), monic, lowest coefficient first.
///
/// Reduces to upper Hessenberg form by exact similarity transforms and then
/// runs the standard Hessenberg determinant recurrence; O(n^3) field ops.
inline Polynomial charpoly(const RationalMatrix& m) {
  if (!m.is_square()) throw InputError("charpoly: matrix not square");
  const std::size_t n = m.rows();
  RationalMatrix h = m;
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && h(i, col).is_zero()) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      for (std::size_t j = 0; j < n; ++j) h(i, j).swap(h(piv_row, j));
      for (std::size_t j = 0; j < n; ++j) h(j, i).swap(h(j, piv_row));
    }
    const Rational inv = h(piv_row, col).inverse();
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (h(r, col).is_zero()) continue;
      const Rational u = h(r, col) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!h(piv_row, j).is_zero()) h(r, j) -= u * h(piv_row, j);
      for (std::size_t j = 0; j < n; ++j)
        if (!h(j, r).is_zero()) h(j, piv_row) += u * h(j, r);
    }
  }

  // p[k] is the charpoly of the leading k x k block.
  std::vector<Polynomial> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial next(k + 1);
    const Rational& diag = h(k - 1, k - 1);
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      if (!diag.is_zero()) next[d] -= diag * p[k - 1][d];
    }
    Rational sub(1);
    for (std::size_t i = 1; i < k; ++i) {
      // sub = h(k-1,k-2) * ... * h(k-i, k-i-1), in 0-based indices
      sub *= h(k - i, k - i - 1);
      if (sub.is_zero()) break;
      const Rational coeff = h(k - i - 1, k - 1) * sub;
      if (coeff.is_zero()) continue;
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] -= coeff * p[k - i - 1][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

/// From det(xI - M) produce (det(1 + sM) in s, det(1 - tM) in t).
inline std::pair<Polynomial, Polynomial> dets_from_charpoly(const Polynomial& cp) {
  if (cp.empty() || !cp.back().is_one()) throw InputError("dets_from_charpoly: polynomial must be monic");
  const std::size_t n = cp.size() - 1;
  Polynomial plus(n + 1), minus(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    // k-th elementary symmetric function of the eigenvalues is (-1)^k c_{n-k}
    const Rational& c = cp[n - k];
    minus[k] = c;
    plus[k] = (k % 2 == 0) ? c : -c;
  }
  return {std::move(plus), std::move(minus)};
}

}  // namespace twistcoh

template <>
struct std::hash<twistcoh::RationalMatrix> {
  std::size_t operator()(const twistcoh::RationalMatrix& m) const noexcept {
    std::size_t h = m.rows() * 31 + m.cols();
    for (const auto& x : m.entries()) h = h * 1000003u ^ x.hash();
    return h;
  }
};
