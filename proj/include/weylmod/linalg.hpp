#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylmod/exactfield.hpp"

namespace weylmod {

using Vec = std::vector<Elem>;

// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t r, std::size_t c) : f_(std::move(f)), r_(r), c_(c), a_(r * c, f_.zero()) {}

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  static Matrix scalar(const Elem& s, std::size_t n) {
    Matrix m(s.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
    return m;
  }
  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.embed(rows[i][j]);
    return m;
  }
  static Matrix column(const Vec& v) {
    Matrix m(v.at(0).field(), v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  const Field& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& e : a_)
      if (!e.is_zero()) return false;
    return true;
  }
  bool is_identity() const { return r_ == c_ && *this == identity(f_, r_); }

  Matrix transposed() const {
    Matrix t(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec apply(const Vec& v) const {
    Vec out(r_, f_.zero());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  template <class Fn>
  Matrix map(Fn fn) const {
    Matrix m(f_, r_, c_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = fn(a_[k]);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) fail(Errc::ShapeMismatch, "matrix product shape mismatch");
    detail::check_same(a.f_, b.f_);
    Matrix m(a.f_, a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        const Elem& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.c_; ++j)
          if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
      }
    return m;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::ShapeMismatch, "matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] += b.a_[k];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) fail(Errc::ShapeMismatch, "matrix difference shape mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] -= b.a_[k];
    return m;
  }
  friend Matrix operator*(const Elem& s, const Matrix& a) {
    return a.map([&](const Elem& e) { return s * e; });
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && (a.a_.empty() || a.f_ == b.f_) && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < r_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elem> a_;
};

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> piv;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    Elem inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Elem c = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= c * m(row, j);
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {v : m v = 0}.
inline std::vector<Vec> nullspace(Matrix m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, free);
    out.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = a.field().one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n && piv[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

inline Matrix block_diag(const Field& f, const std::vector<Matrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(f, r, c);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

// Incrementally maintained row-reduced basis of a subspace of F^n.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t n) : f_(std::move(f)), n_(n) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec>& basis() const { return rows_; }

  Vec reduce(Vec v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Elem c = v[piv_[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[k][j].is_zero()) v[j] -= c * rows_[k][j];
    }
    return v;
  }
  bool contains(const Vec& v) const {
    for (const auto& e : reduce(v))
      if (!e.is_zero()) return false;
    return true;
  }
  // returns true when v enlarged the span
  bool insert(const Vec& v) {
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < n_ && r[p].is_zero()) ++p;
    if (p == n_) return false;
    Elem inv = r[p].inverse();
    for (auto& e : r) e = e * inv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Elem c = rows_[k][p];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!r[j].is_zero()) rows_[k][j] -= c * r[j];
    }
    rows_.push_back(std::move(r));
    piv_.push_back(p);
    return true;
  }

 private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

}  // namespace weylmod
