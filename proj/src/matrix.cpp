#include "superpow/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace sp {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::col(int j) const {
  Vec v(r_);
  for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::sub(const std::vector<int>& rs, const std::vector<int>& cs) const {
  Matrix m(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
  for (size_t i = 0; i < rs.size(); ++i)
    for (size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
  return m;
}

bool Matrix::is_zero() const {
  for (auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in +");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch in -");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("shape mismatch in *");
  Matrix m(a.r_, b.c_);
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.c_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.c_ != static_cast<int>(v.size())) throw std::invalid_argument("shape mismatch in A*v");
  Vec w(a.r_);
  for (int k = 0; k < a.c_; ++k) {
    if (v[k].is_zero()) continue;
    for (int i = 0; i < a.r_; ++i)
      if (!a(i, k).is_zero()) w[i] += a(i, k) * v[k];
  }
  return w;
}

Scalar determinant(const Matrix& a0) {
  if (!a0.square()) throw std::invalid_argument("determinant of non-square matrix");
  Matrix a = a0;
  int n = a.rows();
  Scalar d(1);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Scalar f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

namespace {
Scalar per_rec(const Matrix& a, int row, unsigned used) {
  int n = a.rows();
  if (row == n) return Scalar(1);
  Scalar s;
  for (int j = 0; j < n; ++j) {
    if ((used >> j) & 1u) continue;
    if (a(row, j).is_zero()) continue;
    Scalar t = per_rec(a, row + 1, used | (1u << j));
    if (!t.is_zero()) s += a(row, j) * t;
  }
  return s;
}
}  // namespace

Scalar permanent(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("permanent of non-square matrix");
  if (a.rows() > 8) throw std::length_error("permanent limited to n <= 8");
  return per_rec(a, 0, 0u);
}

namespace {
// Row-reduce in place; returns pivot columns.
std::vector<int> rref(Matrix& a, int ncols) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < ncols && r < a.rows(); ++c) {
    int p = r;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    Scalar inv = Scalar(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      Scalar f = a(i, c);
      for (int j = c; j < a.cols(); ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}
}  // namespace

int rank(const Matrix& a) {
  Matrix m = a;
  return static_cast<int>(rref(m, m.cols()).size());
}

std::vector<int> independent_columns(const Matrix& a) {
  Matrix m = a;
  return rref(m, m.cols());
}

Matrix inverse(const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  Matrix m(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  auto piv = rref(m, n);
  if (static_cast<int>(piv.size()) < n) throw DivisionByZero();
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("shape mismatch in solve");
  Matrix m(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    m(i, a.cols()) = b[i];
  }
  auto piv = rref(m, a.cols());
  for (int i = static_cast<int>(piv.size()); i < a.rows(); ++i)
    if (!m(i, a.cols()).is_zero()) return std::nullopt;
  Vec x(a.cols());
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m(r, a.cols());
  return x;
}

bool is_zero(const Vec& v) {
  for (auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec& axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (a.is_zero()) return y;
  for (size_t k = 0; k < y.size(); ++k)
    if (!x[k].is_zero()) y[k] += a * x[k];
  return y;
}

}  // namespace sp
