#pragma once
// Dense exact matrices and the handful of linear-algebra kernels we need.

#include <optional>
#include <vector>

#include "superpow/scalar.hpp"

namespace sp {

using Vec = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }

  Scalar& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Vec col(int j) const;
  Matrix transpose() const;
  Matrix sub(const std::vector<int>& rs, const std::vector<int>& cs) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Scalar determinant(const Matrix& a);
Scalar permanent(const Matrix& a);  // naive expansion, n <= 8
int rank(const Matrix& a);
Matrix inverse(const Matrix& a);  // throws DivisionByZero when singular
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// Indices of a maximal independent subset of the columns, first-come.
std::vector<int> independent_columns(const Matrix& a);

bool is_zero(const Vec& v);
Vec& axpy(Vec& y, const Scalar& a, const Vec& x);  // y += a x

}  // namespace sp
