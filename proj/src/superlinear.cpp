#include "superpow/superlinear.hpp"

#include <numeric>
#include <stdexcept>

namespace sp {

bool parity_ordered(const Grading& g) {
  for (size_t i = 1; i < g.size(); ++i)
    if (g[i - 1] > g[i]) return false;
  return true;
}

Grading SuperSpace::grading() const {
  Grading g(dim(), 0);
  for (int i = d0; i < dim(); ++i) g[i] = 1;
  return g;
}

SuperSpace as_superspace(const Grading& g) {
  if (!parity_ordered(g)) throw std::invalid_argument("basis is not parity-ordered");
  int d1 = std::accumulate(g.begin(), g.end(), 0);
  return {static_cast<int>(g.size()) - d1, d1};
}

int SuperVector::parity() const {
  bool ev = false, od = false;
  for (int i = 0; i < space.dim(); ++i)
    if (!coords[i].is_zero()) (space.parity(i) ? od : ev) = true;
  if (ev && od) return -1;
  return od ? 1 : 0;
}

bool is_even_map(const Matrix& a, const Grading& rows, const Grading& cols) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (rows[i] != cols[j] && !a(i, j).is_zero()) return false;
  return true;
}

bool SuperMatrix::is_even() const { return is_even_map(a, rows.grading(), cols.grading()); }

namespace {
std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int i = lo; i < hi; ++i) r.push_back(i);
  return r;
}
void check_k(int k, const Matrix& a) {
  if (!a.square()) throw std::invalid_argument("detper/perdet need a square matrix");
  if (k < 0 || k > a.rows()) throw std::out_of_range("block size out of range");
}
}  // namespace

Scalar detper(int k, const Matrix& a) {
  check_k(k, a);
  auto lead = range(0, k), tail = range(k, a.rows());
  Scalar d = determinant(a.sub(lead, lead));
  if (d.is_zero()) return d;
  return d * permanent(a.sub(tail, tail));
}

Scalar perdet(int k, const Matrix& a) {
  check_k(k, a);
  auto lead = range(0, k), tail = range(k, a.rows());
  Scalar d = determinant(a.sub(tail, tail));
  if (d.is_zero()) return d;
  return permanent(a.sub(lead, lead)) * d;
}

Scalar sigma_sign(const std::vector<Parity>& alpha) {
  int e = 0;
  for (size_t i = 0; i < alpha.size(); ++i)
    for (size_t j = 0; j < i; ++j) e += ((alpha[i] + 1) & 1) * alpha[j];
  return Scalar((e & 1) ? -1 : 1);
}

SuperMatrix dual_map(const SuperMatrix& h) {
  if (!h.is_even()) throw std::invalid_argument("dual_map needs an even map");
  return {h.cols, h.rows, h.a.transpose()};
}

}  // namespace sp
