#include <algorithm>
#include <random>

#include "doctest.h"
#include "superpow/superlinear.hpp"

using namespace sp;

namespace {
// Bubble-sort alpha into parity order, counting adjacent swaps.
int swaps_to_order(std::vector<Parity> a) {
  int swaps = 0;
  for (size_t pass = 0; pass < a.size(); ++pass)
    for (size_t i = 0; i + 1 < a.size(); ++i)
      if (a[i] > a[i + 1]) std::swap(a[i], a[i + 1]), ++swaps;
  return swaps;
}

std::vector<std::vector<Parity>> all_tuples(int len) {
  std::vector<std::vector<Parity>> out;
  for (int m = 0; m < (1 << len); ++m) {
    std::vector<Parity> a(len);
    for (int i = 0; i < len; ++i) a[i] = (m >> i) & 1;
    out.push_back(a);
  }
  return out;
}

Scalar perm_sum(const Matrix& a, int k, bool det_first) {
  // sum over permutations preserving the two blocks, sign only on the det block
  int n = a.rows();
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  Scalar s = 0;
  do {
    bool ok = true;
    for (int i = 0; i < n; ++i) ok &= (i < k) == (p[i] < k);
    if (!ok) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j] && ((i < k) == det_first)) ++inv;
    Scalar t = (inv & 1) ? -1 : 1;
    for (int i = 0; i < n; ++i) t *= a(i, p[i]);
    s += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return s;
}
}  // namespace

TEST_CASE("Koszul signs") {
  CHECK(eta(1, 1) == Scalar(-1));
  CHECK(eta(0, 1) == Scalar(1));
  CHECK(eta3(1, 1, 1) == Scalar(-1));
  CHECK(eta3(1, 1, 0) == Scalar(-1));
  CHECK(eta3(1, 0, 0) == Scalar(1));
}

TEST_CASE("det, per and the hybrids on small cases") {
  Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(determinant(m) == Scalar(-2));
  CHECK(permanent(m) == Scalar(10));
  CHECK(determinant(Matrix(0, 0)) == Scalar(1));
  CHECK(permanent(Matrix(0, 0)) == Scalar(1));
  CHECK(detper(1, m) == Scalar(4));
  CHECK(detper(2, m) == Scalar(-2));
  CHECK(perdet(0, m) == Scalar(-2));
  CHECK(perdet(2, m) == Scalar(10));
  CHECK_THROWS(detper(3, m));
}

TEST_CASE("detper/perdet equal block-restricted permutation sums") {
  std::mt19937 rng(5);
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      Matrix a(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Scalar(static_cast<long>(rng() % 9) - 4);
      CHECK(detper(k, a) == perm_sum(a, k, true));
      CHECK(perdet(k, a) == perm_sum(a, k, false));
    }
}

TEST_CASE("sigma sign counts adjacent swaps and obeys the transposition law") {
  CHECK(sigma_sign({0, 0, 1, 1}) == Scalar(1));
  CHECK(sigma_sign({1, 0}) == Scalar(-1));
  for (int len = 0; len <= 6; ++len)
    for (auto& a : all_tuples(len)) {
      CHECK(sigma_sign(a) == Scalar((swaps_to_order(a) & 1) ? -1 : 1));
      for (int i = 0; i + 1 < len; ++i) {
        auto b = a;
        std::swap(b[i], b[i + 1]);
        CHECK(sigma_sign(b) == Scalar(((a[i] + a[i + 1]) & 1) ? -1 : 1) * sigma_sign(a));
      }
    }
}

TEST_CASE("homogeneity, evenness and duals") {
  SuperSpace s{2, 2};
  CHECK(SuperVector{s, {1, 0, 0, 0}}.parity() == 0);
  CHECK(SuperVector{s, {0, 0, 0, 3}}.parity() == 1);
  CHECK(SuperVector{s, {1, 0, 0, 3}}.parity() == -1);
  CHECK(as_superspace({0, 0, 1}) == SuperSpace{2, 1});
  CHECK_THROWS(as_superspace({1, 0}));
  SuperMatrix odd{s, s, Matrix::identity(4)};
  odd.a(0, 3) = 1;
  CHECK(!odd.is_even());
  CHECK_THROWS(dual_map(odd));

  std::mt19937 rng(9);
  auto r = [&] { return Scalar(static_cast<long>(rng() % 11) - 5); };
  for (int t = 0; t < 50; ++t) {
    SuperMatrix h{s, s, Matrix(4, 4)};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (s.parity(i) == s.parity(j)) h.a(i, j) = r();
    Vec f(4), v(4);
    for (int i = 0; i < 4; ++i) f[i] = r(), v[i] = r();
    Vec hf = dual_map(h).a * f, hv = h.a * v;
    Scalar lhs = 0, rhs = 0;
    for (int i = 0; i < 4; ++i) lhs += hf[i] * v[i], rhs += f[i] * hv[i];
    CHECK(lhs == rhs);
  }
}
