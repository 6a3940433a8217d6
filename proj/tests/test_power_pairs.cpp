#include "doctest.h"
#include "fixtures.hpp"

using namespace sp;

namespace {
int pm(int e) { return (e & 1) ? -1 : 1; }

// The four-case tables, written out directly.
int hat(int p, int q, int n, int i, int j) {
  if (i <= p && j <= q) return pm(i + j);
  if (i <= p) return pm(i + n);
  if (j <= q) return pm(j + n);
  return 1;
}
int check(int p, int q, int n, int i, int j) {
  if (i <= p && j <= q) return 1;
  if (i <= p) return pm(j + n);
  if (j <= q) return pm(i + n);
  return pm(i + j);
}

Vec unit(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}
}  // namespace

TEST_CASE("sign tables") {
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            CHECK(power_sign(Kind::Alt, p, q, n, i, j) == Scalar(hat(p, q, n, i, j)));
            CHECK(power_sign(Kind::Sym, p, q, n, i, j) == Scalar(check(p, q, n, i, j)));
          }
  CHECK_THROWS(power_sign(Kind::Alt, 1, 1, 2, 0, 1));
}

TEST_CASE("first superminor deletes one row and column") {
  Matrix B = Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}});
  // all even: plain minors
  CHECK(first_superminor(Kind::Alt, B, 3, 3, 0, 0) == Scalar(5 * 10 - 6 * 8));
  CHECK(first_superminor(Kind::Sym, B, 0, 0, 2, 2) == Scalar(5 - 8));
  CHECK(first_superminor(Kind::Sym, B, 3, 3, 2, 2) == Scalar(5 + 8));
}

TEST_CASE("ALT square of type I (1,2)") {
  MetricPair W = power_pair(Kind::Alt, type_I(1, 2), 2);
  REQUIRE(W.dim(Plus) == 1);
  CHECK(W.gram == Matrix::identity(1));
  CHECK(triple(W, Plus, Vec{1}, Vec{1}, Vec{1}) == Vec{6});
  CHECK(triple(W, Minus, Vec{1}, Vec{1}, Vec{1}) == Vec{6});
  MetricPair S = tensor_shift(W, {-4, 0});
  CHECK(triple(S, Plus, Vec{1}, Vec{1}, Vec{1}) == Vec{2});
}

TEST_CASE("SYM square of type I (1,2) pairing") {
  MetricPair W = power_pair(Kind::Sym, type_I(1, 2), 2);
  // basis (1,1), (1,2), (2,2)
  Matrix want = Matrix::identity(3);
  want(0, 0) = 2, want(2, 2) = 2;
  CHECK(W.gram == want);
  CHECK(W.labels[Plus] == std::vector<std::string>{"(1,1)", "(1,2)", "(2,2)"});
}

TEST_CASE("ALT pairing on even input is the det Gram") {
  MetricPair W = power_pair(Kind::Alt, type_I(1, 4), 2);
  CHECK(W.gram == Matrix::identity(6));
}

TEST_CASE("closed forms equal the Faulkner-route oracle") {
  std::vector<MetricPair> inputs{type_I(1, 2), type_I(1, 3), type_III(2), fixtures::random_pair_11(7)};
  for (auto& V : inputs)
    for (auto kind : {Kind::Alt, Kind::Sym}) {
      MetricPair W = power_pair(kind, V, 2);
      CHECK(same_pair(W, oracle_power_pair(power_kind(kind), V, 2)));
      CHECK(same_pair(W, power_pair(kind, V, 2, false)));
      CHECK(check_metric_pair(W).empty());
    }
  for (auto& V : {type_I(1, 1), type_I(1, 2), fixtures::random_pair_11(8)}) {
    MetricPair T = restricted_tensor_power(V, 2);
    CHECK(same_pair(T, oracle_power_pair(PowerKind::Tensor, V, 2)));
    CHECK(check_metric_pair(T).empty());
  }
}

TEST_CASE("tensor products with the unit object") {
  MetricPair V = type_I(1, 2);
  CHECK(same_pair(general_tensor_product({V, unit_pair({0, 0})}), V));
  MetricPair R = fixtures::random_pair_11(3);
  for (Parity a : {0, 1})
    for (Scalar l : {Scalar(-4), Scalar(2, 3)}) {
      ShiftParam al{l, a};
      CHECK(same_pair(general_tensor_product({R, unit_pair(al)}), tensor_shift(R, al)));
    }
}

TEST_CASE("general tensor product is associative on coefficient tensors") {
  MetricPair A = type_I(1, 2), B = fixtures::random_pair_11(11), C = unit_pair({3, 1});
  MetricPair left = general_tensor_product({general_tensor_product({A, B}), C});
  MetricPair flat = general_tensor_product({A, B, C});
  CHECK(same_pair(left, flat));
  CHECK(check_metric_pair(flat).empty());
}

TEST_CASE("restricted powers of all-even pairs are valid") {
  MetricPair T = restricted_tensor_power(type_I(1, 2), 3);
  CHECK(T.dim(Plus) == 8);
  CHECK(check_metric_pair(T).empty());
}

TEST_CASE("generator formula equals nu in the power") {
  for (auto kind : {Kind::Alt, Kind::Sym}) {
    MetricPair V = type_I(1, 3);
    MetricPair W = power_pair(kind, V, 2);
    for (int F = 0; F < W.dim(Minus); ++F)
      for (int Vi = 0; Vi < W.dim(Plus); ++Vi) {
        InnerDerivation g = power_generator(kind, V, 2, F, Vi);
        InnerDerivation d = nu_basis(W, F, Vi);
        CHECK(g.minus == d.minus);
        CHECK(g.plus == d.plus);
      }
  }
}

TEST_CASE("automorphism lifting") {
  MetricPair V = type_I(1, 3);
  for (auto k : {PowerKind::Alt, PowerKind::Sym, PowerKind::Tensor}) {
    Lift id = lift_automorphism(k, V, {Matrix::identity(3), Matrix::identity(3)}, 2);
    CHECK(id.post.empty());
    CHECK(id.map.plus == Matrix::identity(id.map.plus.rows()));
    Matrix A = Matrix::identity(3);
    A(1, 1) = 2, A(2, 2) = 3;
    Lift l = lift_automorphism(k, V, type_I_automorphism(A, 1), 2);
    CHECK(l.post.empty());
    for (Scalar lam : {Scalar(-1), Scalar(2)}) {
      Lift c = lift_automorphism(k, V, scaling_map(V, lam), 2);
      CHECK(c.post.empty());
      int d = c.map.plus.rows();
      CHECK(c.map.plus == Matrix::identity(d) * (lam * lam));
      CHECK((c.map.plus == Matrix::identity(d)) == (lam * lam).is_one());
    }
  }
  Matrix bad = Matrix::identity(3) * Scalar(2);
  CHECK_THROWS(lift_automorphism(PowerKind::Alt, V, {bad, bad}, 2));
}

TEST_CASE("size guard") {
  CHECK_THROWS_AS(power_pair(Kind::Sym, type_I(1, 12), 3), std::length_error);
}
