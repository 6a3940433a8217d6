#include <random>

#include "doctest.h"
#include "superpow/catalog.hpp"

using namespace sp;

namespace {
Vec unit(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}

MetricPair one_dim_faulkner() {
  LieSuperAlgebra L({0});
  SuperModule M{L, {0}, {Matrix::identity(1)}};
  return faulkner_from_module({M, Matrix::identity(1)});
}
}  // namespace

TEST_CASE("type I triple products") {
  MetricPair P = type_I(1, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 2; ++s) {
          Vec want(3);
          if (i == j) want[k] += 1;
          if (k == j) want[i] += 1;
          CHECK(triple(P, s, unit(3, i), unit(3, j), unit(3, k)) == want);
        }
  CHECK(is_zero(triple(P, Plus, Vec(3), unit(3, 0), unit(3, 1))));
  CHECK(check_metric_pair(P).empty());
}

TEST_CASE("triple is trilinear") {
  MetricPair P = type_I(2, 2);
  std::mt19937 rng(1);
  auto rv = [&] {
    Vec v(4);
    for (auto& x : v) x = Scalar(static_cast<long>(rng() % 7) - 3);
    return v;
  };
  for (int t = 0; t < 10; ++t) {
    Vec x = rv(), y = rv(), z = rv(), x2 = rv();
    Vec lhs = triple(P, Minus, x, y, z);
    axpy(lhs, Scalar(3), triple(P, Minus, x2, y, z));
    Vec xs = x;
    axpy(xs, Scalar(3), x2);
    CHECK(lhs == triple(P, Minus, xs, y, z));
    CHECK(D_op(P, Plus, x, y) * z == triple(P, Plus, x, y, z));
  }
}

TEST_CASE("checker flags a perturbed product coefficient") {
  MetricPair P = type_I(1, 2);
  Vec v = P.prod[Plus].dense(0, 0, 0);
  v[1] += 1;
  P.prod[Plus].set(0, 0, 0, v);
  Report r = check_pair(P);
  REQUIRE(!r.empty());
  CHECK(!r[0].witness.empty());
  CHECK(check_pair(P, false).size() == r.size());
  MetricPair Z;
  static_cast<TriplePair&>(Z) = empty_pair({}, {});
  Z.gram = Matrix(0, 0);
  CHECK(check_metric_pair(Z).empty());
}

TEST_CASE("inner derivations") {
  MetricPair P = type_I(1, 2);
  CHECK(nu_basis(P, 0, 0).minus.col(0) == Vec{2, 0});
  InnerDerivation z = nu(P, Vec(2), unit(2, 1));
  CHECK(z.minus.is_zero());
  CHECK(z.plus.is_zero());
  for (auto& Q : {type_I(1, 2), type_I(2, 2), type_II(3), type_III(2)}) {
    Instr ib = instr_basis(Q);
    CHECK(!ib.basis.empty());
    for (auto& D : ib.basis) CHECK(check_derivation(Q, D).empty());
  }
  // type I (1,n) has instr = gl_1 + gl_n of dimension 1 + n^2 - 1 = n^2 (the scalars act together)
  CHECK(instr_basis(type_I(1, 3)).basis.size() == 9);
}

TEST_CASE("tensor-shift") {
  MetricPair P = type_I(1, 2);
  CHECK(same_pair(tensor_shift(P, {0, 0}), P));
  MetricPair Q = tensor_shift(P, {0, 1});
  CHECK(Q.par[Minus] == Grading{1, 1});
  for (int i = 0; i < 2; ++i) CHECK(Q.gram(i, i) == Scalar(-1) * P.gram(i, i));
  CHECK(check_metric_pair(Q).empty());
  for (Scalar l1 : {Scalar(2), Scalar(-1, 3)})
    for (Scalar l2 : {Scalar(5), Scalar(1, 2)}) {
      MetricPair a = tensor_shift(tensor_shift(P, {l1, 0}), {l2, 0});
      CHECK(same_products(a, tensor_shift(P, {l1 + l2, 0})));
    }
  for (auto& R : {type_I(1, 2), type_II(3), type_III(2)})
    for (Scalar l : {Scalar(-4), Scalar(1, 2)})
      for (Parity a : {0, 1}) CHECK(check_metric_pair(tensor_shift(R, {l, a})).empty());
}

TEST_CASE("Faulkner construction, hand-solved case") {
  MetricPair P = one_dim_faulkner();
  CHECK(triple(P, Minus, Vec{2}, Vec{3}, Vec{5}) == Vec{30});
  CHECK(check_metric_pair(P).empty());
  LieSuperAlgebra zero;
  SuperModule M{zero, {0, 0}, {}};
  MetricPair Z = faulkner_from_module({M, Matrix(0, 0)});
  CHECK(Z.gram == Matrix::identity(2));
  for (int s = 0; s < 2; ++s)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) CHECK(Z.prod[s].at(a, b, c).empty());
}

TEST_CASE("module_from_pair round-trips catalog pairs") {
  for (auto& P : {type_I(1, 1), type_I(1, 2), type_I(1, 3), type_I(2, 2), type_I(2, 3), type_II(2),
                  type_II(3), type_III(1), type_III(2), tensor_shift(type_I(1, 2), {3, 1})}) {
    PairedModule m = module_from_pair(P);
    CHECK(check_lie(m.alg).empty());
    CHECK(check_metric(m.alg, m.b).empty());
    CHECK(same_pair(faulkner(m), P));
    CHECK(same_pair(faulkner(m, false), P));
  }
  MetricPair Z;
  static_cast<TriplePair&>(Z) = empty_pair({}, {});
  Z.gram = Matrix(0, 0);
  CHECK(module_from_pair(Z).alg.dim() == 0);
}

TEST_CASE("module_from_pair rejects a corrupted pairing") {
  MetricPair P = type_I(1, 2);
  P.gram(0, 0) = 3;
  CHECK_THROWS_AS(module_from_pair(P), ConsistencyFailure);
}

TEST_CASE("faulkner_from_module on gl(1|1) gives a metric pair") {
  MetricPair P = faulkner_from_module({natural_module(1, 1), supertrace_form(1, 1)});
  CHECK(check_metric_pair(P).empty());
  CHECK(check_pair(P).empty());
}
