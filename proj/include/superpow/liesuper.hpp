#pragma once
// Lie superalgebras and supermodules as dense structure constants.

#include <string>
#include <vector>

#include "superpow/superpowers.hpp"

namespace sp {

struct Violation {
  std::string axiom;
  std::vector<int> witness;  // 0-based basis indices
  std::string detail;
};
using Report = std::vector<Violation>;

struct LieSuperAlgebra {
  Grading par;
  std::vector<Scalar> c;  // [x_i, x_j] = sum_k c[(i*d+j)*d+k] x_k

  LieSuperAlgebra() = default;
  explicit LieSuperAlgebra(Grading g)
      : par(std::move(g)), c(par.size() * par.size() * par.size()) {}
  int dim() const { return static_cast<int>(par.size()); }
  Scalar& at(int i, int j, int k) { return c[(static_cast<size_t>(i) * dim() + j) * dim() + k]; }
  const Scalar& at(int i, int j, int k) const {
    return c[(static_cast<size_t>(i) * dim() + j) * dim() + k];
  }
  Vec bracket(const Vec& x, const Vec& y) const;
};

// rho[x] is the matrix of x acting on the module (column v -> x.v).
struct SuperModule {
  LieSuperAlgebra alg;
  Grading par;
  std::vector<Matrix> rho;
  int dim() const { return static_cast<int>(par.size()); }
};

struct MetricLieSupermodule {
  SuperModule mod;
  Matrix b;
};

Report check_lie(const LieSuperAlgebra& L);
Report check_module(const SuperModule& M);
Report check_metric(const LieSuperAlgebra& L, const Matrix& b);

// gl(m|n) on the parity-ordered basis E_ab (even ones first, then odd).
LieSuperAlgebra gl_super(int m, int n, std::vector<Matrix>* basis = nullptr);
SuperModule natural_module(int m, int n);
Matrix supertrace_form(int m, int n);

SuperModule dual_module(const SuperModule& M);

enum class TensorMode { General, Restricted };
LieSuperAlgebra direct_sum(const std::vector<LieSuperAlgebra>& algs);
MetricLieSupermodule direct_sum(const std::vector<MetricLieSupermodule>& ms);

// Tensor basis: lexicographic tuples of factor indices.
std::vector<std::vector<int>> tensor_tuples(const std::vector<int>& dims);
SuperModule tensor_modules(TensorMode mode, const std::vector<SuperModule>& ms);
// <(x)f_i, (x)v_i> from per-factor Grams (rows dual side, cols module side).
Matrix tensor_pairing(const std::vector<Matrix>& grams, const std::vector<Grading>& fpar,
                      const std::vector<Grading>& vpar);

SuperModule power_module(Kind kind, const SuperModule& M, int n);
Matrix power_pairing(Kind kind, const SuperModule& M, int n);

// <x.F, V> = -eta_{x,F} <F, x.V> for all basis x, F, V.
Report duality_violations(const SuperModule& M, const SuperModule& Mdual, const Matrix& gram);

bool is_faithful(const SuperModule& M);

}  // namespace sp
