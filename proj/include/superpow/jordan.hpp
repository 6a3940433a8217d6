#pragma once
// Generalized Jordan superpairs as coefficient tensors, their axioms, inner
// derivations, tensor-shifts and the Faulkner construction both ways.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "superpow/liesuper.hpp"

namespace sp {

using SparseVec = std::vector<std::pair<int, Scalar>>;  // sorted, no zeros
SparseVec sparsify(const Vec& v);

// {x,y,z} for x,z in an dx-dim side and y in the dy-dim opposite side.
class ProductTensor {
 public:
  ProductTensor() = default;
  ProductTensor(int dx, int dy) : dx_(dx), dy_(dy), t_(static_cast<size_t>(dx) * dy * dx) {}
  int dx() const { return dx_; }
  int dy() const { return dy_; }
  const SparseVec& at(int a, int b, int c) const { return t_[slot(a, b, c)]; }
  void set(int a, int b, int c, const Vec& v) { t_[slot(a, b, c)] = sparsify(v); }
  void set(int a, int b, int c, SparseVec v) { t_[slot(a, b, c)] = std::move(v); }
  Vec dense(int a, int b, int c) const;
  friend bool operator==(const ProductTensor& p, const ProductTensor& q) {
    return p.dx_ == q.dx_ && p.dy_ == q.dy_ && p.t_ == q.t_;
  }

 private:
  size_t slot(int a, int b, int c) const { return (static_cast<size_t>(a) * dy_ + b) * dx_ + c; }
  int dx_ = 0, dy_ = 0;
  std::vector<SparseVec> t_;
};

enum Side { Minus = 0, Plus = 1 };

struct TriplePair {
  Grading par[2];                     // [Minus] = V^-, [Plus] = V^+
  std::vector<std::string> labels[2];
  ProductTensor prod[2];              // prod[s]: x,z in V^s, y in V^{-s}
  int dim(int s) const { return static_cast<int>(par[s].size()); }
};

struct MetricPair : TriplePair {
  Matrix gram;  // <f, v>, f in V^-, v in V^+
  // <v, f> = eta_{f,v} <f, v>
  Scalar pairing(int s, int x, int y) const;
};

TriplePair empty_pair(const Grading& minus, const Grading& plus);
std::vector<std::string> default_labels(int d);

Vec triple(const TriplePair& P, int s, const Vec& x, const Vec& y, const Vec& z);
Matrix D_op(const TriplePair& P, int s, const Vec& x, const Vec& y);

Report check_pair(const TriplePair& P, bool parallel = true);
Report check_metric_pair(const MetricPair& P, bool parallel = true);
bool same_products(const TriplePair& a, const TriplePair& b);
bool same_pair(const MetricPair& a, const MetricPair& b);

struct InnerDerivation {
  Matrix minus, plus;
  Parity parity = 0;
};
InnerDerivation nu(const TriplePair& P, const Vec& f, const Vec& v);
InnerDerivation nu_basis(const TriplePair& P, int f, int v);
Report check_derivation(const TriplePair& P, const InnerDerivation& D);

struct Instr {
  std::vector<InnerDerivation> basis;
  std::vector<std::pair<int, int>> generators;  // (f, v) of each basis element
  Matrix coeffs;  // row f*dplus+v: nu(f,v) in the basis
};
Instr instr_basis(const TriplePair& P);

struct ShiftParam {
  Scalar lambda;
  Parity a = 0;
};
MetricPair tensor_shift(const MetricPair& P, const ShiftParam& alpha);

struct ConsistencyFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The data the correspondence needs on both sides: L, b, the action on V^+
// and the action on V^- (dual to it through gram).
struct PairedModule {
  LieSuperAlgebra alg;
  Matrix b;
  SuperModule plus, minus;
  Matrix gram;
  MetricLieSupermodule metric() const { return {plus, b}; }
};

MetricPair faulkner(const PairedModule& m, bool parallel = true);
MetricPair faulkner_from_module(const MetricLieSupermodule& m);
PairedModule module_from_pair(const MetricPair& P);

}  // namespace sp
