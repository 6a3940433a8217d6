#pragma once
// Simple Jordan pairs of types I, II, III, pair maps, and the two worked
// isomorphisms with shifted superpowers of type I (1,n).

#include <optional>

#include "superpow/jordan.hpp"

namespace sp {

struct PairMap {
  Matrix minus, plus;  // columns are images of basis vectors
  const Matrix& side(int s) const { return s == Minus ? minus : plus; }
};

Report check_hom(const PairMap& f, const TriplePair& src, const TriplePair& tgt);
// The mu with <f-x, f+y> = mu <x,y>, if any.
std::optional<Scalar> check_similarity(const PairMap& f, const MetricPair& src, const MetricPair& tgt);
bool is_automorphism(const PairMap& f, const MetricPair& V);

MetricPair type_I(int p, int q);
MetricPair type_II(int n);
MetricPair type_III(int n);
PairMap type_I_automorphism(const Matrix& A, int p);

// Matrices of the Ê_ij (II) or Ě_ij (III) basis inside M_n.
std::vector<Matrix> type_basis_matrices(int type, int n);
// Global factor c with displayed products = c (xy^T z + zy^T x), if one exists.
std::optional<Scalar> transpose_relation(int type, int n);
// Gram of tr(x y^T) on the type's basis.
Matrix trace_I_gram(int type, int n);

struct ExampleReport {
  bool pass = false;
  bool invertible = false;
  Report hom;
  std::optional<Scalar> multiplier;
  Scalar expected;
  ShiftParam shift;
  std::vector<std::string> notes;
};
ExampleReport verify_example_II(int n);
ExampleReport verify_example_III(int n);

}  // namespace sp
