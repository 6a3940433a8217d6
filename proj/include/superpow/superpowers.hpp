#pragma once
// Alternating / symmetric superpowers of a parity-ordered superspace:
// canonical index families, superminors, matrix powers, the F pairings.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superpow/superlinear.hpp"

namespace sp {

enum class Kind { Alt, Sym };
const char* kind_name(Kind k);

// Entries are 0-based indices into the base space; k = number of even entries.
struct IndexTuple {
  Kind kind = Kind::Alt;
  std::vector<int> e;
  int k = 0;
};

std::string tuple_label(const std::vector<int>& e);  // 1-based "(1,2)"

class PowerBasis {
 public:
  PowerBasis(Kind kind, int d0, int d1, int n);
  Kind kind() const { return kind_; }
  SuperSpace base() const { return {d0_, d1_}; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(tuples_.size()); }
  const IndexTuple& operator[](int i) const { return tuples_[i]; }
  const std::vector<IndexTuple>& tuples() const { return tuples_; }
  const Grading& grading() const { return grading_; }
  int find(const std::vector<int>& e) const;  // -1 if absent
  std::vector<std::string> labels() const;

 private:
  Kind kind_;
  int d0_, d1_, n_;
  std::vector<IndexTuple> tuples_;
  Grading grading_;
  std::map<std::vector<int>, int> index_;
};

// Cached, immutable after construction; safe to share across threads.
const PowerBasis& power_basis(Kind kind, int d0, int d1, int n);

std::vector<IndexTuple> enum_indices(Kind kind, int d0, int d1, int n);
long long dim_power(Kind kind, int d0, int d1, int n);

struct Rearrangement {
  std::vector<int> e;
  int sign;
};
std::vector<Rearrangement> transversal(const IndexTuple& I, int d0);

Scalar superminor(Kind kind, const SuperMatrix& a, const IndexTuple& I, const IndexTuple& J);
Matrix matrix_power(Kind kind, const SuperMatrix& a, int n);

struct Normalized {
  int sign;
  std::vector<int> e;
};
std::optional<Normalized> normalize_pure(Kind kind, std::vector<int> factors, const Grading& g);

struct PowerVector {
  Kind kind;
  SuperSpace base;
  int n;
  Vec coords;
  const PowerBasis& basis() const { return power_basis(kind, base.d0, base.d1, n); }
};
PowerVector expand_pure(Kind kind, const std::vector<SuperVector>& vs);

// Gram of dual-power x power built from a base Gram g (rows dual basis,
// cols basis). weighted multiplies each sector by omega(#odd factors).
Matrix power_gram(Kind kind, const Matrix& g, const PowerBasis& fb, const PowerBasis& vb,
                  bool weighted);
Scalar pairing_F(const PowerVector& f, const PowerVector& v);

struct KernelVerdict {
  enum Type { ScalarRoot, SlCase, NotKernel, LawViolated } type;
  Scalar r;  // the root for ScalarRoot
};
KernelVerdict kernel_check(Kind kind, const SuperMatrix& a, int n);

}  // namespace sp
