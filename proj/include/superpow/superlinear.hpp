#pragma once
// Z2-graded linear algebra: parities, Koszul signs, parity-ordered spaces,
// even supermatrices, det/per hybrids and the sigma sign.

#include <vector>

#include "superpow/matrix.hpp"

namespace sp {

using Parity = int;  // 0 even, 1 odd
inline Parity padd(Parity a, Parity b) { return (a + b) & 1; }

// Koszul signs as +-1 ints; the Scalar versions are for the public API.
inline int sgn_eta(Parity x, Parity y) { return (x & y & 1) ? -1 : 1; }
inline int sgn_eta3(Parity x, Parity y, Parity z) {
  return ((x * y + y * z + z * x) & 1) ? -1 : 1;
}
inline Scalar eta(Parity x, Parity y) { return Scalar(sgn_eta(x, y)); }
inline Scalar eta3(Parity x, Parity y, Parity z) { return Scalar(sgn_eta3(x, y, z)); }

// Per-basis-vector parities; not necessarily parity-ordered.
using Grading = std::vector<Parity>;
bool parity_ordered(const Grading& g);

struct SuperSpace {
  int d0 = 0, d1 = 0;
  int dim() const { return d0 + d1; }
  Parity parity(int i) const { return i < d0 ? 0 : 1; }
  Grading grading() const;
  friend bool operator==(SuperSpace a, SuperSpace b) { return a.d0 == b.d0 && a.d1 == b.d1; }
};
// Counts of a parity-ordered grading; throws if it is not parity-ordered.
SuperSpace as_superspace(const Grading& g);

struct SuperVector {
  SuperSpace space;
  Vec coords;
  // -1 when not homogeneous (the zero vector counts as even)
  int parity() const;
};

struct SuperMatrix {
  SuperSpace rows, cols;
  Matrix a;
  bool is_even() const;
};

// Even map between graded bases (columns are images).
bool is_even_map(const Matrix& a, const Grading& rows, const Grading& cols);

Scalar detper(int k, const Matrix& a);
Scalar perdet(int k, const Matrix& a);
Scalar sigma_sign(const std::vector<Parity>& alpha);
inline Scalar omega(int k) { return Scalar(((k * (k - 1) / 2) & 1) ? -1 : 1); }

// Left dual of an even map for the canonical dual bases: the transpose.
SuperMatrix dual_map(const SuperMatrix& h);

}  // namespace sp
