#pragma once
// Shared test inputs.

#include <random>

#include "superpow/power_pairs.hpp"

namespace sp::fixtures {

// A valid (1|1) metric pair: Faulkner construction on gl(1|1) with a scaled
// supertrace form, acting on a conjugate of the natural module, then shifted.
inline MetricPair random_pair_11(unsigned seed) {
  std::mt19937 rng(seed);
  auto nz = [&] {
    long v = static_cast<long>(rng() % 5) + 1;
    return Scalar(rng() % 2 ? v : -v, static_cast<long>(rng() % 3) + 1);
  };
  SuperModule M = natural_module(1, 1);
  Matrix g = Matrix::identity(2), gi = Matrix::identity(2);
  g(0, 0) = nz(), g(1, 1) = nz();
  gi(0, 0) = Scalar(1) / g(0, 0), gi(1, 1) = Scalar(1) / g(1, 1);
  for (auto& r : M.rho) r = g * r * gi;
  MetricPair P = faulkner_from_module({M, supertrace_form(1, 1) * nz()});
  return tensor_shift(P, {nz(), 0});
}

inline Matrix random_even(const Grading& g, std::mt19937& rng, int lo = -3, int hi = 3) {
  int d = static_cast<int>(g.size());
  Matrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (g[i] == g[j]) m(i, j) = Scalar(static_cast<long>(rng() % (hi - lo + 1)) + lo);
  return m;
}

}  // namespace sp::fixtures
