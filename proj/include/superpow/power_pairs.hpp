#pragma once
// Tensor, alternating and symmetric superpowers of metric pairs: closed
// forms, the Faulkner-route oracle, and lifting automorphisms.

#include "superpow/catalog.hpp"

namespace sp {

enum class PowerKind { Tensor, Alt, Sym };
PowerKind power_kind(Kind k);
const char* power_kind_name(PowerKind k);

constexpr int kMaxPowerDim = 200;

// 1-based i, j as in the case tables.
Scalar power_sign(Kind kind, int p, int q, int n, int i, int j);
// First superminor: delete row i, column j (0-based) of B whose leading
// p rows and q columns are even.
Scalar first_superminor(Kind kind, const Matrix& B, int p, int q, int i, int j);

MetricPair unit_pair(const ShiftParam& alpha);
MetricPair restricted_tensor_power(const MetricPair& V, int n, bool parallel = true);
MetricPair general_tensor_product(const std::vector<MetricPair>& Vs, bool parallel = true);
MetricPair power_pair(Kind kind, const MetricPair& V, int n, bool parallel = true);
MetricPair oracle_power_pair(PowerKind kind, const MetricPair& V, int n);

// nu(F, V) in the power, via the generator formula, as operators on the
// power pair's two sides.
InnerDerivation power_generator(Kind kind, const MetricPair& V, int n, int F, int Vi);

struct Lift {
  PairMap map;
  Report post;  // hom + pairing violations on the power pair
};
Lift lift_automorphism(PowerKind kind, const MetricPair& V, const PairMap& phi, int n);
PairMap scaling_map(const MetricPair& V, const Scalar& lambda);  // c_lambda

}  // namespace sp
