#pragma once
// JSON encodings of scalars, matrices, power vectors, pairs and reports.

#include <stdexcept>

#include "json.hpp"
#include "superpow/power_pairs.hpp"

namespace sp {

using json = nlohmann::ordered_json;

struct MalformedInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);
json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
json to_json(const SuperMatrix& m);
SuperMatrix supermatrix_from_json(const json& j);
json to_json(const PowerVector& v);
json to_json(const MetricPair& P);
MetricPair pair_from_json(const json& j);
json to_json(const Report& r, size_t limit = 20);

// Promote every scalar to the Gaussian tag (the --field gaussian switch).
MetricPair promoted(const MetricPair& P);

}  // namespace sp
