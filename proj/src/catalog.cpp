#include "superpow/catalog.hpp"

#include "superpow/power_pairs.hpp"

namespace sp {

Report check_hom(const PairMap& f, const TriplePair& src, const TriplePair& tgt) {
  Report rep;
  for (int s = 0; s < 2; ++s) {
    const Matrix &fs = f.side(s), &fo = f.side(1 - s);
    if (fs.rows() != tgt.dim(s) || fs.cols() != src.dim(s)) {
      rep.push_back({"shape", {s}, "map does not match the pair dimensions"});
      return rep;
    }
    int dx = src.dim(s), dy = src.dim(1 - s);
    for (int a = 0; a < dx; ++a)
      for (int b = 0; b < dy; ++b)
        for (int c = 0; c < dx; ++c) {
          Vec lhs = fs * src.prod[s].dense(a, b, c);
          Vec rhs = triple(tgt, s, fs.col(a), fo.col(b), fs.col(c));
          if (lhs != rhs) rep.push_back({"homomorphism", {s, a, b, c}, "f{x,y,z} != {fx,fy,fz}"});
        }
  }
  return rep;
}

std::optional<Scalar> check_similarity(const PairMap& f, const MetricPair& src, const MetricPair& tgt) {
  Matrix m = f.minus.transpose() * tgt.gram * f.plus;
  std::optional<Scalar> mu;
  for (int i = 0; i < m.rows() && !mu; ++i)
    for (int j = 0; j < m.cols() && !mu; ++j)
      if (!src.gram(i, j).is_zero()) mu = m(i, j) / src.gram(i, j);
  if (!mu) return std::nullopt;
  if (m != src.gram * *mu) return std::nullopt;
  return mu;
}

bool is_automorphism(const PairMap& f, const MetricPair& V) {
  if (rank(f.minus) != V.dim(Minus) || rank(f.plus) != V.dim(Plus)) return false;
  if (!check_hom(f, V, V).empty()) return false;
  auto mu = check_similarity(f, V, V);
  return mu && mu->is_one();
}

namespace {

Matrix unit_matrix(int r, int c, int i, int j) {
  Matrix m(r, c);
  m(i, j) = 1;
  return m;
}

MetricPair even_pair(int d, const std::vector<std::string>& labels) {
  MetricPair P;
  static_cast<TriplePair&>(P) = empty_pair(Grading(d, 0), Grading(d, 0));
  P.labels[Minus] = P.labels[Plus] = labels;
  return P;
}

int kd(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

MetricPair type_I(int p, int q) {
  if (p < 1 || q < 1 || p > q) throw std::invalid_argument("type_I needs 1 <= p <= q");
  int d = p * q;
  std::vector<Matrix> E;
  std::vector<std::string> labels;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < q; ++b) {
      E.push_back(unit_matrix(p, q, a, b));
      labels.push_back("E" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }
  MetricPair P = even_pair(d, labels);
  P.gram = Matrix::identity(d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Matrix yt = E[y].transpose();
        Matrix r = E[x] * yt * E[z] + E[z] * yt * E[x];
        Vec v(d);
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < q; ++b) v[a * q + b] = r(a, b);
        for (int s = 0; s < 2; ++s) P.prod[s].set(x, y, z, v);
      }
  return P;
}

std::vector<Matrix> type_basis_matrices(int type, int n) {
  std::vector<Matrix> out;
  for (int i = 0; i < n; ++i)
    for (int j = type == 2 ? i + 1 : i; j < n; ++j) {
      Matrix m = unit_matrix(n, n, i, j);
      if (type == 2)
        m(j, i) = -1;
      else
        m(j, i) += 1;
      out.push_back(m);
    }
  return out;
}

namespace {

std::vector<std::pair<int, int>> type_index(int type, int n) {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i)
    for (int j = type == 2 ? i + 1 : i; j < n; ++j) idx.push_back({i, j});
  return idx;
}

// coordinate of E^_{ab} (II: antisymmetric) or E^v_{ab} (III: symmetric)
void add_hat(int type, int n, Vec& v, int a, int b, const Scalar& c) {
  if (c.is_zero()) return;
  auto idx = type_index(type, n);
  if (type == 2) {
    if (a == b) return;
    int sign = a < b ? 1 : -1;
    if (a > b) std::swap(a, b);
    for (size_t k = 0; k < idx.size(); ++k)
      if (idx[k] == std::make_pair(a, b)) v[k] += sign < 0 ? -c : c;
    return;
  }
  if (a > b) std::swap(a, b);
  for (size_t k = 0; k < idx.size(); ++k)
    if (idx[k] == std::make_pair(a, b)) v[k] += c;
}

MetricPair displayed_type(int type, int n) {
  auto idx = type_index(type, n);
  int d = static_cast<int>(idx.size());
  std::vector<std::string> labels;
  for (auto [i, j] : idx)
    labels.push_back((type == 2 ? "A" : "S") + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  MetricPair P = even_pair(d, labels);
  P.gram = Matrix(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      auto [i1, i2] = idx[x];
      auto [j1, j2] = idx[y];
      P.gram(x, y) = type == 2 ? kd(i1, j1) * kd(i2, j2)
                               : 2 * (kd(i1, j2) * kd(i2, j1) + kd(i1, j1) * kd(i2, j2));
    }
  int sg = type == 2 ? -1 : 1;  // II: differences, III: sums
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        auto [i1, i2] = idx[x];
        auto [j1, j2] = idx[y];
        auto [k1, k2] = idx[z];
        Vec v(d);
        add_hat(type, n, v, i1, k1, kd(i2, j2) * kd(j1, k2) + sg * kd(i2, j1) * kd(j2, k2));
        add_hat(type, n, v, i1, k2, kd(i2, j1) * kd(j2, k1) + sg * kd(i2, j2) * kd(j1, k1));
        add_hat(type, n, v, i2, k1, kd(i1, j1) * kd(j2, k2) + sg * kd(i1, j2) * kd(j1, k2));
        add_hat(type, n, v, i2, k2, kd(i1, j2) * kd(j1, k1) + sg * kd(i1, j1) * kd(j2, k1));
        for (int s = 0; s < 2; ++s) P.prod[s].set(x, y, z, v);
      }
  return P;
}

}  // namespace

MetricPair type_II(int n) {
  if (n < 2) throw std::invalid_argument("type_II needs n >= 2");
  return displayed_type(2, n);
}

MetricPair type_III(int n) {
  if (n < 1) throw std::invalid_argument("type_III needs n >= 1");
  return displayed_type(3, n);
}

std::optional<Scalar> transpose_relation(int type, int n) {
  MetricPair P = type == 2 ? type_II(n) : type_III(n);
  auto E = type_basis_matrices(type, n);
  auto idx = type_index(type, n);
  int d = static_cast<int>(E.size());
  std::optional<Scalar> c;
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Matrix yt = E[y].transpose();
        Matrix r = E[x] * yt * E[z] + E[z] * yt * E[x];
        Vec v(d);
        for (int k = 0; k < d; ++k) {
          auto [i, j] = idx[k];
          v[k] = i == j ? r(i, i) / Scalar(2) : r(i, j);
        }
        Vec shown = P.prod[Plus].dense(x, y, z);
        for (int k = 0; k < d; ++k) {
          if (v[k].is_zero() && shown[k].is_zero()) continue;
          if (v[k].is_zero()) return std::nullopt;
          Scalar ratio = shown[k] / v[k];
          if (!c) c = ratio;
          if (*c != ratio) return std::nullopt;
        }
      }
  return c;
}

Matrix trace_I_gram(int type, int n) {
  auto E = type_basis_matrices(type, n);
  int d = static_cast<int>(E.size());
  Matrix g(d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Matrix m = E[x] * E[y].transpose();
      Scalar t;
      for (int i = 0; i < n; ++i) t += m(i, i);
      g(x, y) = t;
    }
  return g;
}

PairMap type_I_automorphism(const Matrix& A, int p) {
  int q = A.rows();
  if (!A.square()) throw std::invalid_argument("type_I_automorphism needs a square matrix");
  Matrix Ait = inverse(A).transpose();  // throws on singular A
  int d = p * q;
  auto right_mult = [&](const Matrix& M) {
    Matrix m(d, d);  // x -> x M on coordinates
    for (int a = 0; a < p; ++a)
      for (int c = 0; c < q; ++c)
        for (int b = 0; b < q; ++b) m(a * q + b, a * q + c) = M(c, b);
    return m;
  };
  return {right_mult(Ait), right_mult(A)};
}

namespace {

ExampleReport verify_example(int type, int n) {
  ExampleReport r;
  Kind kind = type == 2 ? Kind::Alt : Kind::Sym;
  r.shift = {Scalar(-4), 0};
  r.expected = type == 2 ? Scalar(-1) : Scalar(1, 2);
  MetricPair V = type == 2 ? type_II(n) : type_III(n);
  MetricPair W = tensor_shift(power_pair(kind, type_I(1, n), 2), r.shift);
  const PowerBasis& pb = power_basis(kind, n, 0, 2);
  auto idx = type_index(type, n);
  int d = static_cast<int>(idx.size());
  Matrix f(pb.size(), d);
  Scalar coef = type == 2 ? Scalar::i() : Scalar(1);
  for (int k = 0; k < d; ++k) {
    int row = pb.find({idx[k].first, idx[k].second});
    if (row < 0) throw std::logic_error("basis element missing from the power");
    f(row, k) = coef;
  }
  PairMap map{f, f};
  r.invertible = f.square() && rank(f) == d;
  r.hom = check_hom(map, V, W);
  r.multiplier = check_similarity(map, V, W);
  if (!r.invertible) r.notes.push_back("map is not invertible");
  if (!r.hom.empty()) r.notes.push_back("homomorphism check failed");
  if (!r.multiplier) r.notes.push_back("map is not a similarity");
  else if (*r.multiplier != r.expected) r.notes.push_back("unexpected multiplier " + r.multiplier->str());
  r.pass = r.notes.empty();
  return r;
}

}  // namespace

ExampleReport verify_example_II(int n) {
  if (n < 2) throw std::invalid_argument("verify_example_II needs n >= 2");
  return verify_example(2, n);
}

ExampleReport verify_example_III(int n) {
  if (n < 1) throw std::invalid_argument("verify_example_III needs n >= 1");
  return verify_example(3, n);
}

}  // namespace sp
