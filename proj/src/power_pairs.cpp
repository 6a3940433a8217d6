#include "superpow/power_pairs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sp {

PowerKind power_kind(Kind k) { return k == Kind::Alt ? PowerKind::Alt : PowerKind::Sym; }

const char* power_kind_name(PowerKind k) {
  switch (k) {
    case PowerKind::Tensor: return "tensor";
    case PowerKind::Alt: return "alt";
    default: return "sym";
  }
}

Scalar power_sign(Kind kind, int p, int q, int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || p < 0 || p > n || q < 0 || q > n)
    throw std::out_of_range("power_sign: index out of range");
  auto neg = [](int e) { return Scalar((e & 1) ? -1 : 1); };
  bool ip = i <= p, jq = j <= q;
  if (kind == Kind::Alt) {
    if (ip && jq) return neg(i + j);
    if (ip) return neg(i + n);
    if (jq) return neg(j + n);
    return Scalar(1);
  }
  if (ip && jq) return Scalar(1);
  if (ip) return neg(j + n);
  if (jq) return neg(i + n);
  return neg(i + j);
}

Scalar first_superminor(Kind kind, const Matrix& B, int p, int q, int i, int j) {
  int n = B.rows();
  std::vector<int> re, ro, ce, co;
  for (int r = 0; r < n; ++r)
    if (r != i) (r < p ? re : ro).push_back(r);
  for (int c = 0; c < n; ++c)
    if (c != j) (c < q ? ce : co).push_back(c);
  if (re.size() != ce.size()) return Scalar(0);
  Matrix ev = B.sub(re, ce), od = B.sub(ro, co);
  if (kind == Kind::Alt) {
    Scalar d = determinant(ev);
    return d.is_zero() ? d : d * permanent(od);
  }
  Scalar d = determinant(od);
  return d.is_zero() ? d : permanent(ev) * d;
}

MetricPair unit_pair(const ShiftParam& al) {
  MetricPair U;
  static_cast<TriplePair&>(U) = empty_pair({al.a}, {al.a});
  U.labels[Minus] = {"u-"};
  U.labels[Plus] = {"u+"};
  int ea = sgn_eta(al.a, al.a);
  U.gram = Matrix(1, 1);
  U.gram(0, 0) = ea;
  U.prod[Plus].set(0, 0, 0, Vec{al.lambda});
  U.prod[Minus].set(0, 0, 0, Vec{ea < 0 ? -al.lambda : al.lambda});
  return U;
}

namespace {

Scalar signed_(Scalar x, int s) { return s < 0 ? -x : x; }

void guard(long long d) {
  if (d > kMaxPowerDim) throw std::length_error("power dimension exceeds " + std::to_string(kMaxPowerDim));
}

// (x) of the factors' bases; restricted = all factors the same pair and the
// (i,j) double sum, otherwise the diagonal single sum.
MetricPair tensor_assembly(const std::vector<const MetricPair*>& Vs, bool restricted, bool parallel) {
  int n = static_cast<int>(Vs.size());
  std::vector<int> dims[2];
  std::vector<Grading> pars[2];
  std::vector<Matrix> grams;
  for (auto* V : Vs) {
    for (int s = 0; s < 2; ++s) {
      dims[s].push_back(V->dim(s));
      pars[s].push_back(V->par[s]);
    }
    grams.push_back(V->gram);
  }
  std::vector<std::vector<int>> tup[2] = {tensor_tuples(dims[0]), tensor_tuples(dims[1])};
  guard(static_cast<long long>(std::max(tup[0].size(), tup[1].size())));
  Grading g[2];
  std::vector<std::string> lab[2];
  for (int s = 0; s < 2; ++s)
    for (auto& t : tup[s]) {
      Parity p = 0;
      std::string l;
      for (int k = 0; k < n; ++k) {
        p = padd(p, pars[s][k][t[k]]);
        l += (k ? "@" : "") + Vs[k]->labels[s][t[k]];
      }
      g[s].push_back(p);
      lab[s].push_back(l);
    }
  MetricPair W;
  static_cast<TriplePair&>(W) = empty_pair(g[Minus], g[Plus]);
  W.labels[Minus] = lab[Minus];
  W.labels[Plus] = lab[Plus];
  W.gram = tensor_pairing(grams, pars[Minus], pars[Plus]);

  auto index = [&](int s, const std::vector<int>& e) {
    int r = 0;
    for (int k = 0; k < n; ++k) r = r * dims[s][k] + e[k];
    return r;
  };
  for (int s = 0; s < 2; ++s) {
    int NX = static_cast<int>(tup[s].size()), NY = static_cast<int>(tup[1 - s].size());
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
    for (int X = 0; X < NX; ++X)
      for (int Y = 0; Y < NY; ++Y) {
        const auto &x = tup[s][X], &y = tup[1 - s][Y];
        auto px = [&](int k) { return pars[s][k][x[k]]; };
        auto py = [&](int k) { return pars[1 - s][k][y[k]]; };
        int pre = 1;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < i; ++j) pre *= sgn_eta(px(i), py(j));
        std::vector<Scalar> pr(n);
        for (int k = 0; k < n; ++k) pr[k] = Vs[k]->pairing(s, x[k], y[k]);
        for (int Z = 0; Z < NX; ++Z) {
          const auto& z = tup[s][Z];
          Vec out(NX);
          for (int i = 0; i < n; ++i) {
            Scalar c = signed_(Scalar(1), pre);
            for (int k = 0; k < n && !c.is_zero(); ++k)
              if (k != i) c *= pr[k];
            if (c.is_zero()) continue;
            int jlo = restricted ? 0 : i, jhi = restricted ? n : i + 1;
            for (int j = jlo; j < jhi; ++j) {
              int sg = 1;
              for (int t = 0; t < j; ++t)
                sg *= sgn_eta(px(i), pars[s][t][z[t]]) * sgn_eta(py(i), pars[s][t][z[t]]);
              for (auto& [e, v] : Vs[i]->prod[s].at(x[i], y[i], z[j])) {
                auto w = z;
                w[j] = e;
                out[index(s, w)] += signed_(c * v, sg);
              }
            }
          }
          W.prod[s].set(X, Y, Z, out);
        }
      }
  }
  return W;
}

// B(i,j) = <f_i, v_j> for f in V^s
Matrix pairing_block(const MetricPair& V, int s, const std::vector<int>& F, const std::vector<int>& Vt) {
  int n = static_cast<int>(F.size());
  Matrix B(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B(i, j) = V.pairing(s, F[i], Vt[j]);
  return B;
}

// omega * sign * first superminor for each (i, j)
Matrix generator_coeffs(Kind kind, const Matrix& B, int p, int q) {
  int n = B.rows();
  Matrix K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar m = first_superminor(kind, B, p, q, i, j);
      if (!m.is_zero()) K(i, j) = omega(n - p) * power_sign(kind, p, q, n, i + 1, j + 1) * m;
    }
  return K;
}

}  // namespace

MetricPair restricted_tensor_power(const MetricPair& V, int n, bool parallel) {
  if (n < 2) throw std::invalid_argument("restricted_tensor_power needs n > 1");
  if (V.dim(Minus) == 0 && V.dim(Plus) == 0) throw std::invalid_argument("zero pair");
  return tensor_assembly(std::vector<const MetricPair*>(n, &V), true, parallel);
}

MetricPair general_tensor_product(const std::vector<MetricPair>& Vs, bool parallel) {
  if (Vs.empty()) throw std::invalid_argument("general_tensor_product: no factors");
  std::vector<const MetricPair*> ptrs;
  for (auto& V : Vs) ptrs.push_back(&V);
  return tensor_assembly(ptrs, false, parallel);
}

MetricPair power_pair(Kind kind, const MetricPair& V, int n, bool parallel) {
  SuperSpace S[2] = {as_superspace(V.par[Minus]), as_superspace(V.par[Plus])};
  guard(std::max(dim_power(kind, S[0].d0, S[0].d1, n), dim_power(kind, S[1].d0, S[1].d1, n)));
  const PowerBasis* pb[2] = {&power_basis(kind, S[0].d0, S[0].d1, n),
                             &power_basis(kind, S[1].d0, S[1].d1, n)};
  MetricPair W;
  static_cast<TriplePair&>(W) = empty_pair(pb[Minus]->grading(), pb[Plus]->grading());
  W.labels[Minus] = pb[Minus]->labels();
  W.labels[Plus] = pb[Plus]->labels();
  W.gram = power_gram(kind, V.gram, *pb[Minus], *pb[Plus], true);
  for (int s = 0; s < 2; ++s) {
    const PowerBasis &bx = *pb[s], &by = *pb[1 - s];
    const Grading& gx = V.par[s];
    int NX = bx.size(), NY = by.size();
#pragma omp parallel for collapse(2) schedule(dynamic) if (parallel)
    for (int F = 0; F < NX; ++F)
      for (int Vi = 0; Vi < NY; ++Vi) {
        const auto &f = bx[F].e, &v = by[Vi].e;
        Matrix K = generator_coeffs(kind, pairing_block(V, s, f, v), bx[F].k, by[Vi].k);
        for (int G = 0; G < NX; ++G) {
          const auto& g = bx[G].e;
          Vec out(NX);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              if (K(i, j).is_zero()) continue;
              Parity pd = padd(gx[f[i]], V.par[1 - s][v[j]]);
              int pre = 1;
              for (int k = 0; k < n; ++k) {
                if (k > 0) pre *= sgn_eta(gx[g[k - 1]], pd);
                for (auto& [e, x] : V.prod[s].at(f[i], v[j], g[k])) {
                  auto w = g;
                  w[k] = e;
                  auto nz = normalize_pure(kind, w, gx);
                  if (!nz) continue;
                  out[bx.find(nz->e)] += signed_(K(i, j) * x, pre * nz->sign);
                }
              }
            }
          W.prod[s].set(F, Vi, G, out);
        }
      }
  }
  return W;
}

namespace {
Matrix leibniz(Kind kind, const Matrix& D, Parity pd, const Grading& g, const PowerBasis& pb) {
  Matrix m(pb.size(), pb.size());
  for (int col = 0; col < pb.size(); ++col) {
    const auto& I = pb[col].e;
    int s = 1;
    for (int t = 0; t < pb.n(); ++t) {
      if (t > 0) s *= sgn_eta(pd, g[I[t - 1]]);
      for (int w = 0; w < D.rows(); ++w) {
        if (D(w, I[t]).is_zero()) continue;
        auto e = I;
        e[t] = w;
        auto nz = normalize_pure(kind, e, g);
        if (nz) m(pb.find(nz->e), col) += signed_(D(w, I[t]), s * nz->sign);
      }
    }
  }
  return m;
}
}  // namespace

InnerDerivation power_generator(Kind kind, const MetricPair& V, int n, int F, int Vi) {
  SuperSpace Sm = as_superspace(V.par[Minus]), Sp = as_superspace(V.par[Plus]);
  const PowerBasis &bm = power_basis(kind, Sm.d0, Sm.d1, n), &bp = power_basis(kind, Sp.d0, Sp.d1, n);
  const auto &f = bm[F].e, &v = bp[Vi].e;
  Matrix K = generator_coeffs(kind, pairing_block(V, Minus, f, v), bm[F].k, bp[Vi].k);
  InnerDerivation D{Matrix(bm.size(), bm.size()), Matrix(bp.size(), bp.size()),
                    padd(bm.grading()[F], bp.grading()[Vi])};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (K(i, j).is_zero()) continue;
      InnerDerivation g = nu_basis(V, f[i], v[j]);
      D.minus += leibniz(kind, g.minus, g.parity, V.par[Minus], bm) * K(i, j);
      D.plus += leibniz(kind, g.plus, g.parity, V.par[Plus], bp) * K(i, j);
    }
  return D;
}

MetricPair oracle_power_pair(PowerKind kind, const MetricPair& V, int n) {
  PairedModule pm = module_from_pair(V);
  PairedModule pw;
  pw.alg = pm.alg;
  pw.b = pm.b;
  std::vector<std::string> lab[2];
  if (kind == PowerKind::Tensor) {
    guard(static_cast<long long>(std::pow(std::max(V.dim(Minus), V.dim(Plus)), n)));
    pw.plus = tensor_modules(TensorMode::Restricted, std::vector<SuperModule>(n, pm.plus));
    pw.minus = tensor_modules(TensorMode::Restricted, std::vector<SuperModule>(n, pm.minus));
    pw.gram = tensor_pairing(std::vector<Matrix>(n, V.gram), std::vector<Grading>(n, V.par[Minus]),
                             std::vector<Grading>(n, V.par[Plus]));
    for (int s = 0; s < 2; ++s)
      for (auto& t : tensor_tuples(std::vector<int>(n, V.dim(s)))) {
        std::string l;
        for (int k = 0; k < n; ++k) l += (k ? "@" : "") + V.labels[s][t[k]];
        lab[s].push_back(l);
      }
  } else {
    Kind k = kind == PowerKind::Alt ? Kind::Alt : Kind::Sym;
    SuperSpace Sm = as_superspace(V.par[Minus]), Sp = as_superspace(V.par[Plus]);
    guard(std::max(dim_power(k, Sm.d0, Sm.d1, n), dim_power(k, Sp.d0, Sp.d1, n)));
    pw.plus = power_module(k, pm.plus, n);
    pw.minus = power_module(k, pm.minus, n);
    const PowerBasis &bm = power_basis(k, Sm.d0, Sm.d1, n), &bp = power_basis(k, Sp.d0, Sp.d1, n);
    pw.gram = power_gram(k, V.gram, bm, bp, true);
    lab[Minus] = bm.labels();
    lab[Plus] = bp.labels();
  }
  Report dual = duality_violations(pw.plus, pw.minus, pw.gram);
  if (!dual.empty()) throw ConsistencyFailure("power module is not dual to its pairing");
  MetricPair W = faulkner(pw);
  W.labels[Minus] = lab[Minus];
  W.labels[Plus] = lab[Plus];
  return W;
}

PairMap scaling_map(const MetricPair& V, const Scalar& lambda) {
  return {Matrix::identity(V.dim(Minus)) * (Scalar(1) / lambda), Matrix::identity(V.dim(Plus)) * lambda};
}

namespace {
Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}
}  // namespace

Lift lift_automorphism(PowerKind kind, const MetricPair& V, const PairMap& phi, int n) {
  if (!is_automorphism(phi, V)) throw std::invalid_argument("lift_automorphism: not an automorphism");
  Lift out;
  MetricPair W;
  if (kind == PowerKind::Tensor) {
    Matrix m = phi.minus, p = phi.plus;
    for (int k = 1; k < n; ++k) {
      m = kron(m, phi.minus);
      p = kron(p, phi.plus);
    }
    out.map = {m, p};
    W = restricted_tensor_power(V, n);
  } else {
    Kind k = kind == PowerKind::Alt ? Kind::Alt : Kind::Sym;
    SuperSpace Sm = as_superspace(V.par[Minus]), Sp = as_superspace(V.par[Plus]);
    out.map = {matrix_power(k, {Sm, Sm, phi.minus}, n), matrix_power(k, {Sp, Sp, phi.plus}, n)};
    W = power_pair(k, V, n);
  }
  out.post = check_hom(out.map, W, W);
  auto mu = check_similarity(out.map, W, W);
  if (!mu || !mu->is_one()) out.post.push_back({"pairing", {}, "lift does not preserve the pairing"});
  return out;
}

}  // namespace sp
