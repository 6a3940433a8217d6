#include "superpow/jordan.hpp"

#include <algorithm>
#include <map>

namespace sp {

SparseVec sparsify(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec ProductTensor::dense(int a, int b, int c) const {
  Vec v(dx_);
  for (auto& [e, x] : at(a, b, c)) v[e] = x;
  return v;
}

Scalar MetricPair::pairing(int s, int x, int y) const {
  if (s == Minus) return gram(x, y);
  Scalar g = gram(y, x);
  return sgn_eta(par[Minus][y], par[Plus][x]) < 0 ? -g : g;
}

std::vector<std::string> default_labels(int d) {
  std::vector<std::string> l;
  for (int i = 0; i < d; ++i) l.push_back("b" + std::to_string(i + 1));
  return l;
}

TriplePair empty_pair(const Grading& minus, const Grading& plus) {
  TriplePair P;
  P.par[Minus] = minus;
  P.par[Plus] = plus;
  P.labels[Minus] = default_labels(static_cast<int>(minus.size()));
  P.labels[Plus] = default_labels(static_cast<int>(plus.size()));
  P.prod[Minus] = ProductTensor(P.dim(Minus), P.dim(Plus));
  P.prod[Plus] = ProductTensor(P.dim(Plus), P.dim(Minus));
  return P;
}

Vec triple(const TriplePair& P, int s, const Vec& x, const Vec& y, const Vec& z) {
  int dx = P.dim(s), dy = P.dim(1 - s);
  if (static_cast<int>(x.size()) != dx || static_cast<int>(y.size()) != dy ||
      static_cast<int>(z.size()) != dx)
    throw std::invalid_argument("triple: arguments on the wrong sides");
  Vec r(dx);
  for (int a = 0; a < dx; ++a) {
    if (x[a].is_zero()) continue;
    for (int b = 0; b < dy; ++b) {
      if (y[b].is_zero()) continue;
      Scalar xy = x[a] * y[b];
      for (int c = 0; c < dx; ++c) {
        if (z[c].is_zero()) continue;
        Scalar xyz = xy * z[c];
        for (auto& [e, v] : P.prod[s].at(a, b, c)) r[e] += xyz * v;
      }
    }
  }
  return r;
}

Matrix D_op(const TriplePair& P, int s, const Vec& x, const Vec& y) {
  int dx = P.dim(s);
  Matrix m(dx, dx);
  for (int c = 0; c < dx; ++c) {
    Vec z(dx);
    z[c] = 1;
    Vec col = triple(P, s, x, y, z);
    for (int e = 0; e < dx; ++e) m(e, c) = col[e];
  }
  return m;
}

namespace {

// Dense accumulator that remembers which slots it touched, so resetting is cheap.
class Scratch {
 public:
  explicit Scratch(int d) : v_(d), mark_(d, 0) {}
  void add(const Scalar& c, const SparseVec& x) {
    if (c.is_zero()) return;
    for (auto& [e, y] : x) {
      if (!mark_[e]) mark_[e] = 1, touched_.push_back(e);
      v_[e] += c * y;
    }
  }
  // True when every touched slot is zero; leaves the accumulator empty.
  bool drain_is_zero() {
    bool z = true;
    for (int e : touched_) {
      z = z && v_[e].is_zero();
      v_[e] = Scalar();
      mark_[e] = 0;
    }
    touched_.clear();
    return z;
  }

 private:
  Vec v_;
  std::vector<char> mark_;
  std::vector<int> touched_;
};

Scalar pair_vec(const Matrix& g, const SparseVec& f, int v) {
  Scalar s;
  for (auto& [e, x] : f)
    if (!g(e, v).is_zero()) s += x * g(e, v);
  return s;
}
Scalar pair_vec(const Matrix& g, int f, const SparseVec& v) {
  Scalar s;
  for (auto& [e, x] : v)
    if (!g(f, e).is_zero()) s += g(f, e) * x;
  return s;
}

Scalar signed_(Scalar x, int s) { return s < 0 ? -x : x; }

void parity_checks(const TriplePair& P, Report& rep) {
  for (int s = 0; s < 2; ++s) {
    int dx = P.dim(s), dy = P.dim(1 - s);
    for (int a = 0; a < dx; ++a)
      for (int b = 0; b < dy; ++b)
        for (int c = 0; c < dx; ++c)
          for (auto& [e, v] : P.prod[s].at(a, b, c)) {
            Parity want = padd(padd(P.par[s][a], P.par[1 - s][b]), P.par[s][c]);
            if (P.par[s][e] != want)
              rep.push_back({"parity", {s, a, b, c, e}, "product not parity-additive"});
          }
  }
}

// [D_{x,y}, D_{z,w}] = D_{D_{x,y}z, w} - eta_{x,y,z} D_{z, D^{-s}_{y,x} w}
Report gjsp_slice(const TriplePair& P, int s, int a) {
  Report rep;
  int dx = P.dim(s), dy = P.dim(1 - s);
  const Grading &px = P.par[s], &py = P.par[1 - s];
  Scratch acc(dx);
  for (int b = 0; b < dy; ++b)
    for (int c = 0; c < dx; ++c)
      for (int d = 0; d < dy; ++d) {
        int br = sgn_eta(padd(px[a], py[b]), padd(px[c], py[d]));
        int e3 = sgn_eta3(px[a], py[b], px[c]);
        const SparseVec& alpha = P.prod[s].at(a, b, c);
        const SparseVec& beta = P.prod[1 - s].at(b, a, d);
        for (int u = 0; u < dx; ++u) {
          // lhs - rhs, accumulated sparsely
          for (auto& [e, x] : P.prod[s].at(c, d, u)) acc.add(x, P.prod[s].at(a, b, e));
          for (auto& [e, x] : P.prod[s].at(a, b, u)) acc.add(br < 0 ? x : -x, P.prod[s].at(c, d, e));
          for (auto& [e, x] : alpha) acc.add(-x, P.prod[s].at(e, d, u));
          for (auto& [e, x] : beta) acc.add(e3 < 0 ? -x : x, P.prod[s].at(c, e, u));
          if (!acc.drain_is_zero()) {
            rep.push_back({"gjsp", {s, a, b, c, d, u},
                           "[D_xy,D_zw] != D_{D_xy z,w} - eta D_{z,D_yx w}"});
            break;
          }
        }
      }
  return rep;
}

}  // namespace

Report check_pair(const TriplePair& P, bool parallel) {
  Report rep;
  parity_checks(P, rep);
  for (int s = 0; s < 2; ++s) {
    int dx = P.dim(s);
    std::vector<Report> parts(dx);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int a = 0; a < dx; ++a) parts[a] = gjsp_slice(P, s, a);
    for (auto& p : parts) rep.insert(rep.end(), p.begin(), p.end());
  }
  return rep;
}

Report check_metric_pair(const MetricPair& P, bool parallel) {
  Report rep = check_pair(P, parallel);
  int dm = P.dim(Minus), dp = P.dim(Plus);
  const Grading &pm = P.par[Minus], &pp = P.par[Plus];
  if (P.gram.rows() != dm || P.gram.cols() != dp) {
    rep.push_back({"shape", {}, "pairing Gram has the wrong shape"});
    return rep;
  }
  for (int f = 0; f < dm; ++f)
    for (int v = 0; v < dp; ++v)
      if (!P.gram(f, v).is_zero() && pm[f] != pp[v])
        rep.push_back({"even", {f, v}, "pairing couples different parities"});
  if (dm != dp || rank(P.gram) != dm) rep.push_back({"nondegenerate", {}, "pairing is degenerate"});

  std::vector<Report> parts(dm);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int a = 0; a < dm; ++a) {
    Report& r = parts[a];
    for (int b = 0; b < dp; ++b)
      for (int c = 0; c < dm; ++c)
        for (int d = 0; d < dp; ++d) {
          Scalar l = pair_vec(P.gram, P.prod[Minus].at(a, b, c), d);
          // <D_{x,y}z, w> = eta_{x,y,z} <z, D_{y,x}w>
          Scalar r1 = signed_(pair_vec(P.gram, c, P.prod[Plus].at(b, a, d)),
                              sgn_eta3(pm[a], pp[b], pm[c]));
          if (l != r1) r.push_back({"superinvariant", {a, b, c, d}, "<D_xy z,w> != eta <z,D_yx w>"});
          int s = sgn_eta(padd(pm[a], pp[b]), padd(pm[c], pp[d]));
          Scalar r2 = signed_(pair_vec(P.gram, P.prod[Minus].at(c, d, a), b), s);
          if (l != r2) r.push_back({"supersymmetric", {a, b, c, d}, "<D_xy z,w> != eta <D_zw x,y>"});
          Scalar l3 = pair_vec(P.gram, a, P.prod[Plus].at(b, c, d));
          Scalar r3 = signed_(pair_vec(P.gram, c, P.prod[Plus].at(d, a, b)), s);
          if (l3 != r3) r.push_back({"supersymmetric", {a, b, c, d}, "<x,D_yz w> != eta <z,D_wx y>"});
        }
  }
  for (auto& p : parts) rep.insert(rep.end(), p.begin(), p.end());
  return rep;
}

bool same_products(const TriplePair& a, const TriplePair& b) {
  return a.par[0] == b.par[0] && a.par[1] == b.par[1] && a.prod[0] == b.prod[0] &&
         a.prod[1] == b.prod[1];
}

bool same_pair(const MetricPair& a, const MetricPair& b) {
  return same_products(a, b) && a.gram == b.gram;
}

InnerDerivation nu_basis(const TriplePair& P, int f, int v) {
  int dm = P.dim(Minus), dp = P.dim(Plus);
  InnerDerivation D{Matrix(dm, dm), Matrix(dp, dp), padd(P.par[Minus][f], P.par[Plus][v])};
  for (int u = 0; u < dm; ++u)
    for (auto& [e, x] : P.prod[Minus].at(f, v, u)) D.minus(e, u) = x;
  int s = -sgn_eta(P.par[Minus][f], P.par[Plus][v]);
  for (int u = 0; u < dp; ++u)
    for (auto& [e, x] : P.prod[Plus].at(v, f, u)) D.plus(e, u) = signed_(x, s);
  return D;
}

InnerDerivation nu(const TriplePair& P, const Vec& f, const Vec& v) {
  int dm = P.dim(Minus), dp = P.dim(Plus);
  InnerDerivation D{Matrix(dm, dm), Matrix(dp, dp), 0};
  int pf = -1, pv = -1;
  for (int a = 0; a < dm; ++a) {
    if (f[a].is_zero()) continue;
    if (pf >= 0 && pf != P.par[Minus][a]) throw std::invalid_argument("nu: f not homogeneous");
    pf = P.par[Minus][a];
  }
  for (int b = 0; b < dp; ++b) {
    if (v[b].is_zero()) continue;
    if (pv >= 0 && pv != P.par[Plus][b]) throw std::invalid_argument("nu: v not homogeneous");
    pv = P.par[Plus][b];
  }
  if (pf < 0 || pv < 0) return D;
  D.parity = padd(pf, pv);
  for (int a = 0; a < dm; ++a)
    for (int b = 0; b < dp; ++b) {
      Scalar c = f[a] * v[b];
      if (c.is_zero()) continue;
      InnerDerivation g = nu_basis(P, a, b);
      D.minus += g.minus * c;
      D.plus += g.plus * c;
    }
  return D;
}

Report check_derivation(const TriplePair& P, const InnerDerivation& D) {
  Report rep;
  for (int s = 0; s < 2; ++s) {
    const Matrix& Ds = s == Minus ? D.minus : D.plus;
    const Matrix& Do = s == Minus ? D.plus : D.minus;
    int dx = P.dim(s), dy = P.dim(1 - s);
    for (int a = 0; a < dx; ++a)
      for (int b = 0; b < dy; ++b)
        for (int c = 0; c < dx; ++c) {
          Vec x(dx), y(dy), z(dx);
          x[a] = 1;
          y[b] = 1;
          z[c] = 1;
          Vec lhs = Ds * P.prod[s].dense(a, b, c);
          Vec rhs = triple(P, s, Ds.col(a), y, z);
          axpy(rhs, Scalar(sgn_eta(D.parity, P.par[s][a])), triple(P, s, x, Do.col(b), z));
          Parity pxy = padd(P.par[s][a], P.par[1 - s][b]);
          axpy(rhs, Scalar(sgn_eta(D.parity, pxy)), triple(P, s, x, y, Ds.col(c)));
          if (lhs != rhs) rep.push_back({"derivation", {s, a, b, c}, "superderivation law fails"});
        }
  }
  return rep;
}

namespace {
Vec flatten(const InnerDerivation& D) {
  Vec v;
  for (int i = 0; i < D.minus.rows(); ++i)
    for (int j = 0; j < D.minus.cols(); ++j) v.push_back(D.minus(i, j));
  for (int i = 0; i < D.plus.rows(); ++i)
    for (int j = 0; j < D.plus.cols(); ++j) v.push_back(D.plus(i, j));
  return v;
}

Matrix columns(const std::vector<Vec>& cols, int len) {
  Matrix m(len, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < len; ++i) m(i, static_cast<int>(j)) = cols[j][i];
  return m;
}
}  // namespace

Instr instr_basis(const TriplePair& P) {
  int dm = P.dim(Minus), dp = P.dim(Plus);
  int len = dm * dm + dp * dp;
  std::vector<Vec> flat;
  std::vector<InnerDerivation> all;
  for (int f = 0; f < dm; ++f)
    for (int v = 0; v < dp; ++v) {
      all.push_back(nu_basis(P, f, v));
      flat.push_back(flatten(all.back()));
    }
  Instr I;
  Matrix span = columns(flat, len);
  auto sel = independent_columns(span);
  std::vector<Vec> basis_flat;
  for (int j : sel) {
    I.basis.push_back(all[j]);
    I.generators.push_back({j / dp, j % dp});
    basis_flat.push_back(flat[j]);
  }
  Matrix S = columns(basis_flat, len);
  I.coeffs = Matrix(static_cast<int>(all.size()), static_cast<int>(sel.size()));
  for (size_t k = 0; k < all.size(); ++k) {
    auto c = solve(S, flat[k]);
    if (!c) throw std::logic_error("instr_basis: spanning element outside its own span");
    for (size_t i = 0; i < sel.size(); ++i) I.coeffs(static_cast<int>(k), static_cast<int>(i)) = (*c)[i];
  }
  return I;
}

MetricPair tensor_shift(const MetricPair& P, const ShiftParam& al) {
  MetricPair Q;
  static_cast<TriplePair&>(Q) = empty_pair(P.par[Minus], P.par[Plus]);
  Q.labels[Minus] = P.labels[Minus];
  Q.labels[Plus] = P.labels[Plus];
  int ea = sgn_eta(al.a, al.a);
  for (int s = 0; s < 2; ++s)
    for (auto& p : Q.par[s]) p = padd(p, al.a);
  int dm = P.dim(Minus), dp = P.dim(Plus);
  Q.gram = Matrix(dm, dp);
  for (int f = 0; f < dm; ++f)
    for (int v = 0; v < dp; ++v)
      Q.gram(f, v) = signed_(P.gram(f, v), ea * sgn_eta(al.a, P.par[Minus][f]));
  for (int s = 0; s < 2; ++s) {
    int dx = P.dim(s), dy = P.dim(1 - s);
    for (int a = 0; a < dx; ++a)
      for (int b = 0; b < dy; ++b)
        for (int c = 0; c < dx; ++c) {
          Vec v = P.prod[s].dense(a, b, c);
          v[c] += al.lambda * P.pairing(s, a, b);
          int sg = sgn_eta(al.a, P.par[1 - s][b]) * (s == Minus ? ea : 1);
          if (sg < 0)
            for (auto& x : v) x = -x;
          Q.prod[s].set(a, b, c, v);
        }
  }
  return Q;
}

MetricPair faulkner(const PairedModule& m, bool parallel) {
  const LieSuperAlgebra& L = m.alg;
  int r = L.dim(), dm = m.minus.dim(), dp = m.plus.dim();
  if (m.gram.rows() != dm || m.gram.cols() != dp) throw std::invalid_argument("faulkner: Gram shape");
  Matrix binv = r ? inverse(m.b) : Matrix();
  std::vector<Matrix> R;  // R[k](f,v) = <x_k . f, v>
  for (int k = 0; k < r; ++k) R.push_back(m.minus.rho[k].transpose() * m.gram);
  MetricPair P;
  static_cast<TriplePair&>(P) = empty_pair(m.minus.par, m.plus.par);
  P.gram = m.gram;
  std::vector<std::vector<SparseVec>> outm(dm * dp), outp(dm * dp);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int fv = 0; fv < dm * dp; ++fv) {
    int f = fv / dp, v = fv % dp;
    Vec rhs(r);
    for (int k = 0; k < r; ++k) rhs[k] = R[k](f, v);
    Vec c = r ? binv * rhs : Vec();
    int s = -sgn_eta(m.minus.par[f], m.plus.par[v]);
    for (int g = 0; g < dm; ++g) {
      Vec out(dm);
      for (int i = 0; i < r; ++i)
        if (!c[i].is_zero()) axpy(out, c[i], m.minus.rho[i].col(g));
      outm[fv].push_back(sparsify(out));
    }
    for (int w = 0; w < dp; ++w) {
      Vec out(dp);
      for (int i = 0; i < r; ++i)
        if (!c[i].is_zero()) axpy(out, signed_(c[i], s), m.plus.rho[i].col(w));
      outp[fv].push_back(sparsify(out));
    }
  }
  for (int f = 0; f < dm; ++f)
    for (int v = 0; v < dp; ++v) {
      for (int g = 0; g < dm; ++g) P.prod[Minus].set(f, v, g, outm[f * dp + v][g]);
      for (int w = 0; w < dp; ++w) P.prod[Plus].set(v, f, w, outp[f * dp + v][w]);
    }
  return P;
}

MetricPair faulkner_from_module(const MetricLieSupermodule& m) {
  PairedModule pm{m.mod.alg, m.b, m.mod, dual_module(m.mod), Matrix::identity(m.mod.dim())};
  return faulkner(pm);
}

PairedModule module_from_pair(const MetricPair& P) {
  int dm = P.dim(Minus), dp = P.dim(Plus);
  Instr I = instr_basis(P);
  int r = static_cast<int>(I.basis.size());
  int N = dm * dp;

  // b on the spanning set, then well-definedness on linear dependencies
  Matrix bspan(N, N);
  for (int g = 0; g < dm; ++g)
    for (int w = 0; w < dp; ++w)
      for (int f = 0; f < dm; ++f) {
        const SparseVec& gwf = P.prod[Minus].at(g, w, f);
        for (int v = 0; v < dp; ++v) {
          Scalar s;
          for (auto& [e, x] : gwf) s += x * P.gram(e, v);
          bspan(g * dp + w, f * dp + v) = s;
        }
      }
  std::vector<int> sel;
  for (auto& [f, v] : I.generators) sel.push_back(f * dp + v);
  Matrix B = bspan.sub(sel, sel);
  if (I.coeffs * B * I.coeffs.transpose() != bspan)
    throw ConsistencyFailure("b is not well defined on the linear dependencies of instr");

  PairedModule m;
  Grading g;
  for (auto& D : I.basis) g.push_back(D.parity);
  m.alg = LieSuperAlgebra(g);
  std::vector<Vec> flat;
  for (auto& D : I.basis) {
    Vec v;
    for (int i = 0; i < dm; ++i)
      for (int j = 0; j < dm; ++j) v.push_back(D.minus(i, j));
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j) v.push_back(D.plus(i, j));
    flat.push_back(v);
  }
  int len = dm * dm + dp * dp;
  Matrix S(len, r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < len; ++i) S(i, j) = flat[j][i];
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const InnerDerivation &X = I.basis[i], &Y = I.basis[j];
      Scalar e(sgn_eta(X.parity, Y.parity));
      Matrix bm = X.minus * Y.minus - (Y.minus * X.minus) * e;
      Matrix bp = X.plus * Y.plus - (Y.plus * X.plus) * e;
      Vec v;
      for (int a = 0; a < dm; ++a)
        for (int b = 0; b < dm; ++b) v.push_back(bm(a, b));
      for (int a = 0; a < dp; ++a)
        for (int b = 0; b < dp; ++b) v.push_back(bp(a, b));
      auto c = solve(S, v);
      if (!c) throw ConsistencyFailure("instr is not closed under the bracket");
      for (int k = 0; k < r; ++k) m.alg.at(i, j, k) = (*c)[k];
    }
  m.b = B;
  m.gram = P.gram;
  m.plus = {m.alg, P.par[Plus], {}};
  m.minus = {m.alg, P.par[Minus], {}};
  for (auto& D : I.basis) {
    m.plus.rho.push_back(D.plus);
    m.minus.rho.push_back(D.minus);
  }
  auto fail = [](const char* what, const Report& rep) {
    if (!rep.empty())
      throw ConsistencyFailure(std::string(what) + ": " + rep[0].axiom + " (" + rep[0].detail + ")");
  };
  fail("instr", check_lie(m.alg));
  fail("b", check_metric(m.alg, m.b));
  fail("V+ action", check_module(m.plus));
  fail("V- action", check_module(m.minus));
  fail("pairing", duality_violations(m.plus, m.minus, m.gram));
  return m;
}

}  // namespace sp
