#include "superpow/liesuper.hpp"

#include <stdexcept>

namespace sp {

Vec LieSuperAlgebra::bracket(const Vec& x, const Vec& y) const {
  int d = dim();
  Vec r(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < d; ++k)
        if (!at(i, j, k).is_zero()) r[k] += xy * at(i, j, k);
    }
  }
  return r;
}

namespace {
Vec unit(int d, int i) {
  Vec v(d);
  v[i] = 1;
  return v;
}
Vec scaled(Vec v, int s) {
  if (s < 0)
    for (auto& x : v) x = -x;
  return v;
}
Vec add(Vec a, const Vec& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
Scalar form(const Matrix& b, const Vec& x, const Vec& y) {
  Scalar s;
  for (int i = 0; i < b.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < b.cols(); ++j)
      if (!y[j].is_zero() && !b(i, j).is_zero()) s += x[i] * b(i, j) * y[j];
  }
  return s;
}
}  // namespace

Report check_lie(const LieSuperAlgebra& L) {
  Report rep;
  int d = L.dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        if (!L.at(i, j, k).is_zero() && L.par[k] != padd(L.par[i], L.par[j]))
          rep.push_back({"parity", {i, j, k}, "bracket not parity-additive"});
        Scalar rhs = L.at(j, i, k) * Scalar(-sgn_eta(L.par[i], L.par[j]));
        if (L.at(i, j, k) != rhs)
          rep.push_back({"anticommutativity", {i, j, k}, "[x,y] != -eta [y,x]"});
      }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        Vec xi = unit(d, i), xj = unit(d, j), xl = unit(d, l);
        Vec lhs = L.bracket(xi, L.bracket(xj, xl));
        Vec rhs = add(L.bracket(L.bracket(xi, xj), xl),
                      scaled(L.bracket(xj, L.bracket(xi, xl)), sgn_eta(L.par[i], L.par[j])));
        if (lhs != rhs) rep.push_back({"jacobi", {i, j, l}, "super-Jacobi fails"});
      }
  return rep;
}

Report check_module(const SuperModule& M) {
  Report rep;
  const LieSuperAlgebra& L = M.alg;
  int d = L.dim(), m = M.dim();
  if (static_cast<int>(M.rho.size()) != d) {
    rep.push_back({"shape", {}, "action count != algebra dimension"});
    return rep;
  }
  for (int x = 0; x < d; ++x)
    for (int w = 0; w < m; ++w)
      for (int v = 0; v < m; ++v)
        if (!M.rho[x](w, v).is_zero() && M.par[w] != padd(L.par[x], M.par[v]))
          rep.push_back({"parity", {x, v, w}, "action not parity-additive"});
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Matrix br(m, m);
      for (int k = 0; k < d; ++k)
        if (!L.at(x, y, k).is_zero()) br += M.rho[k] * L.at(x, y, k);
      Matrix rhs = M.rho[x] * M.rho[y] - (M.rho[y] * M.rho[x]) * Scalar(sgn_eta(L.par[x], L.par[y]));
      if (br != rhs) {
        for (int v = 0; v < m; ++v)
          if (br.col(v) != rhs.col(v)) {
            rep.push_back({"module", {x, y, v}, "[x,y].v != x.(y.v) - eta y.(x.v)"});
            break;
          }
      }
    }
  return rep;
}

Report check_metric(const LieSuperAlgebra& L, const Matrix& b) {
  Report rep;
  int d = L.dim();
  if (b.rows() != d || b.cols() != d) {
    rep.push_back({"shape", {}, "form size != algebra dimension"});
    return rep;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (!b(i, j).is_zero() && L.par[i] != L.par[j])
        rep.push_back({"even", {i, j}, "form couples different parities"});
      if (b(i, j) != b(j, i) * Scalar(sgn_eta(L.par[i], L.par[j])))
        rep.push_back({"supersymmetric", {i, j}, "b(x,y) != eta b(y,x)"});
    }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Vec xi = unit(d, i), xj = unit(d, j), xk = unit(d, k);
        if (form(b, L.bracket(xi, xj), xk) != form(b, xi, L.bracket(xj, xk)))
          rep.push_back({"invariant", {i, j, k}, "b([x,y],z) != b(x,[y,z])"});
      }
  if (rank(b) != d) rep.push_back({"nondegenerate", {}, "form is degenerate"});
  return rep;
}

LieSuperAlgebra gl_super(int m, int n, std::vector<Matrix>* basis_out) {
  int N = m + n;
  auto p = [m](int a) { return a < m ? 0 : 1; };
  std::vector<std::pair<int, int>> idx;
  for (int par = 0; par < 2; ++par)
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        if (padd(p(a), p(b)) == par) idx.push_back({a, b});
  int d = static_cast<int>(idx.size());
  Grading g(d);
  std::vector<Matrix> basis;
  for (int i = 0; i < d; ++i) {
    g[i] = padd(p(idx[i].first), p(idx[i].second));
    Matrix e(N, N);
    e(idx[i].first, idx[i].second) = 1;
    basis.push_back(e);
  }
  LieSuperAlgebra L(g);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix br = basis[i] * basis[j] - (basis[j] * basis[i]) * Scalar(sgn_eta(g[i], g[j]));
      for (int k = 0; k < d; ++k) L.at(i, j, k) = br(idx[k].first, idx[k].second);
    }
  if (basis_out) *basis_out = basis;
  return L;
}

SuperModule natural_module(int m, int n) {
  std::vector<Matrix> basis;
  SuperModule M;
  M.alg = gl_super(m, n, &basis);
  M.par = SuperSpace{m, n}.grading();
  M.rho = basis;
  return M;
}

Matrix supertrace_form(int m, int n) {
  std::vector<Matrix> basis;
  LieSuperAlgebra L = gl_super(m, n, &basis);
  int d = L.dim();
  Matrix b(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix xy = basis[i] * basis[j];
      Scalar s;
      for (int a = 0; a < m + n; ++a) s += a < m ? xy(a, a) : -xy(a, a);
      b(i, j) = s;
    }
  return b;
}

SuperModule dual_module(const SuperModule& M) {
  SuperModule D{M.alg, M.par, {}};
  int m = M.dim();
  for (int x = 0; x < M.alg.dim(); ++x) {
    Matrix r(m, m);
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k)
        if (!M.rho[x](i, k).is_zero())
          r(k, i) = M.rho[x](i, k) * Scalar(-sgn_eta(M.alg.par[x], M.par[i]));
    D.rho.push_back(r);
  }
  return D;
}

LieSuperAlgebra direct_sum(const std::vector<LieSuperAlgebra>& algs) {
  Grading g;
  for (auto& a : algs) g.insert(g.end(), a.par.begin(), a.par.end());
  LieSuperAlgebra L(g);
  int off = 0;
  for (auto& a : algs) {
    for (int i = 0; i < a.dim(); ++i)
      for (int j = 0; j < a.dim(); ++j)
        for (int k = 0; k < a.dim(); ++k) L.at(off + i, off + j, off + k) = a.at(i, j, k);
    off += a.dim();
  }
  return L;
}

MetricLieSupermodule direct_sum(const std::vector<MetricLieSupermodule>& ms) {
  std::vector<LieSuperAlgebra> algs;
  Grading mg;
  int dl = 0, dm = 0;
  for (auto& m : ms) {
    algs.push_back(m.mod.alg);
    mg.insert(mg.end(), m.mod.par.begin(), m.mod.par.end());
    dl += m.mod.alg.dim();
    dm += m.mod.dim();
  }
  MetricLieSupermodule out{{direct_sum(algs), mg, {}}, Matrix(dl, dl)};
  int ol = 0, om = 0;
  for (auto& m : ms) {
    for (int x = 0; x < m.mod.alg.dim(); ++x) {
      Matrix r(dm, dm);
      for (int i = 0; i < m.mod.dim(); ++i)
        for (int j = 0; j < m.mod.dim(); ++j) r(om + i, om + j) = m.mod.rho[x](i, j);
      out.mod.rho.push_back(r);
      for (int y = 0; y < m.mod.alg.dim(); ++y) out.b(ol + x, ol + y) = m.b(x, y);
    }
    ol += m.mod.alg.dim();
    om += m.mod.dim();
  }
  return out;
}

std::vector<std::vector<int>> tensor_tuples(const std::vector<int>& dims) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(dims.size(), 0);
  for (int d : dims)
    if (d == 0) return out;
  while (true) {
    out.push_back(cur);
    int t = static_cast<int>(dims.size()) - 1;
    while (t >= 0 && ++cur[t] == dims[t]) cur[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

namespace {
int tuple_index(const std::vector<int>& e, const std::vector<int>& dims) {
  int r = 0;
  for (size_t t = 0; t < dims.size(); ++t) r = r * dims[t] + e[t];
  return r;
}

bool same_algebra(const LieSuperAlgebra& a, const LieSuperAlgebra& b) {
  return a.par == b.par && a.c == b.c;
}

// x acting on factor `slot` through rho with the Koszul prefix
void act_on_slot(const Matrix& rho, Parity px, int slot, const std::vector<std::vector<int>>& tuples,
                 const std::vector<int>& dims, const std::vector<Grading>& pars, Matrix& out) {
  for (size_t col = 0; col < tuples.size(); ++col) {
    const auto& v = tuples[col];
    int s = 1;
    for (int k = 0; k < slot; ++k) s *= sgn_eta(px, pars[k][v[k]]);
    for (int w = 0; w < rho.rows(); ++w) {
      const Scalar& c = rho(w, v[slot]);
      if (c.is_zero()) continue;
      auto u = v;
      u[slot] = w;
      out(tuple_index(u, dims), static_cast<int>(col)) += s < 0 ? -c : c;
    }
  }
}
}  // namespace

SuperModule tensor_modules(TensorMode mode, const std::vector<SuperModule>& ms) {
  if (ms.empty()) throw std::invalid_argument("tensor_modules: no factors");
  std::vector<int> dims;
  std::vector<Grading> pars;
  for (auto& m : ms) {
    dims.push_back(m.dim());
    pars.push_back(m.par);
  }
  auto tuples = tensor_tuples(dims);
  int N = static_cast<int>(tuples.size());
  SuperModule out;
  for (auto& t : tuples) {
    Parity p = 0;
    for (size_t k = 0; k < t.size(); ++k) p = padd(p, pars[k][t[k]]);
    out.par.push_back(p);
  }
  int n = static_cast<int>(ms.size());
  if (mode == TensorMode::Restricted) {
    for (auto& m : ms)
      if (!same_algebra(m.alg, ms[0].alg))
        throw std::invalid_argument("restricted tensor product over different algebras");
    out.alg = ms[0].alg;
    for (int x = 0; x < out.alg.dim(); ++x) {
      Matrix r(N, N);
      for (int i = 0; i < n; ++i) act_on_slot(ms[i].rho[x], out.alg.par[x], i, tuples, dims, pars, r);
      out.rho.push_back(r);
    }
  } else {
    std::vector<LieSuperAlgebra> algs;
    for (auto& m : ms) algs.push_back(m.alg);
    out.alg = direct_sum(algs);
    for (int i = 0; i < n; ++i)
      for (int x = 0; x < ms[i].alg.dim(); ++x) {
        Matrix r(N, N);
        act_on_slot(ms[i].rho[x], ms[i].alg.par[x], i, tuples, dims, pars, r);
        out.rho.push_back(r);
      }
  }
  return out;
}

Matrix tensor_pairing(const std::vector<Matrix>& grams, const std::vector<Grading>& fpar,
                      const std::vector<Grading>& vpar) {
  size_t n = grams.size();
  if (fpar.size() != n || vpar.size() != n) throw std::invalid_argument("tensor_pairing: factor counts");
  std::vector<int> fd, vd;
  for (size_t i = 0; i < n; ++i) {
    fd.push_back(grams[i].rows());
    vd.push_back(grams[i].cols());
  }
  auto ft = tensor_tuples(fd), vt = tensor_tuples(vd);
  Matrix m(static_cast<int>(ft.size()), static_cast<int>(vt.size()));
  for (size_t a = 0; a < ft.size(); ++a)
    for (size_t b = 0; b < vt.size(); ++b) {
      Scalar v(1);
      for (size_t i = 0; i < n && !v.is_zero(); ++i) v *= grams[i](ft[a][i], vt[b][i]);
      if (v.is_zero()) continue;
      int s = 1;
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j) s *= sgn_eta(fpar[i][ft[a][i]], vpar[j][vt[b][j]]);
      m(a, b) = s < 0 ? -v : v;
    }
  return m;
}

SuperModule power_module(Kind kind, const SuperModule& M, int n) {
  SuperSpace S = as_superspace(M.par);
  const PowerBasis& pb = power_basis(kind, S.d0, S.d1, n);
  SuperModule out{M.alg, pb.grading(), {}};
  int N = pb.size();
  for (int x = 0; x < M.alg.dim(); ++x) {
    Parity px = M.alg.par[x];
    Matrix r(N, N);
    for (int col = 0; col < N; ++col) {
      const auto& I = pb[col].e;
      int s = 1;
      for (int t = 0; t < n; ++t) {
        if (t > 0) s *= sgn_eta(px, M.par[I[t - 1]]);
        for (int w = 0; w < M.dim(); ++w) {
          const Scalar& c = M.rho[x](w, I[t]);
          if (c.is_zero()) continue;
          auto e = I;
          e[t] = w;
          auto nz = normalize_pure(kind, e, M.par);
          if (!nz) continue;
          int row = pb.find(nz->e);
          r(row, col) += (s * nz->sign) < 0 ? -c : c;
        }
      }
    }
    out.rho.push_back(r);
  }
  return out;
}

Matrix power_pairing(Kind kind, const SuperModule& M, int n) {
  SuperSpace S = as_superspace(M.par);
  const PowerBasis& pb = power_basis(kind, S.d0, S.d1, n);
  return power_gram(kind, Matrix::identity(S.dim()), pb, pb, true);
}

Report duality_violations(const SuperModule& M, const SuperModule& Md, const Matrix& gram) {
  Report rep;
  for (int x = 0; x < M.alg.dim(); ++x) {
    Matrix lhs = Md.rho[x].transpose() * gram;  // <x.F_a, V_b>
    Matrix rhs = gram * M.rho[x];               // <F_a, x.V_b>
    for (int a = 0; a < lhs.rows(); ++a)
      for (int b = 0; b < lhs.cols(); ++b) {
        Scalar r = rhs(a, b);
        if (sgn_eta(M.alg.par[x], Md.par[a]) > 0) r = -r;
        if (lhs(a, b) != r) rep.push_back({"duality", {x, a, b}, "<x.F,V> != -eta <F,x.V>"});
      }
  }
  return rep;
}

bool is_faithful(const SuperModule& M) {
  int m = M.dim();
  Matrix flat(m * m, M.alg.dim());
  for (int x = 0; x < M.alg.dim(); ++x)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) flat(i * m + j, x) = M.rho[x](i, j);
  return rank(flat) == M.alg.dim();
}

}  // namespace sp
