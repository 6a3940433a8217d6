#include "superpow/superpowers.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace sp {

const char* kind_name(Kind k) { return k == Kind::Alt ? "alt" : "sym"; }

std::string tuple_label(const std::vector<int>& e) {
  std::string s = "(";
  for (size_t t = 0; t < e.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(e[t] + 1);
  }
  return s + ")";
}

namespace {

void check_request(Kind kind, int d0, int d1, int n, bool allow_empty = false) {
  if (d0 < 0 || d1 < 0) throw std::invalid_argument("negative dimension");
  if (n < 1) throw std::invalid_argument("power degree must be >= 1");
  if (allow_empty) return;
  if (kind == Kind::Alt && d1 == 0 && n > d0) throw std::invalid_argument("empty alternating power");
  if (kind == Kind::Sym && d0 == 0 && n > d1) throw std::invalid_argument("empty symmetric power");
  if (d0 + d1 == 0) throw std::invalid_argument("power of the zero space");
}

// strictly increasing (strict) or non-decreasing k-subsequences of [lo,hi)
void choose(int lo, int hi, int k, bool strict, std::vector<int>& cur,
            std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  int start = cur.empty() || cur.back() < lo ? lo : cur.back() + (strict ? 1 : 0);
  for (int i = start; i < hi; ++i) {
    cur.push_back(i);
    choose(lo, hi, k - 1, strict, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> runs(int lo, int hi, int k, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  choose(lo, hi, k, strict, cur, out);
  return out;
}

unsigned long long binom(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  unsigned long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}
unsigned long long multichoose(long long a, long long m) { return m == 0 ? 1 : binom(a + m - 1, m); }

unsigned long long factorial(int m) {
  unsigned long long r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// product of multiplicity factorials of a sorted run
unsigned long long mult_factorials(const std::vector<int>& e) {
  unsigned long long r = 1;
  for (size_t s = 0; s < e.size();) {
    size_t t = s;
    while (t < e.size() && e[t] == e[s]) ++t;
    r *= factorial(static_cast<int>(t - s));
    s = t;
  }
  return r;
}

}  // namespace

std::vector<IndexTuple> enum_indices(Kind kind, int d0, int d1, int n) {
  check_request(kind, d0, d1, n);
  std::vector<IndexTuple> out;
  bool even_strict = kind == Kind::Alt;
  for (int k = n; k >= 0; --k) {
    auto ev = runs(0, d0, k, even_strict);
    auto od = runs(d0, d0 + d1, n - k, !even_strict);
    for (auto& a : ev)
      for (auto& b : od) {
        IndexTuple t{kind, a, k};
        t.e.insert(t.e.end(), b.begin(), b.end());
        out.push_back(std::move(t));
      }
  }
  return out;
}

long long dim_power(Kind kind, int d0, int d1, int n) {
  check_request(kind, d0, d1, n, true);
  unsigned long long s = 0;
  for (int k = 0; k <= n; ++k) {
    if (kind == Kind::Alt)
      s += binom(d0, k) * multichoose(d1, n - k);
    else
      s += binom(d1, k) * multichoose(d0, n - k);
  }
  return static_cast<long long>(s);
}

PowerBasis::PowerBasis(Kind kind, int d0, int d1, int n)
    : kind_(kind), d0_(d0), d1_(d1), n_(n), tuples_(enum_indices(kind, d0, d1, n)) {
  for (int i = 0; i < size(); ++i) {
    grading_.push_back((n - tuples_[i].k) & 1);
    index_.emplace(tuples_[i].e, i);
  }
}

int PowerBasis::find(const std::vector<int>& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> PowerBasis::labels() const {
  std::vector<std::string> out;
  for (auto& t : tuples_) out.push_back(tuple_label(t.e));
  return out;
}

const PowerBasis& power_basis(Kind kind, int d0, int d1, int n) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<PowerBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_tuple(static_cast<int>(kind), d0, d1, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<PowerBasis>(kind, d0, d1, n)).first;
  return *it->second;
}

namespace {
// sign picked up when sorting e into ascending order by adjacent swaps
int reorder_sign(Kind kind, std::vector<int>& e, const Grading& g) {
  int s = 1;
  for (size_t i = 1; i < e.size(); ++i)
    for (size_t j = i; j > 0 && e[j - 1] > e[j]; --j) {
      int eta = sgn_eta(g[e[j - 1]], g[e[j]]);
      s *= kind == Kind::Alt ? -eta : eta;
      std::swap(e[j - 1], e[j]);
    }
  return s;
}
}  // namespace

std::vector<Rearrangement> transversal(const IndexTuple& I, int d0) {
  int top = I.e.empty() ? 0 : *std::max_element(I.e.begin(), I.e.end()) + 1;
  Grading g(std::max(top, d0), 0);
  for (int i = d0; i < static_cast<int>(g.size()); ++i) g[i] = 1;
  std::vector<Rearrangement> out;
  std::vector<int> r = I.e;
  std::sort(r.begin(), r.end());
  do {
    std::vector<int> tmp = r;
    out.push_back({r, reorder_sign(I.kind, tmp, g)});
  } while (std::next_permutation(r.begin(), r.end()));
  return out;
}

Scalar superminor(Kind kind, const SuperMatrix& a, const IndexTuple& I, const IndexTuple& J) {
  if (I.e.size() != J.e.size()) throw std::invalid_argument("superminor: |I| != |J|");
  for (int i : I.e)
    if (i < 0 || i >= a.rows.dim()) throw std::out_of_range("superminor: row index");
  for (int j : J.e)
    if (j < 0 || j >= a.cols.dim()) throw std::out_of_range("superminor: column index");
  if (I.k != J.k) return Scalar(0);
  int k = I.k;
  std::vector<int> ie(I.e.begin(), I.e.begin() + k), io(I.e.begin() + k, I.e.end());
  std::vector<int> je(J.e.begin(), J.e.begin() + k), jo(J.e.begin() + k, J.e.end());
  Matrix ev = a.a.sub(ie, je), od = a.a.sub(io, jo);
  if (kind == Kind::Alt) {
    Scalar d = determinant(ev);
    if (d.is_zero()) return d;
    return d * permanent(od) / Scalar(static_cast<long>(mult_factorials(io)));
  }
  Scalar d = determinant(od);
  if (d.is_zero()) return d;
  return d * permanent(ev) / Scalar(static_cast<long>(mult_factorials(ie)));
}

Matrix matrix_power(Kind kind, const SuperMatrix& a, int n) {
  if (!a.is_even()) throw std::invalid_argument("matrix_power needs an even supermatrix");
  const PowerBasis& rb = power_basis(kind, a.rows.d0, a.rows.d1, n);
  const PowerBasis& cb = power_basis(kind, a.cols.d0, a.cols.d1, n);
  Matrix m(rb.size(), cb.size());
  for (int r = 0; r < rb.size(); ++r)
    for (int c = 0; c < cb.size(); ++c)
      if (rb[r].k == cb[c].k) m(r, c) = superminor(kind, a, rb[r], cb[c]);
  return m;
}

std::optional<Normalized> normalize_pure(Kind kind, std::vector<int> e, const Grading& g) {
  int s = reorder_sign(kind, e, g);
  Parity killed = kind == Kind::Alt ? 0 : 1;
  for (size_t t = 1; t < e.size(); ++t)
    if (e[t] == e[t - 1] && g[e[t]] == killed) return std::nullopt;
  return Normalized{s, std::move(e)};
}

PowerVector expand_pure(Kind kind, const std::vector<SuperVector>& vs) {
  if (vs.empty()) throw std::invalid_argument("expand_pure: no factors");
  SuperSpace sp = vs[0].space;
  int n = static_cast<int>(vs.size());
  const PowerBasis& pb = power_basis(kind, sp.d0, sp.d1, n);
  Grading g = sp.grading();
  PowerVector out{kind, sp, n, Vec(pb.size())};
  std::vector<int> idx(n, 0);
  // odometer over the supports
  std::vector<std::vector<int>> supp(n);
  for (int t = 0; t < n; ++t) {
    if (!(vs[t].space == sp)) throw std::invalid_argument("expand_pure: mixed spaces");
    for (int i = 0; i < sp.dim(); ++i)
      if (!vs[t].coords[i].is_zero()) supp[t].push_back(i);
    if (supp[t].empty()) return out;
  }
  std::vector<int> pos(n, 0);
  while (true) {
    std::vector<int> e(n);
    Scalar c(1);
    for (int t = 0; t < n; ++t) {
      e[t] = supp[t][pos[t]];
      c *= vs[t].coords[e[t]];
    }
    if (auto nz = normalize_pure(kind, e, g)) {
      int at = pb.find(nz->e);
      out.coords[at] += nz->sign < 0 ? -c : c;
    }
    int t = n - 1;
    while (t >= 0 && ++pos[t] == static_cast<int>(supp[t].size())) pos[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

Matrix power_gram(Kind kind, const Matrix& g, const PowerBasis& fb, const PowerBasis& vb,
                  bool weighted) {
  if (fb.n() != vb.n()) throw std::invalid_argument("power_gram: mismatched degrees");
  Matrix m(fb.size(), vb.size());
  for (int a = 0; a < fb.size(); ++a)
    for (int b = 0; b < vb.size(); ++b) {
      const IndexTuple &I = fb[a], &J = vb[b];
      if (I.k != J.k) continue;
      Matrix B = g.sub(I.e, J.e);
      Scalar v = kind == Kind::Alt ? detper(I.k, B) : perdet(I.k, B);
      if (weighted) v *= omega(fb.n() - I.k);
      m(a, b) = v;
    }
  return m;
}

Scalar pairing_F(const PowerVector& f, const PowerVector& v) {
  if (f.n != v.n || f.kind != v.kind) throw std::invalid_argument("pairing_F: mismatched degrees");
  if (!(f.base == v.base)) throw std::invalid_argument("pairing_F: spaces are not dual");
  const PowerBasis& pb = v.basis();
  Matrix G = power_gram(f.kind, Matrix::identity(v.base.dim()), pb, pb, false);
  Scalar s;
  for (int a = 0; a < pb.size(); ++a) {
    if (f.coords[a].is_zero()) continue;
    for (int b = 0; b < pb.size(); ++b)
      if (!G(a, b).is_zero() && !v.coords[b].is_zero()) s += f.coords[a] * G(a, b) * v.coords[b];
  }
  return s;
}

KernelVerdict kernel_check(Kind kind, const SuperMatrix& a, int n) {
  if (!(a.rows == a.cols) || !a.is_even())
    throw std::invalid_argument("kernel_check needs a square even supermatrix");
  Matrix p = matrix_power(kind, a, n);
  if (p != Matrix::identity(p.rows())) return {KernelVerdict::NotKernel, Scalar()};
  bool exceptional = kind == Kind::Alt ? (a.rows.d1 == 0 && a.rows.d0 == n)
                                       : (a.rows.d0 == 0 && a.rows.d1 == n);
  if (exceptional) {
    if (determinant(a.a).is_one()) return {KernelVerdict::SlCase, Scalar()};
    return {KernelVerdict::LawViolated, Scalar()};
  }
  int d = a.rows.dim();
  Scalar r = a.a(0, 0);
  if (a.a != Matrix::identity(d) * r || !pow(r, n).is_one())
    return {KernelVerdict::LawViolated, Scalar()};
  return {KernelVerdict::ScalarRoot, r};
}

}  // namespace sp
