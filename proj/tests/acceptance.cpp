// One PASS/FAIL line per acceptance criterion.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <functional>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"

using namespace sp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<std::vector<int>> words(int d, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(n, 0);
  std::function<void(int)> rec = [&](int t) {
    if (t == n) return out.push_back(w);
    for (int i = 0; i < d; ++i) w[t] = i, rec(t + 1);
  };
  rec(0);
  return out;
}

bool canonical(Kind kind, const std::vector<int>& w, int d0) {
  for (size_t t = 1; t < w.size(); ++t) {
    if (w[t - 1] > w[t]) return false;
    if (w[t - 1] == w[t] && (kind == Kind::Alt) == (w[t] < d0)) return false;
  }
  return true;
}

const char* kn(Kind k) { return kind_name(k); }

Outcome dimensions() {
  Outcome o;
  int cases = 0;
  for (auto kind : {Kind::Alt, Kind::Sym})
    for (int d0 = 0; d0 <= 4; ++d0)
      for (int d1 = 0; d1 <= 4; ++d1)
        for (int n = 1; n <= 4; ++n) {
          long long brute = 0;
          for (auto& w : words(d0 + d1, n)) brute += canonical(kind, w, d0);
          long long formula = dim_power(kind, d0, d1, n);
          long long listed = brute ? static_cast<long long>(enum_indices(kind, d0, d1, n).size()) : 0;
          ++cases;
          if (formula != brute || listed != brute) {
            std::ostringstream s;
            s << kn(kind) << "(" << d0 << "|" << d1 << ") n=" << n << ": formula " << formula << ", enumeration "
              << listed << ", brute force " << brute;
            o.fail(s.str());
          }
        }
  if (o.pass) o.detail = std::to_string(cases) + " (kind,d0,d1,n) cases";
  return o;
}

Outcome dual_basis() {
  Outcome o;
  int bad = 0, entries = 0;
  for (auto kind : {Kind::Alt, Kind::Sym})
    for (int d0 = 0; d0 <= 3; ++d0)
      for (int d1 = 0; d1 <= 3; ++d1)
        for (int n = 1; n <= 3; ++n) {
          if (dim_power(kind, d0, d1, n) == 0) continue;
          const PowerBasis& pb = power_basis(kind, d0, d1, n);
          for (int a = 0; a < pb.size(); ++a)
            for (int b = 0; b < pb.size(); ++b) {
              PowerVector f{kind, {d0, d1}, n, Vec(pb.size())}, v = f;
              f.coords[a] = 1, v.coords[b] = 1;
              Scalar got = pairing_F(f, v);
              ++entries;
              if (got != Scalar(a == b ? 1 : 0)) {
                if (!bad++) {
                  std::ostringstream s;
                  s << kn(kind) << "(" << d0 << "|" << d1 << ") n=" << n << ": <e*" << tuple_label(pb[a].e) << ", e"
                    << tuple_label(pb[b].e) << "> = " << got.str();
                  o.fail(s.str());
                }
              }
            }
        }
  if (!o.pass) o.detail += "; " + std::to_string(bad) + " of " + std::to_string(entries) + " entries differ";
  else o.detail = std::to_string(entries) + " entries";
  return o;
}

Outcome module_duality() {
  Outcome o;
  SuperModule M = natural_module(1, 1), D = dual_module(M);
  for (int n = 2; n <= 3; ++n) {
    std::vector<SuperModule> ms(n, M), ds(n, D);
    std::vector<Matrix> g(n, Matrix::identity(2));
    std::vector<Grading> fp(n, D.par), vp(n, M.par);
    for (auto mode : {TensorMode::General, TensorMode::Restricted}) {
      Report r = duality_violations(tensor_modules(mode, ms), tensor_modules(mode, ds), tensor_pairing(g, fp, vp));
      if (!r.empty())
        o.fail(std::string(mode == TensorMode::General ? "general" : "restricted") + " tensor n=" + std::to_string(n));
    }
    for (auto kind : {Kind::Alt, Kind::Sym}) {
      Report r = duality_violations(power_module(kind, M, n), power_module(kind, D, n), power_pairing(kind, M, n));
      if (!r.empty()) o.fail(std::string(kn(kind)) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "gl(1|1) on (1|1), n=2,3, four constructions";
  return o;
}

struct Named {
  std::string name;
  MetricPair pair;
};

std::vector<Named> oracle_inputs() {
  return {{"typeI(1,2)", type_I(1, 2)},
          {"typeI(1,3)", type_I(1, 3)},
          {"typeII(3)", type_II(3)},
          {"typeIII(2)", type_III(2)},
          {"random(1|1)", fixtures::random_pair_11(2024)}};
}

std::vector<Named> constructed;  // every power built for criterion 4, checked in 5

Outcome oracle_equivalence() {
  Outcome o;
  int compared = 0;
  for (auto& [name, V] : oracle_inputs()) {
    for (auto kind : {Kind::Alt, Kind::Sym}) {
      MetricPair W = power_pair(kind, V, 2);
      constructed.push_back({std::string(kn(kind)) + "^2 " + name, W});
      try {
        ++compared;
        if (!same_pair(W, oracle_power_pair(power_kind(kind), V, 2)))
          o.fail(std::string(kn(kind)) + " n=2 on " + name + " differs");
      } catch (const std::exception& e) {
        o.fail(std::string(kn(kind)) + " n=2 on " + name + ": " + e.what());
      }
    }
    for (int n = 2; n <= 3; ++n) {
      MetricPair T = restricted_tensor_power(V, n);
      constructed.push_back({"tensor^" + std::to_string(n) + " " + name, T});
      try {
        ++compared;
        if (!same_pair(T, oracle_power_pair(PowerKind::Tensor, V, n)))
          o.fail("tensor n=" + std::to_string(n) + " on " + name + " differs");
      } catch (const std::exception& e) {
        o.fail("tensor n=" + std::to_string(n) + " on " + name + ": " + e.what());
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " closed forms equal their oracle";
  return o;
}

Outcome axioms() {
  Outcome o;
  for (auto& [name, W] : constructed) {
    Report r = check_metric_pair(W);  // includes the pair axioms
    if (!r.empty()) o.fail(name + ": " + std::to_string(r.size()) + " violations, first " + r[0].axiom);
  }
  if (o.pass) o.detail = std::to_string(constructed.size()) + " power pairs, zero violations";
  return o;
}

Outcome example(int type) {
  Outcome o;
  Scalar mu = type == 2 ? Scalar(-1) : Scalar(1, 2);
  int lo = type == 2 ? 2 : 1, hi = type == 2 ? 4 : 3;
  for (int n = lo; n <= hi; ++n) {
    ExampleReport r = type == 2 ? verify_example_II(n) : verify_example_III(n);
    std::string at = "n=" + std::to_string(n) + ": ";
    if (!r.invertible) o.fail(at + "map not invertible");
    if (!r.hom.empty()) o.fail(at + "homomorphism check: " + r.hom[0].axiom);
    if (!r.multiplier) o.fail(at + "not a similarity");
    else if (*r.multiplier != mu) o.fail(at + "multiplier " + r.multiplier->str());
    if (r.shift.lambda != Scalar(-4) || r.shift.a != 0) o.fail(at + "shift parameter");
    if (!r.pass) o.fail(at + "report FAIL");
  }
  if (o.pass) o.detail = "n=" + std::to_string(lo) + ".." + std::to_string(hi) + ", multiplier " + mu.str() + ", shift (-4, 0)";
  return o;
}

Outcome traces() {
  Outcome o;
  for (int n = 2; n <= 4; ++n)
    if (type_II(n).gram * Scalar(2) != trace_I_gram(2, n)) o.fail("type II n=" + std::to_string(n));
  for (int n = 1; n <= 4; ++n)
    if (type_III(n).gram != trace_I_gram(3, n)) o.fail("type III n=" + std::to_string(n));
  if (o.pass) o.detail = "t(II) = t(I)/2 and t(III) = t(I), n<=4";
  return o;
}

Outcome kernel_laws() {
  Outcome o;
  std::mt19937 rng(55);
  // (a) purely even, d = n
  for (int n = 1; n <= 4; ++n) {
    SuperSpace s{n, 0};
    for (int t = 0; t < 10; ++t) {
      SuperMatrix A{s, s, fixtures::random_even(s.grading(), rng)};
      if (t % 2 == 0) {  // lower times upper unitriangular: det exactly 1
        Matrix L = Matrix::identity(n), U = Matrix::identity(n);
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            U(i, j) = Scalar(static_cast<long>(rng() % 5) - 2);
            L(j, i) = Scalar(static_cast<long>(rng() % 5) - 2);
          }
        A.a = L * U;
      }
      Matrix p = matrix_power(Kind::Alt, A, n);
      Scalar det = determinant(A.a);
      if (p != Matrix::identity(1) * det) o.fail("A^n != det A for n=" + std::to_string(n));
      auto v = kernel_check(Kind::Alt, A, n);
      bool member = v.type == KernelVerdict::SlCase;
      if (member != det.is_one() || v.type == KernelVerdict::LawViolated)
        o.fail("kernel verdict disagrees with det A = 1, n=" + std::to_string(n));
    }
  }
  // (b) (2|1), n = 2
  SuperSpace s{2, 1};
  int nonscalar = 0;
  while (nonscalar < 100) {
    SuperMatrix A{s, s, fixtures::random_even(s.grading(), rng)};
    if (A.a == Matrix::identity(3) * A.a(0, 0)) continue;
    ++nonscalar;
    if (matrix_power(Kind::Alt, A, 2) == Matrix::identity(4)) o.fail("non-scalar A with A^2 = I");
    if (kernel_check(Kind::Alt, A, 2).type != KernelVerdict::NotKernel) o.fail("non-scalar A classified as kernel");
  }
  for (Scalar r : {Scalar(1), Scalar(-1), Scalar(2), Scalar(1, 2), Scalar(-3)}) {
    SuperMatrix A{s, s, Matrix::identity(3) * r};
    auto v = kernel_check(Kind::Alt, A, 2);
    bool member = v.type == KernelVerdict::ScalarRoot;
    if (member != (r * r).is_one() || (member && v.r != r)) o.fail("scalar r=" + r.str());
  }
  if (o.pass) o.detail = "even d=n<=4 and 100 random non-scalar (2|1) matrices";
  return o;
}

Outcome lifting() {
  Outcome o;
  MetricPair V = type_I(1, 3);
  Matrix A = Matrix::identity(3);
  A(1, 1) = 2, A(2, 2) = 3;
  for (auto k : {PowerKind::Tensor, PowerKind::Alt, PowerKind::Sym})
    for (int n = 2; n <= 3; ++n) {
      std::string at = std::string(power_kind_name(k)) + " n=" + std::to_string(n) + ": ";
      Lift f = lift_automorphism(k, V, type_I_automorphism(A, 1), n);
      if (!f.post.empty()) o.fail(at + "diag(1,2,3) lift: " + f.post[0].axiom);
      for (Scalar lam : {Scalar(1), Scalar(-1), Scalar(2), Scalar(-1, 2)}) {
        Lift c = lift_automorphism(k, V, scaling_map(V, lam), n);
        if (!c.post.empty()) o.fail(at + "c_lambda lift: " + c.post[0].axiom);
        bool trivial = c.map.plus == Matrix::identity(c.map.plus.rows()) &&
                       c.map.minus == Matrix::identity(c.map.minus.rows());
        if (trivial != pow(lam, n).is_one()) o.fail(at + "c_lambda triviality for lambda=" + lam.str());
      }
    }
  if (o.pass) o.detail = "tensor/alt/sym, n=2,3 on typeI(1,3)";
  return o;
}

Outcome functoriality() {
  Outcome o;
  std::mt19937 rng(77);
  SuperSpace s{2, 2};
  for (auto kind : {Kind::Alt, Kind::Sym})
    for (int n = 2; n <= 3; ++n) {
      const PowerBasis& pb = power_basis(kind, 2, 2, n);
      Matrix G = power_gram(kind, Matrix::identity(4), pb, pb, false);
      for (int t = 0; t < 10; ++t) {
        SuperMatrix A{s, s, fixtures::random_even(s.grading(), rng)}, B{s, s, fixtures::random_even(s.grading(), rng)};
        Matrix An = matrix_power(kind, A, n);
        if (matrix_power(kind, {s, s, A.a * B.a}, n) != An * matrix_power(kind, B, n))
          o.fail(std::string(kn(kind)) + " n=" + std::to_string(n) + ": (AB)^n != A^n B^n");
        Matrix Dn = matrix_power(kind, dual_map(A), n);
        if (Dn.transpose() * G != G * An)
          o.fail(std::string(kn(kind)) + " n=" + std::to_string(n) + ": (A*)^n is not the adjoint of A^n");
      }
    }
  if (o.pass) o.detail = "10 random pairs per (kind, n) on (2|2)";
  return o;
}

Outcome sign_laws() {
  Outcome o;
  for (int len = 0; len <= 6; ++len)
    for (int m = 0; m < (1 << len); ++m) {
      std::vector<Parity> a(len);
      for (int i = 0; i < len; ++i) a[i] = (m >> i) & 1;
      for (int i = 0; i + 1 < len; ++i) {
        auto b = a;
        std::swap(b[i], b[i + 1]);
        if (sigma_sign(b) != Scalar(((a[i] + a[i + 1]) & 1) ? -1 : 1) * sigma_sign(a))
          o.fail("transposition law at length " + std::to_string(len));
      }
      std::vector<Parity> sorted = a;
      std::sort(sorted.begin(), sorted.end());
      if (sigma_sign(sorted) != Scalar(1)) o.fail("sigma of a parity-ordered tuple");
    }
  auto pm = [](int e) { return (e & 1) ? -1 : 1; };
  for (int n = 1; n <= 4; ++n)
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        for (int i = 1; i <= n; ++i)
          for (int j = 1; j <= n; ++j) {
            bool ri = i <= p, cj = j <= q;
            int hat = ri && cj ? pm(i + j) : ri ? pm(i + n) : cj ? pm(j + n) : 1;
            int chk = ri && cj ? 1 : ri ? pm(j + n) : cj ? pm(i + n) : pm(i + j);
            if (power_sign(Kind::Alt, p, q, n, i, j) != Scalar(hat)) o.fail("alt table");
            if (power_sign(Kind::Sym, p, q, n, i, j) != Scalar(chk)) o.fail("sym table");
          }
  if (o.pass) o.detail = "tuples of length <= 6, tables for n <= 4";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> cs{
      {"dimension formulas equal enumeration", dimensions},
      {"dual-basis law for the F pairing", dual_basis},
      {"supermodule duality of tensor/alt/sym pairings", module_duality},
      {"closed-form powers equal the Faulkner oracle", oracle_equivalence},
      {"power pairs satisfy all metric pair axioms", axioms},
      {"type II is the shifted alternating square (multiplier -1)", [] { return example(2); }},
      {"type III is the shifted symmetric square (multiplier 1/2)", [] { return example(3); }},
      {"trace relations", traces},
      {"kernel laws", kernel_laws},
      {"automorphism lifting", lifting},
      {"functoriality and dual compatibility", functoriality},
      {"sigma law and sign tables", sign_laws},
  };
  int failed = 0;
  for (size_t k = 0; k < cs.size(); ++k) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = cs[k].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << "criterion " << k + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << cs[k].name << " -- "
              << o.detail << " (" << std::fixed << std::setprecision(2) << secs << "s)" << std::endl;
  }
  return failed ? 1 : 0;
}
