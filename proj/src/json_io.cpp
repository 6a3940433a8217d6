#include "superpow/json_io.hpp"

namespace sp {

json to_json(const Scalar& s) {
  if (sgn(s.im()) == 0) return s.re().get_str();
  return json{{"re", s.re().get_str()}, {"im", s.im().get_str()}};
}

Scalar scalar_from_json(const json& j) {
  try {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_object() && j.contains("re") && j.contains("im")) {
      Scalar re = scalar_from_json(j.at("re")), im = scalar_from_json(j.at("im"));
      return Scalar(re.re(), im.re());
    }
  } catch (const std::invalid_argument& e) {
    throw MalformedInput(e.what());
  } catch (const DivisionByZero&) {
    throw MalformedInput("zero denominator in scalar");
  }
  throw MalformedInput("scalar must be a \"p/q\" string or {re, im}");
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("matrix must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (auto& r : j) {
    if (!r.is_array()) throw MalformedInput("matrix row must be an array");
    std::vector<Scalar> row;
    for (auto& x : r) row.push_back(scalar_from_json(x));
    if (!rows.empty() && row.size() != rows[0].size()) throw MalformedInput("ragged matrix");
    rows.push_back(row);
  }
  return Matrix::from_rows(rows);
}

namespace {
json space_json(SuperSpace s) { return json::array({s.d0, s.d1}); }
SuperSpace space_from(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw MalformedInput(std::string(what) + " must be [d0,d1]");
  int d0 = j[0], d1 = j[1];
  if (d0 < 0 || d1 < 0) throw MalformedInput(std::string(what) + " has a negative dimension");
  return {d0, d1};
}
const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}
SuperSpace counts(const Grading& g) {
  int d1 = 0;
  for (auto p : g) d1 += p;
  return {static_cast<int>(g.size()) - d1, d1};
}
}  // namespace

json to_json(const SuperMatrix& m) {
  return json{{"rows", space_json(m.rows)}, {"cols", space_json(m.cols)}, {"entries", to_json(m.a)}};
}

SuperMatrix supermatrix_from_json(const json& j) {
  SuperMatrix m{space_from(need(j, "rows"), "rows"), space_from(need(j, "cols"), "cols"),
                matrix_from_json(need(j, "entries"))};
  if (m.a.rows() != m.rows.dim() || m.a.cols() != m.cols.dim())
    throw MalformedInput("entries do not match the declared dimensions");
  return m;
}

json to_json(const PowerVector& v) {
  json c = json::object();
  const PowerBasis& pb = v.basis();
  for (int i = 0; i < pb.size(); ++i)
    if (!v.coords[i].is_zero()) c[tuple_label(pb[i].e)] = to_json(v.coords[i]);
  return json{{"kind", kind_name(v.kind)}, {"n", v.n}, {"coords", c}};
}

json to_json(const MetricPair& P) {
  json j;
  j["dminus"] = space_json(counts(P.par[Minus]));
  j["dplus"] = space_json(counts(P.par[Plus]));
  if (!parity_ordered(P.par[Minus]) || !parity_ordered(P.par[Plus])) {
    j["parMinus"] = P.par[Minus];
    j["parPlus"] = P.par[Plus];
  }
  j["labelsMinus"] = P.labels[Minus];
  j["labelsPlus"] = P.labels[Plus];
  const char* names[2] = {"prodMinus", "prodPlus"};
  for (int s = 0; s < 2; ++s) {
    json t = json::array();
    int dx = P.dim(s), dy = P.dim(1 - s);
    for (int a = 0; a < dx; ++a) {
      json ja = json::array();
      for (int b = 0; b < dy; ++b) {
        json jb = json::array();
        for (int c = 0; c < dx; ++c) {
          json jc = json::array();
          for (auto& x : P.prod[s].dense(a, b, c)) jc.push_back(to_json(x));
          jb.push_back(jc);
        }
        ja.push_back(jb);
      }
      t.push_back(ja);
    }
    j[names[s]] = t;
  }
  j["gram"] = to_json(P.gram);
  return j;
}

MetricPair pair_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("pair document must be an object");
  SuperSpace S[2] = {space_from(need(j, "dminus"), "dminus"), space_from(need(j, "dplus"), "dplus")};
  Grading g[2] = {S[0].grading(), S[1].grading()};
  const char* pk[2] = {"parMinus", "parPlus"};
  for (int s = 0; s < 2; ++s)
    if (j.contains(pk[s])) {
      try {
        g[s] = j.at(pk[s]).get<Grading>();
      } catch (const json::exception&) {
        throw MalformedInput(std::string(pk[s]) + " must be a list of 0/1");
      }
      for (auto p : g[s])
        if (p != 0 && p != 1) throw MalformedInput(std::string(pk[s]) + " must be a list of 0/1");
      if (!(counts(g[s]) == S[s])) throw MalformedInput(std::string(pk[s]) + " disagrees with the counts");
    }
  MetricPair P;
  static_cast<TriplePair&>(P) = empty_pair(g[Minus], g[Plus]);
  const char* lk[2] = {"labelsMinus", "labelsPlus"};
  for (int s = 0; s < 2; ++s)
    if (j.contains(lk[s])) {
      try {
        P.labels[s] = j.at(lk[s]).get<std::vector<std::string>>();
      } catch (const json::exception&) {
        throw MalformedInput(std::string(lk[s]) + " must be a list of strings");
      }
      if (static_cast<int>(P.labels[s].size()) != P.dim(s)) throw MalformedInput("label count mismatch");
    }
  const char* names[2] = {"prodMinus", "prodPlus"};
  for (int s = 0; s < 2; ++s) {
    const json& t = need(j, names[s]);
    int dx = P.dim(s), dy = P.dim(1 - s);
    auto bad = [&] { return MalformedInput(std::string(names[s]) + " has the wrong shape"); };
    if (!t.is_array() || static_cast<int>(t.size()) != dx) throw bad();
    for (int a = 0; a < dx; ++a) {
      if (!t[a].is_array() || static_cast<int>(t[a].size()) != dy) throw bad();
      for (int b = 0; b < dy; ++b) {
        if (!t[a][b].is_array() || static_cast<int>(t[a][b].size()) != dx) throw bad();
        for (int c = 0; c < dx; ++c) {
          const json& v = t[a][b][c];
          if (!v.is_array() || static_cast<int>(v.size()) != dx) throw bad();
          Vec x;
          for (auto& e : v) x.push_back(scalar_from_json(e));
          P.prod[s].set(a, b, c, x);
        }
      }
    }
  }
  P.gram = matrix_from_json(need(j, "gram"));
  if (P.gram.rows() != P.dim(Minus) || (P.gram.rows() > 0 && P.gram.cols() != P.dim(Plus)))
    throw MalformedInput("gram does not match dminus x dplus");
  if (P.gram.rows() == 0) P.gram = Matrix(0, P.dim(Plus));
  return P;
}

json to_json(const Report& r, size_t limit) {
  json j = json::array();
  for (size_t k = 0; k < r.size() && k < limit; ++k)
    j.push_back(json{{"axiom", r[k].axiom}, {"witness", r[k].witness}, {"detail", r[k].detail}});
  return j;
}

MetricPair promoted(const MetricPair& P) {
  MetricPair Q = P;
  for (int s = 0; s < 2; ++s) {
    int dx = P.dim(s), dy = P.dim(1 - s);
    for (int a = 0; a < dx; ++a)
      for (int b = 0; b < dy; ++b)
        for (int c = 0; c < dx; ++c) {
          SparseVec v = P.prod[s].at(a, b, c);
          for (auto& [e, x] : v) x = x.promoted();
          Q.prod[s].set(a, b, c, v);
        }
  }
  for (int i = 0; i < Q.gram.rows(); ++i)
    for (int k = 0; k < Q.gram.cols(); ++k) Q.gram(i, k) = Q.gram(i, k).promoted();
  return Q;
}

}  // namespace sp
