// superpow-cli: construct, power, shift, verify and compare pairs; JSON on stdout.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "superpow/json_io.hpp"

using namespace sp;

namespace {

struct Malformed : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Opts {
  std::string kind = "alt", pair, file, field = "rational", which, lambda = "1", rows, cols;
  int d0 = 0, d1 = 0, n = 2, a = 0;
  bool serial = false;
};

Kind parse_kind(const std::string& s) {
  if (s == "alt") return Kind::Alt;
  if (s == "sym") return Kind::Sym;
  throw Malformed("unknown kind \"" + s + "\" (expected alt or sym)");
}

PowerKind parse_power_kind(const std::string& s) {
  if (s == "tensor") return PowerKind::Tensor;
  return power_kind(parse_kind(s));
}

std::vector<int> parse_ints(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Malformed(std::string("bad integer list for ") + what + ": \"" + s + "\"");
    }
  }
  return out;
}

json read_document(const std::string& path) {
  std::ifstream f;
  std::istream* in = &std::cin;
  if (path != "-") {
    f.open(path);
    if (!f) throw Malformed("cannot open " + path);
    in = &f;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw Malformed(std::string("malformed JSON: ") + e.what());
  }
}

MetricPair named_pair(const std::string& ref) {
  auto colon = ref.find(':');
  if (colon == std::string::npos) throw Malformed("pair must look like typeI:p,q, typeII:n or typeIII:n");
  std::string name = ref.substr(0, colon);
  auto args = parse_ints(ref.substr(colon + 1), "--pair");
  if (name == "typeI" && args.size() == 2) return type_I(args[0], args[1]);
  if (name == "typeII" && args.size() == 1) return type_II(args[0]);
  if (name == "typeIII" && args.size() == 1) return type_III(args[0]);
  throw Malformed("unknown pair \"" + ref + "\"");
}

MetricPair load_pair(const Opts& o) {
  if (o.pair.empty() == o.file.empty()) throw Malformed("give exactly one of --pair or --file");
  MetricPair P = o.pair.empty() ? pair_from_json(read_document(o.file)) : named_pair(o.pair);
  if (o.field == "gaussian") return promoted(P);
  if (o.field != "rational") throw Malformed("unknown field \"" + o.field + "\"");
  return P;
}

SuperMatrix load_matrix(const Opts& o) {
  if (o.file.empty()) throw Malformed("--file with a supermatrix document is required");
  SuperMatrix m = supermatrix_from_json(read_document(o.file));
  if (!m.is_even()) throw Malformed("supermatrix is not even");
  return m;
}

std::string verdict_name(KernelVerdict::Type t) {
  switch (t) {
    case KernelVerdict::ScalarRoot: return "SCALAR_ROOT";
    case KernelVerdict::SlCase: return "SL_CASE";
    case KernelVerdict::NotKernel: return "NOT_KERNEL";
    default: return "LAW_VIOLATED";
  }
}

int emit(const json& j, int code = 0) {
  std::cout << j.dump(2) << "\n";
  return code;
}

int run_dims(const Opts& o) {
  return emit(json{{"dim", dim_power(parse_kind(o.kind), o.d0, o.d1, o.n)}});
}

int run_enum(const Opts& o) {
  const PowerBasis& pb = power_basis(parse_kind(o.kind), o.d0, o.d1, o.n);
  json t = json::array();
  for (int i = 0; i < pb.size(); ++i)
    t.push_back(json{{"label", tuple_label(pb[i].e)}, {"k", pb[i].k}, {"parity", pb.grading()[i]}});
  return emit(json{{"dim", pb.size()}, {"tuples", t}});
}

IndexTuple tuple_from(Kind kind, const std::string& s, int d0, int dim, const char* what) {
  IndexTuple I{kind, {}, 0};
  for (int v : parse_ints(s, what)) {
    if (v < 1 || v > dim) throw Malformed(std::string(what) + " index out of range");
    I.e.push_back(v - 1);
    I.k += v - 1 < d0;
  }
  const PowerBasis& pb = power_basis(kind, d0, dim - d0, static_cast<int>(I.e.size()));
  if (pb.find(I.e) < 0) throw Malformed(std::string(what) + " is not a canonical index tuple");
  return I;
}

int run_minor(const Opts& o) {
  Kind kind = parse_kind(o.kind);
  SuperMatrix m = load_matrix(o);
  IndexTuple I = tuple_from(kind, o.rows, m.rows.d0, m.rows.dim(), "--rows");
  IndexTuple J = tuple_from(kind, o.cols, m.cols.d0, m.cols.dim(), "--cols");
  if (I.e.size() != J.e.size()) throw Malformed("--rows and --cols have different lengths");
  return emit(json{{"minor", to_json(superminor(kind, m, I, J))}});
}

int run_matpow(const Opts& o) {
  Kind kind = parse_kind(o.kind);
  SuperMatrix m = load_matrix(o);
  const PowerBasis& rb = power_basis(kind, m.rows.d0, m.rows.d1, o.n);
  const PowerBasis& cb = power_basis(kind, m.cols.d0, m.cols.d1, o.n);
  auto space = [](const PowerBasis& b) {
    int d1 = 0;
    for (auto p : b.grading()) d1 += p;
    return SuperSpace{b.size() - d1, d1};
  };
  json out{{"power", to_json(SuperMatrix{space(rb), space(cb), matrix_power(kind, m, o.n)})},
           {"rowLabels", rb.labels()}, {"colLabels", cb.labels()}};
  if (m.rows == m.cols) out["kernel"] = verdict_name(kernel_check(kind, m, o.n).type);
  return emit(out);
}

int run_build(const Opts& o) { return emit(to_json(load_pair(o))); }

int run_power(const Opts& o) {
  MetricPair V = load_pair(o);
  PowerKind k = parse_power_kind(o.kind);
  bool par = !o.serial;
  return emit(to_json(k == PowerKind::Tensor ? restricted_tensor_power(V, o.n, par)
                                             : power_pair(k == PowerKind::Alt ? Kind::Alt : Kind::Sym, V, o.n, par)));
}

int run_shift(const Opts& o) {
  if (o.a != 0 && o.a != 1) throw Malformed("--a must be 0 or 1");
  Scalar lambda;
  try {
    lambda = Scalar::parse(o.lambda);
  } catch (const std::exception&) {
    throw Malformed("bad --lambda \"" + o.lambda + "\"");
  }
  return emit(to_json(tensor_shift(load_pair(o), {lambda, o.a})));
}

int run_verify(const Opts& o) {
  MetricPair P = load_pair(o);
  Report r = check_metric_pair(P, !o.serial);
  std::cerr << (r.empty() ? "PASS" : "FAIL") << ": " << r.size() << " violation(s)\n";
  return emit(json{{"result", r.empty() ? "PASS" : "FAIL"}, {"violations", r.size()}, {"report", to_json(r)}},
              r.empty() ? 0 : 1);
}

int run_oracle_diff(const Opts& o) {
  MetricPair V = load_pair(o);
  PowerKind k = parse_power_kind(o.kind);
  MetricPair closed = k == PowerKind::Tensor ? restricted_tensor_power(V, o.n, !o.serial)
                                             : power_pair(k == PowerKind::Alt ? Kind::Alt : Kind::Sym, V, o.n, !o.serial);
  try {
    MetricPair oracle = oracle_power_pair(k, V, o.n);
    bool eq = same_pair(closed, oracle);
    std::cerr << (eq ? "closed form equals oracle" : "closed form differs from oracle") << "\n";
    return emit(json{{"equal", eq}}, eq ? 0 : 1);
  } catch (const ConsistencyFailure& e) {
    std::cerr << "oracle failed: " << e.what() << "\n";
    return emit(json{{"equal", false}, {"error", e.what()}}, 1);
  }
}

int run_examples(const Opts& o) {
  ExampleReport r;
  if (o.which == "II") r = verify_example_II(o.n);
  else if (o.which == "III") r = verify_example_III(o.n);
  else throw Malformed("--which must be II or III");
  json out{{"result", r.pass ? "PASS" : "FAIL"}};
  out["multiplier"] = r.multiplier ? to_json(*r.multiplier) : json(nullptr);
  for (auto& s : r.notes) std::cerr << s << "\n";
  return emit(out, r.pass ? 0 : 1);
}

int fail(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return emit(json{{"error", msg}}, 2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact superpowers of metric Jordan superpairs"};
  app.require_subcommand(1);
  Opts o;
  auto kind = [&](CLI::App* s) { s->add_option("--kind", o.kind, "alt | sym (| tensor for power/oracle-diff)"); };
  auto space = [&](CLI::App* s) {
    s->add_option("--d0", o.d0)->check(CLI::NonNegativeNumber);
    s->add_option("--d1", o.d1)->check(CLI::NonNegativeNumber);
  };
  auto degree = [&](CLI::App* s) { s->add_option("--n", o.n)->check(CLI::PositiveNumber); };
  auto source = [&](CLI::App* s) {
    s->add_option("--pair", o.pair, "typeI:p,q | typeII:n | typeIII:n");
    s->add_option("--file", o.file, "pair document, - for stdin");
    s->add_option("--field", o.field, "rational | gaussian");
  };
  std::map<std::string, int (*)(const Opts&)> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Opts&)) {
    verbs[name] = fn;
    return app.add_subcommand(name, help);
  };

  auto* s = verb("dims", "dimension of a power", run_dims);
  kind(s), space(s), degree(s);
  s = verb("enum", "canonical index tuples of a power", run_enum);
  kind(s), space(s), degree(s);
  s = verb("minor", "superminor of an even supermatrix", run_minor);
  kind(s);
  s->add_option("--file", o.file, "supermatrix document")->required();
  s->add_option("--rows", o.rows, "1-based row tuple, e.g. 1,3")->required();
  s->add_option("--cols", o.cols, "1-based column tuple")->required();
  s = verb("matpow", "n-th power of an even supermatrix", run_matpow);
  kind(s), degree(s);
  s->add_option("--file", o.file, "supermatrix document")->required();
  s = verb("build", "catalog pair as a document", run_build);
  source(s);
  s = verb("power", "tensor, alternating or symmetric power of a pair", run_power);
  kind(s), source(s), degree(s);
  s->add_flag("--serial", o.serial, "disable parallel kernels");
  s = verb("shift", "tensor-shift of a pair", run_shift);
  source(s);
  s->add_option("--lambda", o.lambda, "nonzero scalar p/q");
  s->add_option("--a", o.a, "parity 0 or 1");
  s = verb("verify", "check the metric pair axioms", run_verify);
  source(s);
  s->add_flag("--serial", o.serial, "disable parallel kernels");
  s = verb("oracle-diff", "compare the closed form with the Faulkner oracle", run_oracle_diff);
  kind(s), source(s), degree(s);
  s->add_flag("--serial", o.serial, "disable parallel kernels");
  s = verb("examples", "the two worked isomorphisms", run_examples);
  s->add_option("--which", o.which, "II | III")->required();
  degree(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }
  try {
    return verbs.at(app.get_subcommands().front()->get_name())(o);
  } catch (const MalformedInput& e) {
    return fail(e.what());
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  } catch (const std::out_of_range& e) {
    return fail(e.what());
  } catch (const std::length_error& e) {
    return fail(e.what());
  } catch (const DivisionByZero& e) {
    return fail(e.what());
  } catch (const ConsistencyFailure& e) {
    return fail(e.what());
  }
}
