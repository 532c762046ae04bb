#include "wdm/cli/run.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wdm/cli/json_io.hpp"
#include "wdm/mixed/structure.hpp"
#include "wdm/pi1/lyndon.hpp"
#include "wdm/selmer/dims.hpp"
#include "wdm/selmer/normalize.hpp"

namespace wdm::cli {

namespace {

struct Outcome {
  json payload = json::object();
  std::vector<std::string> diagnostics;
  bool ok = true;
};

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError({path + ": cannot open file"});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError({path + ": invalid JSON: " + e.what()});
  }
}

Q flag_rational(const std::string& s, const std::string& flag) {
  auto q = parse_rational(s);
  if (!q) throw SchemaError({flag + ": invalid rational \"" + s + "\""});
  return *q;
}

void require_axioms(const WDRep& a) {
  const AxiomReport r = check_axioms(a);
  if (!r.ok) {
    std::string msg = "representation violates the axioms:";
    for (const auto& v : r.violations) msg += " " + v + ";";
    throw DomainError(msg);
  }
}

void require_filtration(const FilteredWDRep& v) {
  require_axioms(v.rep);
  auto errs = filtration_errors(v);
  if (!errs.empty()) throw DomainError("invalid filtration: " + errs.front());
}

json purity_json(const PurityCertificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back(json{{"j", s.j}, {"dim_source", s.dim_source}, {"dim_target", s.dim_target}, {"rank", s.rank}});
  return json{{"pure", c.pure}, {"weight", c.weight}, {"steps", steps}, {"reason", c.reason}};
}

Outcome do_check(const std::string& path) {
  const WDRep a = read_wdrep(read_file(path));
  Outcome o;
  const AxiomReport r = check_axioms(a);
  o.payload["dim"] = a.dim();
  o.payload["q"] = a.q.get_str();
  o.payload["axioms"] = json{{"ok", r.ok}, {"violations", r.violations}};
  if (!r.ok) {
    o.ok = false;
    o.diagnostics = r.violations;
    return o;
  }
  o.payload["frobenius_semisimple"] = is_frobenius_semisimple(a);
  const WeightDecomposition wd = weight_spaces(a);
  json factors = json::array();
  for (const auto& f : wd.factors)
    factors.push_back(json{{"factor", to_json(f.factor.coeffs())},
                           {"multiplicity", f.multiplicity},
                           {"weight", f.weight ? json(*f.weight) : json(nullptr)},
                           {"dim", f.dim}});
  o.payload["factors"] = factors;
  json parts = json::object();
  for (const auto& [i, s] : wd.parts) parts[std::to_string(i)] = s.dim();
  o.payload["weight_dims"] = parts;
  o.payload["unclassified_dim"] = wd.unclassified.dim();
  return o;
}

Outcome do_analyze(const std::string& path) {
  const FilteredWDRep v = read_filtered(read_file(path));
  require_filtration(v);
  Outcome o;
  const MixednessCertificate cert = check_mixed(v);
  json pieces = json::object();
  for (const auto& [i, c] : cert.pieces) pieces[std::to_string(i)] = purity_json(c);
  const AdaptedBasis b = adapted_basis(v);
  json gr = json::object();
  for (const auto& [i, blk] : b.blocks) gr[std::to_string(i)] = blk.second;
  o.payload["mixed"] = cert.mixed;
  o.payload["errors"] = cert.errors;
  o.payload["pieces"] = pieces;
  o.payload["graded_dims"] = gr;
  o.payload["frobenius_semisimple"] =
      json{{"V", is_frobenius_semisimple(v.rep)}, {"graded", is_frobenius_semisimple(associated_graded(v, b).rep)}};
  if (!cert.mixed) {
    o.ok = false;
    o.diagnostics = cert.errors;
    if (o.diagnostics.empty()) o.diagnostics.push_back("not mixed");
  }
  return o;
}

Outcome do_split(const std::string& path) {
  const FilteredWDRep v = read_filtered(read_file(path));
  require_filtration(v);
  const Splitting s = canonical_splitting(v);
  Outcome o;
  o.payload["weights"] = s.basis.weight;
  o.payload["adapted_basis"] = to_json(s.basis.P);
  o.payload["splitting"] = to_json(s.S);
  o.payload["grading_operator"] = to_json(grading_operator(s));
  o.payload["n_equivariant"] = v.rep.N * s.S == s.S * s.graded.rep.N;
  return o;
}

Outcome do_decompose(const std::string& path) {
  const FilteredWDRep v = read_filtered(read_file(path));
  require_filtration(v);
  const StructureDecomposition sd = structure_decompose(v);
  Outcome o;
  json comps = json::array();
  for (const auto& b : sd.blocks)
    comps.push_back(json{{"i", b.i}, {"j", b.j}, {"dim", b.space.dim()}, {"basis", columns_json(b.space)}});
  o.payload["components"] = comps;
  o.payload["embedding"] = to_json(sd.embedding);
  o.payload["inverse"] = to_json(sd.inverse);
  return o;
}

Outcome do_cg(long j1, long j2, long q) {
  Outcome o;
  json comps = json::array();
  for (const auto& c : clebsch_gordan(j1, j2, Z(q)))
    comps.push_back(json{{"r", c.r},
                         {"j", c.j},
                         {"generator", to_json(c.generator)},
                         {"binomial_vector", to_json(c.binomial_vector)},
                         {"binomial_vector_generates", c.binomial_vector_generates}});
  o.payload = json{{"j1", j1}, {"j2", j2}, {"q", std::to_string(q)}, {"components", comps}};
  return o;
}

Outcome do_ml2(const std::string& path, const std::array<std::string, 5>& entries) {
  const FilteredWDRep v = read_filtered(read_file(path));
  require_filtration(v);
  static const char* names[] = {"--a", "--b", "--c", "--d", "--sqrt-det"};
  std::array<Q, 5> x;
  for (std::size_t k = 0; k < 5; ++k) x[k] = flag_rational(entries[k], names[k]);
  const ML2Element m{x[0], x[1], x[2], x[3], x[4]};
  Outcome o;
  o.payload["matrix"] = to_json(ml2_act(m, v));
  return o;
}

Outcome do_pi1(const std::string& path, bool emit) {
  const TruncationInput in = read_truncation(read_file(path));
  const FreeTruncation t = build_truncation(in.letters, in.depth, in.q, in.eigenvalues, in.n_pairs);
  const FilteredWDRep v = weight_filtration_gen(t, Subspace::span(t.dim(), in.K));
  const MixednessCertificate cert = check_mixed(v);
  Outcome o;
  json wd = json::object();
  for (const auto& [i, s] : v.W) wd[std::to_string(i)] = s.dim();
  o.payload["dim"] = t.dim();
  o.payload["weight_filtration_dims"] = wd;
  o.payload["mixed"] = cert.mixed;
  o.payload["mixed_errors"] = cert.errors;
  o.payload["frobenius_semisimple"] = is_frobenius_semisimple(t.rep);
  o.payload["primitive_dims"] = primitive_dims(t);
  if (emit) o.payload["filtered_rep"] = to_json(v);
  return o;
}

Outcome do_selmer(const std::string& path, long deg) {
  const PhiNLieDatum d = read_datum(read_file(path));
  MixedSelmerContext c(d);
  const SelmerDims s = selmer_dims(c, deg);
  Outcome o;
  o.payload["dims"] = json{{"dim_e", s.dim_e}, {"dim_f", s.dim_f}, {"dim_g", s.dim_g}};
  o.payload["hodge"] = s.hodge;
  o.payload["deg"] = deg;
  o.payload["vge"] = columns_json(c.vge());
  o.payload["vge_fixed"] = columns_json(c.vge_fixed());
  o.payload["nilpotency_class"] = d.lie.nilpotency_class();
  o.payload["crystalline_fixed_dim"] = crystalline_fixed(d).dim();
  return o;
}

Outcome do_normalize(const std::string& datum_path, const std::string& point_path) {
  const PhiNLieDatum d = read_datum(read_file(datum_path));
  const json p = read_file(point_path);
  Reader r;
  if (!p.is_object()) r.error("", "expected an object with \"u\" and optionally \"v\"");
  std::optional<Vec> u, v;
  if (const json* x = r.field(p, "", "u")) u = r.vector(*x, "/u", d.dim());
  const json* vj = p.is_object() && p.contains("v") ? &p["v"] : nullptr;
  if (vj) v = r.vector(*vj, "/v", d.dim());
  r.finish();
  Outcome o;
  if (vj) {
    MixedSelmerContext c(d);
    const GNormalForm nf = normalize_g(c, *v, *u);
    o.payload = json{{"mode", "g"}, {"v0", to_json(nf.v0)}, {"w", to_json(nf.w)}};
  } else {
    MixedSelmerContext c(d);
    o.payload = json{{"mode", "f"}, {"w", to_json(normalize_f(c, *u))}};
  }
  return o;
}

std::vector<std::pair<std::string, long>> parse_nu_flag(const std::string& s) {
  std::vector<std::pair<std::string, long>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw SchemaError({"--nu: expected label:multiplicity, got \"" + item + "\""});
    auto m = parse_rational(item.substr(colon + 1));
    if (!m || m->get_den() != 1 || !m->get_num().fits_slong_p())
      throw SchemaError({"--nu: invalid multiplicity in \"" + item + "\""});
    out.emplace_back(item.substr(0, colon), m->get_num().get_si());
  }
  return out;
}

Outcome do_curve(const CurveSelmerInput& in, bool oracle) {
  const CurveSelmerDims c = curve_selmer_dim(in);
  Outcome o;
  o.payload["dim_g"] = c.dim_g;
  o.payload["dim_ef"] = c.dim_f;
  json nu = json::array();
  for (const auto& [l, m] : in.nu) nu.push_back(json{l, m});
  o.payload["input"] = json{{"g", in.g}, {"g0", in.g0}, {"n", in.n}, {"deg", in.deg}, {"nu", nu}};
  if (oracle) {
    const long v = curve_selmer_oracle(in);
    o.payload["oracle"] = v;
    if (v != c.dim_g) {
      o.ok = false;
      o.diagnostics.push_back("closed formula and Lyndon oracle disagree");
    }
  }
  return o;
}

Outcome do_lyndon(long m, long n, bool words) {
  Outcome o;
  json counts = json::array();
  long total = 0;
  for (long i = 1; i <= n; ++i) {
    const long c = lyndon_count(Z(m), i).get_si();
    counts.push_back(c);
    total += c;
  }
  o.payload = json{{"m", m}, {"n", n}, {"counts", counts}, {"total", total}};
  if (words) {
    json ws = json::array();
    for (const Word& w : lyndon_words_up_to(static_cast<std::size_t>(m), static_cast<std::size_t>(n))) {
      std::string s;
      for (std::size_t c : w) s += static_cast<char>('a' + c);
      ws.push_back(s);
    }
    o.payload["words"] = ws;
  }
  return o;
}

void summary(std::ostream& err, const std::string& verb, const json& report) {
  err << verb << ": " << report["status"].get<std::string>() << "\n";
  for (const auto& [k, v] : report["payload"].items())
    if (v.is_primitive()) err << "  " << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& d : report["diagnostics"]) err << "  ! " << d.get<std::string>() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Weil-Deligne representations, mixed filtrations and Selmer data", "wdm"};
  app.require_subcommand(1, 1);
  bool as_float = false, pretty = false;
  app.add_flag("--float", as_float, "add decimal approximations of every rational (payload_float)");
  app.add_flag("--pretty", pretty, "print a short summary to standard error");
  app.fallthrough();

  std::string file, file2;
  std::function<Outcome()> action;
  auto one_file = [&](const char* name, const char* help, std::function<Outcome(const std::string&)> f) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", file, "input JSON file")->required();
    sub->callback([&, f] { action = [&, f] { return f(file); }; });
    return sub;
  };
  one_file("check", "validate a Weil-Deligne representation and report Frobenius weights", do_check);
  one_file("analyze", "check that a filtered representation is mixed", do_analyze);
  one_file("split", "canonical splitting of the weight filtration", do_split);
  one_file("decompose", "structure decomposition into V^{i,j} (x) std_j", do_decompose);

  long j1 = 0, j2 = 0, q = 2;
  auto* cg = app.add_subcommand("cg", "Clebsch-Gordan generators in std_j1 (x) std_j2");
  cg->add_option("--j1", j1)->required()->check(CLI::Range(0, 12));
  cg->add_option("--j2", j2)->required()->check(CLI::Range(0, 12));
  cg->add_option("--q", q)->check(CLI::Range(2L, 1000000L));
  cg->callback([&] { action = [&] { return do_cg(j1, j2, q); }; });

  std::array<std::string, 5> ml2e;
  auto* ml2 = app.add_subcommand("ml2", "action of a metalinear element on a mixed representation");
  ml2->add_option("input", file, "filtered representation JSON")->required();
  ml2->add_option("--a", ml2e[0])->required();
  ml2->add_option("--b", ml2e[1])->required();
  ml2->add_option("--c", ml2e[2])->required();
  ml2->add_option("--d", ml2e[3])->required();
  ml2->add_option("--sqrt-det", ml2e[4])->required();
  ml2->callback([&] { action = [&] { return do_ml2(file, ml2e); }; });

  bool emit = false;
  auto* pi1 = app.add_subcommand("pi1-build", "truncated free path-algebra model with its weight filtration");
  pi1->add_option("input", file, "truncation JSON")->required();
  pi1->add_flag("--emit-rep", emit, "include the filtered representation in the payload");
  pi1->callback([&] { action = [&] { return do_pi1(file, emit); }; });

  long deg = 1;
  auto* sel = app.add_subcommand("selmer", "local Selmer dimensions of a filtered (phi, N) Lie datum");
  sel->add_option("input", file, "datum JSON")->required();
  sel->add_option("--deg", deg, "[K : Q_p]")->check(CLI::Range(1L, 1000L));
  sel->callback([&] { action = [&] { return do_selmer(file, deg); }; });

  auto* norm = app.add_subcommand("normalize", "normal form of a cocycle (v, u), or of u alone");
  norm->add_option("datum", file, "datum JSON")->required();
  norm->add_option("point", file2, "JSON with u and optionally v")->required();
  norm->callback([&] { action = [&] { return do_normalize(file, file2); }; });

  CurveSelmerInput curve;
  std::string nu_flag;
  bool oracle = false;
  auto* cd = app.add_subcommand("curve-dim", "dimension of H^1_g for the n-step quotient of a punctured curve");
  cd->add_option("input", file, "curve input JSON (instead of flags)");
  cd->add_option("--g", curve.g);
  cd->add_option("--g0", curve.g0);
  cd->add_option("--n", curve.n);
  cd->add_option("--deg", curve.deg);
  cd->add_option("--nu", nu_flag, "comma-separated label:multiplicity, labels uK, s, st");
  cd->add_flag("--oracle", oracle, "also count Lyndon words directly");
  cd->callback([&] {
    action = [&] {
      CurveSelmerInput in = curve;
      if (!file.empty())
        in = read_curve(read_file(file));
      else
        in.nu = parse_nu_flag(nu_flag);
      auto errs = curve_input_errors(in);
      if (!errs.empty()) throw DomainError("curve input: " + errs.front());
      return do_curve(in, oracle);
    };
  });

  long m = 2, n = 1;
  bool words = false;
  auto* ly = app.add_subcommand("lyndon", "Lyndon word counts and words");
  ly->add_option("--m", m, "alphabet size")->required()->check(CLI::Range(1L, 26L));
  ly->add_option("--n", n, "maximal length")->required()->check(CLI::Range(1L, 16L));
  ly->add_flag("--words", words, "list the words (letters a, b, ...)");
  ly->callback([&] { action = [&] { return do_lyndon(m, n, words); }; });

  std::string verb;
  json report;
  int code = kOk;
  auto fail = [&](int c, std::vector<std::string> diags) {
    code = c;
    report = json{{"verb", verb}, {"status", "error"}, {"payload", json::object()}, {"diagnostics", diags}};
  };
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    verb = app.get_subcommands().front()->get_name();
    Outcome o = action();
    report = json{{"verb", verb}, {"status", o.ok ? "ok" : "error"}, {"payload", o.payload}, {"diagnostics", o.diagnostics}};
    code = o.ok ? kOk : kDomain;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (!app.get_subcommands().empty()) verb = app.get_subcommands().front()->get_name();
    fail(kSchema, {std::string("usage: ") + e.what()});
  } catch (const SchemaError& e) {
    fail(kSchema, e.errors());
  } catch (const PrecisionError& e) {
    fail(kPrecision, {e.what()});
  } catch (const DomainError& e) {
    fail(kDomain, {e.what()});
  } catch (const std::exception& e) {
    fail(kDomain, {std::string("internal error: ") + e.what()});
  }
  if (as_float) report["payload_float"] = floatify(report["payload"]);
  out << report.dump(2) << "\n";
  if (pretty) summary(err, verb, report);
  return code;
}

}  // namespace wdm::cli
