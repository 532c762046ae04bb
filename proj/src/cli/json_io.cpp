#include "wdm/cli/json_io.hpp"

#include <charconv>

namespace wdm::cli {

namespace {

std::string join_errors(const std::vector<std::string>& e) {
  std::string s = "schema errors:";
  for (const auto& x : e) s += "\n  " + x;
  return s;
}

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::optional<int> parse_int_key(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

void require_object(Reader& r, const json& j, const std::string& ptr) {
  if (!j.is_object()) r.error(ptr, "expected an object");
}

}  // namespace

SchemaError::SchemaError(std::vector<std::string> errors) : std::runtime_error(join_errors(errors)), errors_(std::move(errors)) {}

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + escape(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

void Reader::error(const std::string& ptr, const std::string& msg) { errors_.push_back((ptr.empty() ? "/" : ptr) + ": " + msg); }

void Reader::finish() const {
  if (!errors_.empty()) throw SchemaError(errors_);
}

const json* Reader::field(const json& obj, const std::string& ptr, const char* key, bool required) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) error(child(ptr, key), "missing required field");
    return nullptr;
  }
  return &*it;
}

std::optional<Q> Reader::rational(const json& j, const std::string& ptr) {
  if (j.is_number_integer()) return Q(Z(j.dump()));
  if (j.is_string()) {
    if (auto q = parse_rational(j.get<std::string>())) return q;
    error(ptr, "invalid rational \"" + j.get<std::string>() + "\"");
    return std::nullopt;
  }
  error(ptr, "expected a rational string such as \"-3/4\"");
  return std::nullopt;
}

std::optional<long> Reader::integer(const json& j, const std::string& ptr, long min, long max) {
  if (!j.is_number_integer()) {
    error(ptr, "expected an integer");
    return std::nullopt;
  }
  const long v = j.get<long>();
  if (v < min || v > max) {
    error(ptr, "expected an integer in [" + std::to_string(min) + ", " + std::to_string(max) + "]");
    return std::nullopt;
  }
  return v;
}

std::optional<Vec> Reader::vector(const json& j, const std::string& ptr, std::optional<std::size_t> len) {
  if (!j.is_array()) {
    error(ptr, "expected an array of rationals");
    return std::nullopt;
  }
  if (len && j.size() != *len) {
    error(ptr, "expected length " + std::to_string(*len) + ", got " + std::to_string(j.size()));
    return std::nullopt;
  }
  Vec v;
  bool good = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto x = rational(j[i], child(ptr, i));
    if (x)
      v.push_back(*x);
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return v;
}

std::optional<Matrix> Reader::matrix(const json& j, const std::string& ptr, std::optional<std::size_t> rows,
                                     std::optional<std::size_t> cols) {
  if (!j.is_array()) {
    error(ptr, "expected a row-major array of rows");
    return std::nullopt;
  }
  if (rows && j.size() != *rows) {
    error(ptr, "expected " + std::to_string(*rows) + " rows, got " + std::to_string(j.size()));
    return std::nullopt;
  }
  std::optional<std::size_t> width = cols;
  if (!width && !j.empty() && j[0].is_array()) width = j[0].size();
  std::vector<Vec> rs;
  bool good = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto r = vector(j[i], child(ptr, i), width);
    if (r)
      rs.push_back(*r);
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return Matrix::from_rows(rs, cols.value_or(0));
}

std::optional<Subspace> Reader::columns(const json& j, const std::string& ptr, std::size_t ambient) {
  if (!j.is_array()) {
    error(ptr, "expected a list of column vectors");
    return std::nullopt;
  }
  std::vector<Vec> cols;
  bool good = true;
  for (std::size_t i = 0; i < j.size(); ++i) {
    auto c = vector(j[i], child(ptr, i), ambient);
    if (c)
      cols.push_back(*c);
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return Subspace::span(ambient, cols);
}

std::optional<std::map<int, Subspace>> Reader::filtration(const json& j, const std::string& ptr, std::size_t ambient) {
  if (!j.is_object()) {
    error(ptr, "expected an object mapping weight indices to column lists");
    return std::nullopt;
  }
  std::map<int, Subspace> w;
  bool good = true;
  for (const auto& [key, val] : j.items()) {
    auto i = parse_int_key(key);
    if (!i) {
      error(child(ptr, key), "weight index must be an integer");
      good = false;
      continue;
    }
    auto s = columns(val, child(ptr, key), ambient);
    if (s)
      w.emplace(*i, *s);
    else
      good = false;
  }
  if (!good) return std::nullopt;
  return w;
}

namespace {

constexpr long kMaxDim = 4096;

struct RepFields {
  std::size_t n = 0;
  Z q;
  Matrix phi, N;
};

// dim, the prime (under the given key), phi and N.
RepFields read_rep_fields(Reader& r, const json& j, const char* prime_key) {
  RepFields f;
  require_object(r, j, "");
  const json* dim = r.field(j, "", "dim");
  const json* q = r.field(j, "", prime_key);
  const json* phi = r.field(j, "", "phi");
  const json* N = r.field(j, "", "N");
  std::optional<long> n;
  if (dim) n = r.integer(*dim, "/dim", 0, kMaxDim);
  if (q) {
    const std::string ptr = child("", prime_key);
    if (auto x = r.rational(*q, ptr)) {
      if (x->get_den() != 1 || *x < 2)
        r.error(ptr, "expected an integer at least 2");
      else
        f.q = x->get_num();
    }
  }
  if (n) {
    f.n = static_cast<std::size_t>(*n);
    if (phi)
      if (auto m = r.matrix(*phi, "/phi", f.n, f.n)) f.phi = *m;
    if (N)
      if (auto m = r.matrix(*N, "/N", f.n, f.n)) f.N = *m;
  }
  return f;
}

}  // namespace

WDRep read_wdrep(const json& j) {
  Reader r;
  RepFields f = read_rep_fields(r, j, "q");
  r.finish();
  return WDRep{f.q, f.phi, f.N};
}

FilteredWDRep read_filtered(const json& j) {
  Reader r;
  RepFields f = read_rep_fields(r, j, "q");
  std::map<int, Subspace> w;
  if (const json* W = r.field(j, "", "W"); W && r.ok())
    if (auto x = r.filtration(*W, "/W", f.n)) w = *x;
  r.finish();
  return FilteredWDRep{WDRep{f.q, f.phi, f.N}, w};
}

TruncationInput read_truncation(const json& j) {
  Reader r;
  require_object(r, j, "");
  TruncationInput t;
  const json* m = r.field(j, "", "letters");
  const json* n = r.field(j, "", "depth");
  const json* q = r.field(j, "", "q");
  const json* eig = r.field(j, "", "eigenvalues");
  const json* pairs = r.field(j, "", "N_pairs", false);
  const json* K = r.field(j, "", "K", false);
  if (m)
    if (auto x = r.integer(*m, "/letters", 1, 64)) t.letters = static_cast<std::size_t>(*x);
  if (n)
    if (auto x = r.integer(*n, "/depth", 1, 64)) t.depth = static_cast<std::size_t>(*x);
  if (q)
    if (auto x = r.rational(*q, "/q")) {
      if (x->get_den() != 1 || *x < 2)
        r.error("/q", "expected an integer at least 2");
      else
        t.q = x->get_num();
    }
  if (!r.ok()) r.finish();
  // dim = 1 + m + ... + m^n
  long total = 0, pw = 1;
  for (std::size_t k = 0; k <= t.depth && total <= kMaxDim; ++k) {
    total += pw;
    pw *= static_cast<long>(t.letters);
  }
  if (total > kMaxDim) r.error("/depth", "truncation dimension exceeds " + std::to_string(kMaxDim));
  if (eig)
    if (auto v = r.vector(*eig, "/eigenvalues", t.letters)) t.eigenvalues = *v;
  if (pairs) {
    if (!pairs->is_array()) r.error("/N_pairs", "expected a list of [from, to] or [from, to, coef]");
    else
      for (std::size_t i = 0; i < pairs->size(); ++i) {
        const json& p = (*pairs)[i];
        const std::string ptr = child("/N_pairs", i);
        if (!p.is_array() || p.size() < 2 || p.size() > 3) {
          r.error(ptr, "expected [from, to] or [from, to, coef]");
          continue;
        }
        auto a = r.integer(p[0], child(ptr, 0), 0, static_cast<long>(t.letters) - 1);
        auto b = r.integer(p[1], child(ptr, 1), 0, static_cast<long>(t.letters) - 1);
        std::optional<Q> c = Q(1);
        if (p.size() == 3) c = r.rational(p[2], child(ptr, 2));
        if (a && b && c) t.n_pairs.push_back(NPair{static_cast<std::size_t>(*a), static_cast<std::size_t>(*b), *c});
      }
  }
  if (K && r.ok())
    if (auto s = r.columns(*K, "/K", static_cast<std::size_t>(total)))
      for (std::size_t i = 0; i < s->dim(); ++i) t.K.push_back(s->basis_vector(i));
  r.finish();
  return t;
}

PhiNLieDatum read_datum(const json& j) {
  Reader r;
  RepFields f = read_rep_fields(r, j, "p");
  PhiNLieDatum d;
  d.lie = LieAlgebra(f.n);
  d.p = f.q;
  d.phi = f.phi;
  d.N = f.N;
  d.F0 = Subspace::zero(f.n);
  if (!r.ok()) r.finish();
  if (const json* b = r.field(j, "", "bracket", false)) {
    if (!b->is_array()) r.error("/bracket", "expected a list of [i, j, [coefficients]]");
    else
      for (std::size_t k = 0; k < b->size(); ++k) {
        const json& e = (*b)[k];
        const std::string ptr = child("/bracket", k);
        if (!e.is_array() || e.size() != 3) {
          r.error(ptr, "expected [i, j, [coefficients]]");
          continue;
        }
        auto a = r.integer(e[0], child(ptr, 0), 0, static_cast<long>(f.n) - 1);
        auto c = r.integer(e[1], child(ptr, 1), 0, static_cast<long>(f.n) - 1);
        auto v = r.vector(e[2], child(ptr, 2), f.n);
        if (a && c && *a == *c) r.error(ptr, "bracket of a basis vector with itself is zero");
        else if (a && c && v)
          d.lie.set_bracket(static_cast<std::size_t>(*a), static_cast<std::size_t>(*c), *v);
      }
  }
  if (const json* W = r.field(j, "", "W"))
    if (auto x = r.filtration(*W, "/W", f.n)) d.W = *x;
  if (const json* F0 = r.field(j, "", "F0", false))
    if (auto x = r.columns(*F0, "/F0", f.n)) d.F0 = *x;
  r.finish();
  return d;
}

CurveSelmerInput read_curve(const json& j) {
  Reader r;
  require_object(r, j, "");
  CurveSelmerInput in;
  auto get = [&](const char* key, long min, long& out) {
    if (const json* x = r.field(j, "", key))
      if (auto v = r.integer(*x, child("", key), min, 1000)) out = *v;
  };
  get("g", 1, in.g);
  get("g0", 0, in.g0);
  get("n", 1, in.n);
  get("deg", 1, in.deg);
  in.nu.clear();
  if (const json* nu = r.field(j, "", "nu", false)) {
    if (!nu->is_array()) r.error("/nu", "expected a list of [label, multiplicity]");
    else
      for (std::size_t k = 0; k < nu->size(); ++k) {
        const json& e = (*nu)[k];
        const std::string ptr = child("/nu", k);
        if (!e.is_array() || e.size() != 2 || !e[0].is_string()) {
          r.error(ptr, "expected [label, multiplicity]");
          continue;
        }
        if (auto m = r.integer(e[1], child(ptr, 1), 0, 1000)) in.nu.emplace_back(e[0].get<std::string>(), *m);
      }
  }
  r.finish();
  return in;
}

json to_json(const Q& x) { return to_string(x); }

json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json columns_json(const Subspace& s) {
  json a = json::array();
  for (std::size_t k = 0; k < s.dim(); ++k) a.push_back(to_json(s.basis_vector(k)));
  return a;
}

json to_json(const FilteredWDRep& v) {
  json w = json::object();
  for (const auto& [i, s] : v.W) w[std::to_string(i)] = columns_json(s);
  return json{{"dim", v.dim()}, {"q", v.rep.q.get_str()}, {"phi", to_json(v.rep.phi)}, {"N", to_json(v.rep.N)}, {"W", w}};
}

json to_json(const PhiNLieDatum& d) {
  json br = json::array();
  for (const auto& [i, j, v] : d.lie.brackets()) br.push_back(json{i, j, to_json(v)});
  json w = json::object();
  for (const auto& [i, s] : d.W) w[std::to_string(i)] = columns_json(s);
  return json{{"dim", d.dim()}, {"p", d.p.get_str()}, {"bracket", br}, {"phi", to_json(d.phi)},
              {"N", to_json(d.N)},  {"W", w},            {"F0", columns_json(d.F0)}};
}

json floatify(const json& j) {
  if (j.is_object()) {
    json o = json::object();
    for (const auto& [k, v] : j.items()) o[k] = floatify(v);
    return o;
  }
  if (j.is_array()) {
    json a = json::array();
    for (const auto& v : j) a.push_back(floatify(v));
    return a;
  }
  if (j.is_string())
    if (auto q = parse_rational(j.get<std::string>())) return q->get_d();
  return j;
}

}  // namespace wdm::cli
