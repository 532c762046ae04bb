#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wdm/cli/json_io.hpp"
#include "wdm/cli/run.hpp"

using namespace wdm;
using namespace wdm::cli;

namespace {

const std::string kDir = WDM_GOLDEN_DIR;

std::string in(const std::string& name) { return kDir + "/" + name; }

struct Result {
  int code;
  json report;
  std::string raw;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return Result{code, json::parse(out.str()), out.str()};
}

// Golden outputs live next to the inputs. WDM_UPDATE_GOLDEN=1 rewrites them.
void golden(const std::string& name, const std::vector<std::string>& args, int code) {
  CAPTURE(name);
  Result a = invoke(args), b = invoke(args);
  CHECK(a.code == code);
  CHECK(a.raw == b.raw);
  const std::string path = in(name + ".out.json");
  const char* upd = std::getenv("WDM_UPDATE_GOLDEN");
  if (upd && std::string(upd) == "1") {
    std::ofstream(path) << a.report.dump(2) << "\n";
    return;
  }
  std::ifstream f(path);
  REQUIRE_MESSAGE(f.good(), "missing golden " << path);
  json want = json::parse(f);
  CHECK(a.report == want);
}

}  // namespace

TEST_CASE("golden reports") {
  golden("check_std1", {"check", in("std1.json")}, kOk);
  golden("analyze_tate_ext", {"analyze", in("tate_ext.json")}, kOk);
  golden("split_tate_ext", {"split", in("tate_ext.json")}, kOk);
  golden("decompose_tate_ext", {"decompose", in("tate_ext.json")}, kOk);
  golden("decompose_tate_ext_float", {"--float", "decompose", in("tate_ext.json")}, kOk);
  golden("ml2_tate_ext", {"ml2", in("tate_ext.json"), "--a", "1", "--b", "1", "--c", "0", "--d", "1", "--sqrt-det", "1"},
         kOk);
  golden("cg_1_1", {"cg", "--j1", "1", "--j2", "1"}, kOk);
  golden("pi1_trunc_tate", {"pi1-build", in("trunc_tate.json")}, kOk);
  golden("selmer_heisenberg", {"selmer", in("heisenberg.json")}, kOk);
  golden("normalize_heisenberg_f", {"normalize", in("heisenberg.json"), in("heisenberg_point_f.json")}, kOk);
  golden("curve_flags", {"curve-dim", "--g", "1", "--g0", "1", "--n", "2", "--deg", "1", "--oracle"}, kOk);
  golden("curve_pair", {"curve-dim", in("curve_pair.json"), "--oracle"}, kOk);
  golden("lyndon_2_4", {"lyndon", "--m", "2", "--n", "4", "--words"}, kOk);
  golden("err_missing_q", {"check", in("bad_missing_q.json")}, kSchema);
  golden("err_phi_shape", {"check", in("bad_phi_shape.json")}, kSchema);
  golden("err_zero_den", {"check", in("bad_zero_den.json")}, kSchema);
  golden("err_axioms", {"check", in("bad_axioms.json")}, kDomain);
  golden("err_not_mixed", {"analyze", in("not_mixed.json")}, kDomain);
}

TEST_CASE("report envelope") {
  for (auto args : std::vector<std::vector<std::string>>{{"check", in("std1.json")},
                                                          {"cg", "--j1", "2", "--j2", "1"},
                                                          {"check", in("bad_missing_q.json")}}) {
    Result r = invoke(args);
    CHECK(r.report.contains("verb"));
    CHECK(r.report.contains("status"));
    CHECK(r.report.contains("payload"));
    CHECK(r.report["diagnostics"].is_array());
    CHECK((r.report["status"] == "ok") == (r.code == kOk));
  }
}

TEST_CASE("report contents") {
  Result s = invoke({"selmer", in("heisenberg.json")});
  REQUIRE(s.code == kOk);
  CHECK(s.report["payload"]["dims"]["dim_e"] == 3);
  CHECK(s.report["payload"]["dims"]["dim_f"] == 3);
  CHECK(s.report["payload"]["dims"]["dim_g"] == 4);

  Result c = invoke({"curve-dim", in("curve_pair.json"), "--oracle"});
  REQUIRE(c.code == kOk);
  CHECK(c.report["payload"]["dim_g"] == c.report["payload"]["oracle"]);

  Result l = invoke({"lyndon", "--m", "2", "--n", "4"});
  CHECK(l.report["payload"]["counts"] == json::array({2, 1, 2, 3}));

  Result f = invoke({"--float", "decompose", in("tate_ext.json")});
  CHECK(f.report.contains("payload_float"));
}

TEST_CASE("usage and io errors") {
  CHECK(invoke({}).code == kSchema);
  CHECK(invoke({"frobnicate"}).code == kSchema);
  CHECK(invoke({"check"}).code == kSchema);
  CHECK(invoke({"cg", "--j1", "x", "--j2", "1"}).code == kSchema);
  Result m = invoke({"check", in("no_such_file.json")});
  CHECK(m.code == kSchema);
  CHECK(m.report["diagnostics"].size() == 1);
  CHECK(invoke({"curve-dim", "--g", "1", "--g0", "0", "--n", "2", "--nu", "u1"}).code != kOk);
}

TEST_CASE("schema pointers") {
  auto errors_of = [](const json& j) {
    try {
      read_filtered(j);
    } catch (const SchemaError& e) {
      return e.errors();
    }
    return std::vector<std::string>{};
  };
  json good = json::parse(R"({"dim":1,"q":"2","phi":[["1"]],"N":[["0"]],"W":{"0":[["1"]],"-1":[]}})");
  CHECK(errors_of(good).empty());

  json j = good;
  j.erase("q");
  auto e = errors_of(j);
  REQUIRE(e.size() == 1);
  CHECK(e[0].rfind("/q:", 0) == 0);

  j = good;
  j["phi"][0][0] = "1/0";
  e = errors_of(j);
  REQUIRE(e.size() == 1);
  CHECK(e[0].rfind("/phi/0/0:", 0) == 0);

  j = good;
  j["N"] = json::array({json::array({"0", "0"})});
  e = errors_of(j);
  REQUIRE_FALSE(e.empty());
  CHECK(e[0].rfind("/N/0", 0) == 0);

  j = good;
  j["W"]["0"] = json::array({json::array({"1", "2"})});
  e = errors_of(j);
  REQUIRE_FALSE(e.empty());
  CHECK(e[0].rfind("/W/0", 0) == 0);

  // all errors are reported, not just the first
  j = good;
  j.erase("q");
  j["phi"][0][0] = true;
  CHECK(errors_of(j).size() == 2);
}

TEST_CASE("rational io round trip") {
  Reader r;
  for (const char* s : {"0", "-3", "7/2", "-5/15"}) {
    auto x = r.rational(json(s), "/x");
    REQUIRE(x);
    CHECK(*r.rational(to_json(*x), "/x") == *x);
  }
  CHECK(to_json(frac(-5, 15)) == json("-1/3"));
  CHECK(r.rational(json(4), "/x") == Q(4));
  CHECK_FALSE(r.rational(json("1.5"), "/x"));
  CHECK_FALSE(r.ok());
  CHECK(floatify(json::array({"1/4"}))[0].get<double>() == doctest::Approx(0.25));
}
