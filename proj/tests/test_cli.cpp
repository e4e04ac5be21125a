#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "fom/cli.hpp"
#include "fom/expr.hpp"

using fom::cli::run;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("structured");
  Result r = invoke(args);
  REQUIRE_MESSAGE(!r.out.empty(), r.err);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("genus") {
  Result r = invoke({"genus", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("genus: 17") != std::string::npos);
  CHECK(structured({"genus", "--k", "4"})["result"]["genus"] == 1281);
  CHECK(invoke({"genus", "--k", "1"}).code == 2);
}

TEST_CASE("moduli report") {
  json d = structured({"moduli", "--conductor", "3", "--k", "2", "--lambda", "-4", "--mu", "2*z"});
  CHECK(d["status"] == "ok");
  CHECK(d["result"]["moduli_field"]["degree"] == 1);
  CHECK(d["result"]["min_def_field"]["degree"] == 2);
  CHECK(d["result"]["degree_over_moduli"] == 2);
  CHECK(d["input"]["lambda"]["value"] == "-4");
}

TEST_CASE("classify with a negative sigma value and witness") {
  json d = structured({"classify", "--conductor", "5", "--k", "2", "--lambda", "-4", "--mu", "2*z", "--sigma", "4"});
  REQUIRE(d["result"]["rows"].size() == 1);
  CHECK(d["result"]["rows"][0]["row"] == 4);
  const auto& w = d["result"]["witness"];
  CHECK(w["a"] == "0");
  CHECK(w["b"] == "1");
  CHECK(w["c"] == "-1/4");
  CHECK(w["d"] == "0");
  json neg = structured({"classify", "--conductor", "5", "--lambda", "-4", "--mu", "2*z", "--sigma", "-1"});
  CHECK(neg["result"]["rows"] == d["result"]["rows"]);
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"nonsense"}).code == 2);
  Result missing = invoke({"classify", "--conductor", "5", "--lambda", "-4", "--mu", "2*z"});
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--sigma") != std::string::npos);
  Result bad_expr = invoke({"validate", "--conductor", "5", "--lambda", "-4", "--mu", "2*w"});
  CHECK(bad_expr.code == 2);
  CHECK(bad_expr.err.find("--mu") != std::string::npos);
  Result non_unit = invoke({"classify", "--conductor", "8", "--lambda", "-4", "--mu", "2*z", "--sigma", "2"});
  CHECK(non_unit.code == 2);
  CHECK(non_unit.err.find("--sigma") != std::string::npos);
  json odd = structured({"validate", "--conductor", "3", "--k", "3", "--lambda", "-4", "--mu", "2*z"});
  CHECK(odd["status"] == "rejected");
  CHECK(odd["diagnostic"]["clause"] == "k_odd");
  CHECK(invoke({"validate", "--conductor", "3", "--k", "3", "--lambda", "-4", "--mu", "2*z"}).code == 1);
  CHECK(invoke({"validate", "--conductor", "4", "--lambda", "-4", "--mu", "-2*z"}).code == 1);
}

TEST_CASE("configuration commands") {
  json cr = structured({"crossratio", "--conductor", "3", "--points", "1,-4,2*z,-2*z"});
  CHECK(cr["result"]["cross_ratio"]["value"] == "-7/3");
  CHECK(cr["result"]["g_orbit"].size() == 6);
  json inf = structured({"crossratio", "--points", "inf,0,1,-4"});
  CHECK(inf["result"]["cross_ratio"]["value"] == "-4");
  json circles = structured({"circles", "--conductor", "3", "--l1", "-4", "--l2", "2*z", "--l3", "-2*z"});
  CHECK(circles["result"]["quadruples"].size() == 3);
  json sym = structured({"symmetries", "--conductor", "3", "--l1", "-4", "--l2", "2*z", "--l3", "-2*z"});
  CHECK(sym["result"]["conformal"].size() == 1);
  CHECK(sym["result"]["anticonformal"][0]["anti"] == true);
  json orbit = structured({"orbit", "--l1", "2", "--l2", "3", "--l3", "5"});
  CHECK(orbit["result"]["size"] == 720);
  json eq = structured({"equiv", "--l1", "2", "--l2", "3", "--l3", "5", "--m1", "1/2", "--m2", "1/3", "--m3", "1/5"});
  CHECK(eq["result"]["equivalent"] == true);
  json g = structured({"orbit", "--value", "2"});
  CHECK(g["result"]["g_orbit"].size() == 3);
}

TEST_CASE("lift and weil-check") {
  json over8 = structured({"lift", "--conductor", "8", "--lambda", "-4", "--mu", "2*z", "--sigma", "3", "--map", "0,-4,1,0"});
  CHECK(over8["result"]["isomorphisms"].empty());
  CHECK(over8["result"]["missing_radicals"].size() == 2);
  json over16 = structured({"lift", "--conductor", "8", "--field", "16", "--lambda", "-4", "--mu", "2*z", "--sigma",
                            "3", "--map", "0,-4,1,0"});
  CHECK(over16["result"]["isomorphisms"].size() == 32);
  json w = structured({"weil-check", "--conductor", "8", "--field", "16", "--lambda", "-4", "--mu", "2*z",
                       "--generator", "3", "--order", "4", "--map", "0,-4,1,0", "--choice", "0"});
  REQUIRE(w["result"]["candidates"].size() == 1);
  CHECK(w["result"]["candidates"][0]["cocycle_ok"] == true);
  CHECK(invoke({"weil-check", "--conductor", "8", "--field", "16", "--lambda", "-4", "--mu", "2*z", "--generator",
                "3", "--order", "3", "--map", "0,-4,1,0"})
            .code == 2);
}

TEST_CASE("structured output is deterministic and re-parses") {
  std::vector<std::string> args{"moduli", "--conductor", "5", "--lambda", "-4", "--mu", "2*z", "--format", "structured"};
  Result a = invoke(args), b = invoke(args);
  CHECK(a.out == b.out);
  json d = json::parse(a.out);
  std::string prim = d["result"]["moduli_field"]["primitive"];
  fom::CycElt x = fom::parse_element(prim, 5);
  CHECK(fom::parse_element(x.to_string(), 5) == x);
  json c = structured({"classify", "--conductor", "5", "--lambda", "-4", "--mu", "2*z", "--sigma", "4"});
  CHECK(fom::parse_element(c["result"]["sigma_mu"].get<std::string>(), 5) == fom::parse_element("2*z^4", 5));
}
