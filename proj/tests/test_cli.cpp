#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "support.hpp"

using namespace support;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "fuzzideal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

const Json& edge(const Json& report, const std::string& name) {
  for (const auto& e : report["diagram"])
    if (e["edge"] == name) return e;
  throw std::runtime_error("missing edge " + name);
}

}  // namespace

TEST_CASE("ideals and primes") {
  auto r = run({"ideals", "--ring", "Zn(6)"});
  REQUIRE(r.code == cli::kOk);
  auto j = json_of(r);
  REQUIRE(j["ideals"].size() == 4);
  std::vector<std::string> primes;
  for (const auto& i : j["ideals"])
    if (i.value("prime", false)) primes.push_back(i["ideal"]);
  CHECK(primes == std::vector<std::string>{"<3>", "<2>"});

  auto m = json_of(run({"ideals", "--ring", "Mat(2,Zn(2))"}));
  REQUIRE(m["ideals"].size() == 2);
  CHECK(m["ideals"][0]["prime"] == true);
  CHECK(m["ideals"][0]["completely_prime"] == false);
  CHECK(m["ideals"][1]["proper"] == false);

  auto p = json_of(run({"primes", "--ring", "Zn(12)"}));
  CHECK(p["ideals"].size() == 2);

  auto dot = run({"ideals", "--ring", "Zn(6)", "--format", "dot"});
  CHECK(dot.out.find("digraph") == 0);
  CHECK(dot.out.find("doublecircle") != std::string::npos);
  CHECK(dot.out.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.out.find("n0 -> n3;") == std::string::npos);

  auto zi = json_of(run({"ideals", "--ring", "Z", "--bound", "10"}));
  CHECK(zi["ideals"].size() == 11);

  CHECK(run({"ideals", "--ring", "Zn(0)"}).code == cli::kParse);
  CHECK(run({"ideals", "--ring", "Zn(6"}).code == cli::kParse);
  CHECK(run({"ideals", "--ring", "Mat(3, Zn(3))"}).code == cli::kResource);
}

TEST_CASE("classify") {
  auto even_ideal = json_of(run({"classify", "--ring", "Z", "--fuzzy", "{1:<0>, 4/5:<2>, 3/5:<*>}"}));
  CHECK(even_ideal["notions"]["D2"] == true);
  CHECK(even_ideal["notions"]["D1"] == false);
  CHECK(even_ideal["witnesses"]["D1"]["reason"] == "values");

  auto variant = json_of(run({"classify", "--ring", "Z", "--fuzzy", "{1:<0>, 4/5:<4>, 3/5:<*>}"}));
  CHECK(variant["notions"]["D3"] == true);
  CHECK(variant["notions"]["D2"] == false);

  auto chi0 = json_of(run({"classify", "--ring", "Mat(2,Zn(2))", "--fuzzy", "{1:<[[0,0],[0,0]]>, 0:<*>}"}));
  CHECK(chi0["notions"]["PRIME_NEW"] == true);
  CHECK(chi0["notions"]["D4"] == false);
  CHECK(chi0["notions"]["D0"] == false);
  CHECK(chi0["notions"]["D0'"] == true);
  CHECK(chi0["commutative"] == false);
  CHECK(chi0["witnesses"]["D4"]["reason"] == "product");

  auto text = run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<2>, 0:<*>}", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("D4: true") != std::string::npos);

  // Invalid fuzzy ideals and constant ideals.
  auto bad = run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1/2:<2>, 1:<*>}"});
  CHECK(bad.code == cli::kInvalidFuzzy);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<*>}"}).code == cli::kConstant);
  CHECK(run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<2>, 0:<*>"}).code == cli::kParse);
  CHECK(run({"classify", "--ring", "Zn(6)"}).code == cli::kParse);
  CHECK(run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<2>, 0:<*>}", "--format", "dot"}).code == cli::kParse);

  // A palette refines the quantifier grid without changing verdicts.
  auto refined = json_of(run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<0>, 1/2:<2>, 0:<*>}", "--palette", "1/7, 5/7"}));
  auto plain = json_of(run({"classify", "--ring", "Zn(6)", "--fuzzy", "{1:<0>, 1/2:<2>, 0:<*>}"}));
  CHECK(refined["notions"] == plain["notions"]);
}

TEST_CASE("classify witnesses re-validate through classify") {
  auto r = json_of(run({"classify", "--ring", "Zn(4)", "--fuzzy", "{1:<0>, 0:<*>}"}));
  REQUIRE(r["notions"]["SD1"] == false);
  std::string witness = r["witnesses"]["SD1"]["fuzzy"][0];
  auto ring4 = ring("Zn(4)");
  auto i = fz(ring4, witness);
  auto p = fz(ring4, "{1:<0>, 0:<*>}");
  CHECK(leq(fuzzy_product(i, i), p));
  CHECK_FALSE(leq(i, p));
}

TEST_CASE("radical") {
  auto z = json_of(run({"radical", "--ring", "Z", "--fuzzy", "{1:<0>, 4/5:<4>, 3/5:<*>}"}));
  CHECK(z["frad"] == "{1: <0>, 4/5: <2>, 3/5: <*>}");
  CHECK(z["fixed_point"] == false);
  auto semi = json_of(run({"radical", "--ring", "Z", "--fuzzy", "{1:<0>, 4/5:<2>, 3/5:<*>}"}));
  CHECK(semi["fixed_point"] == true);
  CHECK(semi["frad"] == semi["fuzzy"]);
  auto z12 = json_of(run({"radical", "--ring", "Zn(12)", "--fuzzy", "{1:<4>, 0:<*>}"}));
  CHECK(z12["frad"] == "{1: <2>, 0: <*>}");
  auto exp = json_of(run({"radical", "--ring", "Zn(12)", "--fuzzy", "{1:<4>, 0:<*>}", "--experimental-ring-radical"}));
  CHECK(exp["experimental_ring_radical"] == true);
  CHECK_FALSE(z12.contains("experimental_ring_radical"));
  CHECK(run({"radical", "--ring", "Zn(12)", "--fuzzy", "{1:<*>}"}).code == cli::kConstant);
}

TEST_CASE("diagram") {
  auto m = run({"diagram", "--ring", "Mat(2,Zn(2))", "--corpus", "exhaustive"});
  REQUIRE(m.code == cli::kOk);
  auto mj = json_of(m);
  CHECK(mj["corpus_size"] == 10);
  CHECK(edge(mj, "D2 -> D4")["status"] == "counterexample");
  CHECK(edge(mj, "D2 -> D1")["status"] == "counterexample");
  CHECK(mj["violations"].empty());

  auto z = run({"diagram", "--ring", "Z", "--bound", "32", "--corpus", "exhaustive"});
  REQUIRE(z.code == cli::kOk);
  CHECK(edge(json_of(z), "D3 -> D2")["status"] == "counterexample");

  auto z6 = run({"diagram", "--ring", "Zn(6)", "--corpus", "exhaustive"});
  REQUIRE(z6.code == cli::kOk);
  auto z6j = json_of(z6);
  const auto& d2d4 = edge(z6j, "D2 -> D4");
  CHECK(d2d4["status"] == "implied");
  CHECK(d2d4["witness"].is_null());

  CHECK(run({"diagram", "--ring", "Zn(12)", "--cap", "10"}).code == cli::kResource);
  CHECK(run({"diagram", "--ring", "Zn(6)", "--corpus", "random"}).code == cli::kParse);
  CHECK(run({"diagram", "--ring", "Zn(6)", "--corpus", "sideways"}).code == cli::kParse);
}

TEST_CASE("reports are deterministic across worker counts and seeds") {
  auto a = run({"diagram", "--ring", "Tri(2,Zn(2))", "--jobs", "1"});
  auto b = run({"diagram", "--ring", "Tri(2,Zn(2))", "--jobs", "4"});
  CHECK(a.out == b.out);
  auto r1 = run({"diagram", "--ring", "Zn(12)", "--corpus", "random", "--seed", "9", "--cap", "40"});
  auto r2 = run({"diagram", "--ring", "Zn(12)", "--corpus", "random", "--seed", "9", "--cap", "40", "--jobs", "3"});
  REQUIRE(r1.code == cli::kOk);
  CHECK(r1.out == r2.out);
  CHECK(json_of(r1)["corpus_size"] == 40);
}

TEST_CASE("corpus cap from the environment") {
  setenv("FUZZIDEAL_CAP", "10", 1);
  auto capped = run({"diagram", "--ring", "Zn(12)"});
  auto flag = run({"diagram", "--ring", "Zn(12)", "--cap", "1000"});
  setenv("FUZZIDEAL_CAP", "ten", 1);
  auto garbage = run({"diagram", "--ring", "Zn(12)"});
  unsetenv("FUZZIDEAL_CAP");
  CHECK(capped.code == cli::kResource);
  CHECK(flag.code == cli::kOk);
  CHECK(garbage.code == cli::kParse);
}

TEST_CASE("check subcommands") {
  auto c = run({"check-charprime", "--ring", "Mat(2,Zn(2))", "--fuzzy", "{1:<[[0,0],[0,0]]>, 0:<*>}"});
  REQUIRE(c.code == cli::kOk);
  CHECK(json_of(c)["prime_new"] == true);
  CHECK(run({"check-charprime", "--ring", "Zn(12)"}).code == cli::kOk);

  auto i = run({"check-inter", "--ring", "Zn(6)", "--fuzzy", "{1:<0>, 0:<*>}"});
  REQUIRE(i.code == cli::kOk);
  CHECK(run({"check-inter", "--ring", "Zn(12)"}).code == cli::kOk);
  CHECK(run({"check-inter", "--ring", "Zn(12)", "--fuzzy", "{1:<4>, 0:<*>}"}).code == cli::kParse);

  auto f = run({"check-frad", "--ring", "Z", "--fuzzy", "{1:<0>, 4/5:<4>, 3/5:<*>}", "--bound", "32"});
  REQUIRE(f.code == cli::kOk);
  CHECK(json_of(f)["f3"] == "{1: <0>, 4/5: <2>, 3/5: <*>}");
  CHECK(run({"check-frad", "--ring", "Tri(2,Zn(2))"}).code == cli::kOk);
}

TEST_CASE("output files and usage errors") {
  auto path = std::filesystem::temp_directory_path() / "fuzzideal_cli_test.json";
  auto r = run({"ideals", "--ring", "Zn(6)", "--out", path.string()});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(Json::parse(body.str())["ideals"].size() == 4);
  std::filesystem::remove(path);

  CHECK(run({"ideals", "--ring", "Zn(6)", "--out", "/nonexistent/dir/x.json"}).code == cli::kResource);
  CHECK(run({}).code == cli::kParse);
  CHECK(run({"frobnicate"}).code == cli::kParse);
  CHECK(run({"ideals"}).code == cli::kParse);
  CHECK(run({"ideals", "--ring", "Zn(6)", "--bogus"}).code == cli::kParse);
  CHECK(run({"--help"}).code == cli::kOk);
}
