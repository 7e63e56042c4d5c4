#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "quot/catalog.hpp"
#include "quot/cli.hpp"
#include "quot/errors.hpp"
#include "quot/json_io.hpp"

using namespace quot;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string catalog(const std::vector<std::string>& args) {
  std::vector<std::string> full{"catalog"};
  full.insert(full.end(), args.begin(), args.end());
  const Run r = run(full);
  REQUIRE(r.code == 0);
  return r.out;
}

Cyclotomic random_cyclotomic(const CyclotomicField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5), exp(0, f.conductor() - 1), count(0, 4);
  std::vector<Cyclotomic::Term> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) terms.push_back({Integer(num(rng)), Integer(den(rng)), exp(rng)});
  return Cyclotomic::from_terms(f, terms);
}

fs::path scratch_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("quot-test-" + tag + "-" + std::to_string(std::random_device{}()));
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("cyclotomic JSON round trip") {
  std::mt19937 rng(7);
  for (int n : {1, 3, 4, 5, 12}) {
    const auto& f = CyclotomicField::get(n);
    for (int i = 0; i < 50; ++i) {
      const Cyclotomic a = random_cyclotomic(f, rng);
      CHECK(cyclotomic_from_json(to_json(a), f) == a);
      CHECK(cyclotomic_from_json(Json::parse(to_json(a).dump()), f) == a);
    }
  }
  const auto& f = CyclotomicField::get(4);
  CHECK(cyclotomic_from_json(Json(3), f) == Cyclotomic(3));
  CHECK(cyclotomic_from_json(Json("-2/6"), f) == Cyclotomic(Rational(-1, 3)));
  // integers past 64 bits travel as strings
  const Cyclotomic big = Cyclotomic(Rational(Integer("123456789012345678901234567890"))).bound_to(f);
  const Json jb = to_json(big);
  CHECK(jb[0][0].is_string());
  CHECK(cyclotomic_from_json(jb, f) == big);
  CHECK_THROWS_AS(cyclotomic_from_json(Json("x"), f), InputError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json::parse("[[1, 2]]"), f), InputError);
  CHECK_THROWS_AS(cyclotomic_from_json(Json("1/0"), f), InputError);
}

TEST_CASE("matrix JSON: nested and flat") {
  const auto& f = CyclotomicField::get(3);
  std::mt19937 rng(11);
  Matrix m(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m(r, c) = random_cyclotomic(f, rng);
  const Json nested = to_json(m);
  CHECK(matrix_from_json(nested, 2, f) == m);
  Json flat = Json::array();
  for (const auto& row : nested)
    for (const auto& e : row) flat.push_back(e);
  CHECK(matrix_from_json(flat, 2, f) == m);
  // a nested 1x1 and a flat 1x1 look alike
  Matrix one(1, 1);
  one(0, 0) = Cyclotomic(-1).bound_to(f);
  CHECK(matrix_from_json(Json::parse("[[-1]]"), 1, f) == one);
  CHECK(matrix_from_json(Json::parse("[-1]"), 1, f) == one);
  CHECK_THROWS_AS(matrix_from_json(Json::parse("[1, 2, 3]"), 2, f), InputError);
}

TEST_CASE("group description JSON") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const Json j = to_json(entry.description);
    const GroupDescription back = parse_group(j.dump(2));
    CHECK(back.conductor == entry.description.conductor);
    CHECK(back.dimension == entry.description.dimension);
    REQUIRE(back.generators.size() == entry.description.generators.size());
    for (std::size_t i = 0; i < back.generators.size(); ++i) CHECK(back.generators[i] == entry.description.generators[i]);
    CHECK(to_json(back) == j);
  }
  CHECK(parse_group(R"({"conductor": 1, "dimension": 2, "generators": []})").generators.size() == 1);
  CHECK_THROWS_AS(parse_group(R"({"conductor": 1, "dimension": 2})"), InputError);
  CHECK_THROWS_AS(parse_group(R"({"conductor": 0, "dimension": 2, "generators": []})"), InputError);
  CHECK_THROWS_AS(parse_group(R"({"conductor": 1, "dimension": 2, "generators": [], "faithful": false})"),
                  InputError);
  CHECK_THROWS_AS(parse_group("{"), InputError);
}

TEST_CASE("report JSON round trips") {
  for (const auto& d : {cuspidal_s3(), dihedral_gl2(2), cyclic_diagonal(4, {1, 2}), trivial_group(1)}) {
    const Json report = ladder_to_json(build_ladder(close_group(d)));
    CHECK(Json::parse(report.dump()) == report);
    CHECK(Json::parse(report.dump(2)) == report);
  }
}

TEST_CASE("catalog | analyze") {
  const Run a = run({"analyze", "-"}, catalog({"symmetric", "3"}));
  REQUIRE(a.code == 0);
  CHECK(a.err.empty());
  const Json j = Json::parse(a.out);
  CHECK(j["orders"]["G"] == 6);
  CHECK(j["orders"]["H"] == 6);
  CHECK(j["orders"]["H/H'"] == 2);
  CHECK(j["morphisms"][1]["orders"] == Json::array({2}));

  const Json t = Json::parse(run({"analyze", "-"}, catalog({"trivial", "2"})).out);
  CHECK(t["collapsed"] == true);
  CHECK(t["orbits"].empty());

  // the A_2 singularity: ab = c^3
  const Json a2 = Json::parse(run({"analyze", "-"}, catalog({"cyclic", "3", "1", "-1"})).out);
  CHECK(a2["orders"]["H"] == 1);
  CHECK(a2["coarsePresentation"]["relations"] == Json::array({"A0^3 - A1*A2"}));
  CHECK(a2["coarsePresentation"]["generators"] == Json::array({"x0*x1", "x0^3", "x1^3"}));
  // comma-separated weights are accepted too
  CHECK(catalog({"cyclic", "3", "1,-1"}) == catalog({"cyclic", "3", "1", "-1"}));

  const Run text = run({"analyze", "-", "--format", "text"}, catalog({"cuspidal-s3"}));
  REQUIRE(text.code == 0);
  CHECK(text.out.rfind("[V/G] --canonical--> [(V/H')/(G/H')] --root(e = 2)--> [(V/H)/(G/H)] --canonical--> V/G\n", 0) ==
        0);
}

TEST_CASE("catalog options") {
  const Json s = Json::parse(catalog({"symmetric", "3", "--rep", "standard"}));
  CHECK(s["dimension"] == 2);
  CHECK(Json::parse(catalog({"dihedral", "2", "--conductor", "8"}))["conductor"] == 8);
  CHECK(Json::parse(catalog({"cuspidal-s3"}))["conductor"] == 3);

  const fs::path dir = scratch_dir("product");
  std::ofstream(dir / "a.json") << catalog({"symmetric", "2", "--rep", "standard"});
  std::ofstream(dir / "b.json") << catalog({"cyclic", "3", "1", "-1"});
  const Run p = run({"catalog", "product", (dir / "a.json").string(), "-"}, catalog({"cyclic", "3", "1", "-1"}));
  REQUIRE(p.code == 0);
  const Json pj = Json::parse(p.out);
  CHECK(pj["dimension"] == 3);
  CHECK(pj["conductor"] == 3);
  CHECK(p.out == catalog({"product", (dir / "a.json").string(), (dir / "b.json").string()}));
  fs::remove_all(dir);
}

TEST_CASE("subcommands") {
  const std::string s3 = catalog({"symmetric", "3"});
  const Json m = Json::parse(run({"molien", "-", "--molien-degree", "6"}, s3).out);
  CHECK(m["expansion"] == Json::array({1, 1, 2, 3, 4, 5, 7}));
  const Json inv = Json::parse(run({"invariants", "-"}, s3).out);
  CHECK(inv["degrees"] == Json::array({1, 2, 3}));
  CHECK(inv["reflectionGroup"] == true);
  const Json rel = Json::parse(run({"relations", "-"}, catalog({"cyclic", "2", "1", "-1"})).out);
  CHECK(rel["relations"].size() == 1);
  CHECK(rel["relationDegrees"] == Json::array({4}));
  const Json refl = Json::parse(run({"reflections", "-"}, catalog({"dihedral", "2"})).out);
  CHECK(refl["orders"]["H'"] == 2);
  CHECK(refl["orbits"].size() == 2);
  CHECK(refl["abelianization"]["ok"] == true);
  CHECK(refl["hPrimeNoPseudoreflections"] == true);
  for (const char* sub : {"molien", "invariants", "relations", "reflections"}) {
    CAPTURE(sub);
    CHECK(run({sub, "-", "--format", "text"}, s3).code == 0);
  }
}

TEST_CASE("exit codes and structured errors") {
  auto kind = [](const Run& r) { return Json::parse(r.err)["error"]["kind"].get<std::string>(); };
  const Run bad_json = run({"analyze", "-"}, "{not json");
  CHECK(bad_json.code == 2);
  CHECK(kind(bad_json) == "input");
  CHECK(bad_json.out.empty());
  CHECK(run({"analyze", "-"}, R"({"conductor": 1, "dimension": 1, "generators": [], "faithful": false})").code == 2);
  CHECK(run({"analyze", "/nonexistent/group.json"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"analyze", "-", "--format", "xml"}, catalog({"trivial", "1"})).code == 2);
  CHECK(run({"analyze", "-", "--molien-degree", "0"}, catalog({"trivial", "1"})).code == 2);
  CHECK(run({"catalog", "symmetric", "9"}).code == 2);
  CHECK(run({"catalog", "nonsense"}).code == 2);
  CHECK(run({"catalog", "symmetric", "3", "--rep", "other"}).code == 2);

  const Run too_big = run({"analyze", "-", "--max-order", "10"}, catalog({"symmetric", "4"}));
  CHECK(too_big.code == 3);
  CHECK(kind(too_big) == "bound");
  // an infinite group: a shear
  CHECK(run({"analyze", "-"}, R"({"conductor": 1, "dimension": 2, "generators": [[[1, 1], [0, 1]]]})").code == 3);
  const Run bound = run({"analyze", "-", "--molien-degree", "2"}, catalog({"cyclic", "4", "1", "2"}));
  CHECK(bound.code == 3);

  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("determinism") {
  const std::string d8 = catalog({"dihedral", "2"});
  for (const char* fmt : {"json", "text"}) {
    const Run a = run({"analyze", "-", "--format", fmt}, d8);
    const Run b = run({"analyze", "-", "--format", fmt}, d8);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("verify-fixtures") {
  const fs::path src = QUOT_TEST_FIXTURE_DIR;
  const Run all = run({"verify-fixtures", "--fixture-dir", src.string()});
  CHECK(all.code == 0);
  const Json report = Json::parse(all.out);
  CHECK(report["failed"] == 0);
  CHECK(report["total"].get<int>() >= 10);

  // a scratch copy with one golden tampered and one expectation wrong
  const fs::path dir = scratch_dir("fixtures");
  Json manifest = Json::parse(std::ifstream(src / "manifest.json"));
  Json picked = Json::array();
  for (const auto& fx : manifest["fixtures"]) {
    const std::string name = fx["name"];
    if (name != "a1" && name != "trivial-2" && name != "symmetric-2-standard") continue;
    fs::copy_file(src / fx["group"].get<std::string>(), dir / fx["group"].get<std::string>());
    fs::copy_file(src / fx["expected"].get<std::string>(), dir / fx["expected"].get<std::string>());
    picked.push_back(fx);
  }
  REQUIRE(picked.size() == 3);
  picked[1]["expect"]["/orders/G"] = 3;
  std::ofstream(dir / "manifest.json") << Json{{"fixtures", picked}}.dump(2);
  {
    const fs::path golden = dir / picked[0]["expected"].get<std::string>();
    Json g = Json::parse(std::ifstream(golden));
    g["orders"]["G"] = 99;
    std::ofstream(golden) << g.dump(2);
  }
  const auto outcomes = verify_fixtures(dir.string());
  REQUIRE(outcomes.size() == 3);
  CHECK_FALSE(outcomes[0].passed());
  CHECK_FALSE(outcomes[0].golden_match);
  CHECK(outcomes[0].golden_diff == "/orders/G");
  CHECK_FALSE(outcomes[1].passed());
  CHECK(outcomes[1].golden_match);
  REQUIRE(outcomes[1].semantic_failures.size() == 1);
  CHECK(outcomes[1].semantic_failures[0].find("/orders/G") == 0);
  CHECK(outcomes[2].passed());

  const Run failing = run({"verify-fixtures", "--fixture-dir", dir.string()});
  CHECK(failing.code == 4);
  CHECK(Json::parse(failing.out)["failed"] == 2);

  // rewriting the goldens repairs the tampered one, not the wrong expectation
  CHECK(run({"verify-fixtures", "--fixture-dir", dir.string(), "--write-goldens"}).code == 4);
  const auto after = verify_fixtures(dir.string());
  CHECK(after[0].passed());
  CHECK_FALSE(after[1].passed());
  fs::remove_all(dir);

  CHECK(run({"verify-fixtures", "--fixture-dir", "/nonexistent"}).code == 2);
}
