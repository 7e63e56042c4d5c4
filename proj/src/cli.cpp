#include "quot/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "quot/errors.hpp"

#ifndef QUOT_FIXTURE_DIR
#define QUOT_FIXTURE_DIR "fixtures"
#endif

namespace quot {

namespace {

Json poly_list(const std::vector<Poly>& v, const std::string& prefix = "x") {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string(prefix));
  return out;
}

Json generators_json(const InvariantGenerators& gens) {
  return {{"generators", poly_list(gens.gens)},
          {"degrees", gens.degrees},
          {"certifiedThrough", gens.certified_through},
          {"complete", gens.complete}};
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw InputError("cannot read \"" + path + "\"");
  return read_all(f);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string error_kind(int code) {
  switch (code) {
    case 2:
      return "input";
    case 3:
      return "bound";
    default:
      return "internal";
  }
}

void emit_error(std::ostream& err, int code, const std::string& message) {
  Json j = {{"error", {{"kind", error_kind(code)}, {"code", code}, {"message", message}}}};
  err << j.dump() << "\n";
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + " must be an integer, got \"" + s + "\"");
  }
}

// "symmetric 3", "cyclic 3 1 -1" (or "cyclic 3 1,-1"), ...
GroupDescription catalog_group(const std::string& name, const std::vector<std::string>& params, const std::string& rep,
                               int conductor, std::istream& in) {
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
      throw InputError("catalog " + name + " takes " +
                       (lo == hi ? std::to_string(lo) : std::to_string(lo) + "+") + " parameter(s)");
    }
  };
  if (rep != "full" && rep != "standard") throw InputError("--rep must be full or standard");
  if (conductor < 0) throw InputError("--conductor must be positive");
  if (name == "symmetric") {
    need(1, 1);
    const auto r = rep == "full" ? SymmetricRep::Full : SymmetricRep::Standard;
    return symmetric_group(to_int(params[0], "n"), r, conductor == 0 ? 1 : conductor);
  }
  if (name == "cyclic" || name == "cyclic-diagonal") {
    need(2, static_cast<std::size_t>(-1));
    std::vector<int> weights;
    for (std::size_t i = 1; i < params.size(); ++i) {
      std::stringstream ss(params[i]);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) weights.push_back(to_int(item, "weight"));
      }
    }
    return cyclic_diagonal(to_int(params[0], "m"), weights, conductor);
  }
  if (name == "dihedral") {
    need(1, 1);
    return dihedral_gl2(to_int(params[0], "m"), conductor);
  }
  if (name == "cuspidal-s3") {
    need(0, 0);
    return cuspidal_s3(conductor == 0 ? 3 : conductor);
  }
  if (name == "trivial") {
    need(1, 1);
    return trivial_group(to_int(params[0], "n"), conductor == 0 ? 1 : conductor);
  }
  if (name == "product") {
    need(2, 2);
    if (params[0] == "-" && params[1] == "-") throw InputError("only one product factor can come from standard input");
    return direct_product(parse_group(read_input(params[0], in)), parse_group(read_input(params[1], in)));
  }
  throw InputError("unknown catalog group \"" + name + "\"");
}

std::string molien_text(const Json& j) {
  std::ostringstream os;
  os << "Molien(t) = (" << j["numerator"].get<std::string>() << ") / (" << j["denominator"].get<std::string>()
     << ")\ncoefficients:";
  for (const auto& c : j["expansion"]) os << " " << c.get<long>();
  os << "\n";
  return os.str();
}

std::string generators_text(const Json& j) {
  std::ostringstream os;
  const auto& gens = j["generators"];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    os << "A" << i << " = " << gens[i].get<std::string>() << "  (degree " << j["degrees"][i].get<int>() << ")\n";
  }
  os << (j["complete"].get<bool>() ? "complete" : "certified through degree " + std::to_string(j["certifiedThrough"].get<int>()))
     << "\n";
  if (j.contains("relations")) {
    if (j["relations"].empty()) os << "no relations through weighted degree " << j["relationDegreeBound"].get<int>() << "\n";
    for (const auto& r : j["relations"]) os << r.get<std::string>() << " = 0\n";
  }
  return os.str();
}

std::string reflections_text(const Json& j) {
  std::ostringstream os;
  os << "|G| = " << j["orders"]["G"].get<int>() << ", |H| = " << j["orders"]["H"].get<int>()
     << ", |H'| = " << j["orders"]["H'"].get<int>() << "\n";
  os << "pseudoreflections: " << j["pseudoreflections"].size() << "\n";
  for (const auto& o : j["orbits"]) {
    os << "orbit " << o["representative"].get<std::string>() << ": size " << o["orbitSize"].get<int>()
       << ", e = " << o["e"].get<int>() << ", f = " << o["f"].get<std::string>() << "\n";
  }
  os << "H/H' -> prod mu_e: " << (j["abelianization"]["ok"].get<bool>() ? "isomorphism" : "NOT an isomorphism") << "\n";
  return os.str();
}

std::string fixtures_text(const std::vector<FixtureOutcome>& outcomes) {
  std::ostringstream os;
  for (const auto& o : outcomes) {
    os << (o.passed() ? "PASS " : "FAIL ") << o.name;
    if (o.golden_missing) os << "  golden missing";
    else if (!o.golden_match) os << "  golden differs at " << o.golden_diff;
    for (const auto& s : o.semantic_failures) os << "  " << s;
    for (const auto& c : o.failed_checks) os << "  check " << c << " failed";
    os << "\n";
  }
  return os.str();
}

struct Options {
  AnalysisConfig cfg;
  int molien_degree = 12;
  int relation_bound = 0;
  long max_order = static_cast<long>(kDefaultMaxOrder);
  std::string format = "json";
  bool no_linearize = false;
  std::string input = "-";
};

void add_analysis_options(CLI::App* sub, Options& o) {
  sub->add_option("input", o.input, "group description JSON file, or - for standard input");
  sub->add_option("--molien-degree", o.molien_degree, "expansion and certification degree (default 12)");
  sub->add_option("--max-relation-degree", o.relation_bound,
                  "weighted degree bound for relations (default max(12, 2 * largest generator degree))");
  sub->add_option("--max-order", o.max_order, "largest group order closure may reach (default 2000)");
  sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_flag("--no-linearize", o.no_linearize, "keep the induced quotient actions as found");
}

AnalysisConfig finish_config(const Options& o) {
  if (o.molien_degree < 1) throw InputError("--molien-degree must be positive");
  if (o.relation_bound < 0) throw InputError("--max-relation-degree must be positive");
  if (o.max_order < 1) throw InputError("--max-order must be positive");
  AnalysisConfig cfg;
  cfg.molien_degree = o.molien_degree;
  cfg.relation_degree_bound = o.relation_bound;
  cfg.max_group_order = static_cast<std::size_t>(o.max_order);
  cfg.linearize = !o.no_linearize;
  return cfg;
}

Json golden_config_json(const Json& fixture) { return fixture.contains("config") ? fixture["config"] : Json::object(); }

AnalysisConfig fixture_config(const Json& fixture) {
  AnalysisConfig cfg;
  const Json c = golden_config_json(fixture);
  if (c.contains("molienDegree")) cfg.molien_degree = c["molienDegree"].get<int>();
  if (c.contains("relationDegreeBound")) cfg.relation_degree_bound = c["relationDegreeBound"].get<int>();
  if (c.contains("linearize")) cfg.linearize = c["linearize"].get<bool>();
  return cfg;
}

Json read_json_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  if (!f) throw InputError("cannot read \"" + p.string() + "\"");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in \"" + p.string() + "\": " + e.what());
  }
}

}  // namespace

std::string default_fixture_dir() { return QUOT_FIXTURE_DIR; }

Json molien_report(const Subgroup& g, int degree) {
  const MolienSeries m = molien(g);
  return {{"order", g.order()},
          {"numerator", upoly_to_string(m.numerator)},
          {"denominator", upoly_to_string(m.denominator)},
          {"expansion", m.expansion(degree)}};
}

Json invariants_report(const Subgroup& g, const AnalysisConfig& cfg) {
  const InvariantGenerators inv = invariant_generators(g, cfg);
  Json out = generators_json(inv);
  out["reflectionGroup"] = reflection_subgroup(g.parent_ptr()).order() == g.order();
  return out;
}

Json relations_report(const Subgroup& g, const AnalysisConfig& cfg) {
  const InvariantGenerators inv = invariant_generators(g, cfg);
  const int bound = relation_degree_bound(cfg, inv.degrees);
  const RelationSet rs = find_relations(inv.gens, g.parent().dimension(), bound);
  Json out = generators_json(inv);
  out["relations"] = poly_list(rs.relations, "A");
  out["relationDegrees"] = rs.weighted_degrees;
  out["relationDegreeBound"] = bound;
  return out;
}

Json reflections_report(const Subgroup& g) {
  const auto prs = find_pseudoreflections(g.parent());
  const Subgroup h = reflection_subgroup(g.parent_ptr(), prs);
  const Subgroup hp = commutator_subgroup(h);
  const auto orbits = hyperplane_orbits(h, hp, prs);
  const auto g_orbits = fuse_orbits(g, orbits);
  const auto abel = abelianization_isomorphism(h, hp, orbits);

  Json pr = Json::array();
  for (const auto& r : prs) {
    pr.push_back({{"element", r.element},
                  {"order", r.order},
                  {"determinant", to_json(r.determinant)},
                  {"hyperplane", r.hyperplane.to_string()}});
  }
  Json orb = Json::array();
  for (const auto& o : orbits) {
    Json table = Json::array();
    for (const auto& [rep, v] : o.chi_table) table.push_back(Json::array({rep, to_json(v)}));
    orb.push_back({{"representative", o.representative.to_string()},
                   {"orbitSize", o.orbit.size()},
                   {"e", o.e},
                   {"f", o.f.to_string()},
                   {"chiTable", std::move(table)},
                   {"primitive", o.primitive.element},
                   {"characterViolations", character_values_check(o, h, prs).violations}});
  }
  bool hp_clean = true;
  for (int k : hp.members()) hp_clean = hp_clean && !is_pseudoreflection(g.parent().element(k));
  return {{"orders", {{"G", g.order()}, {"H", h.order()}, {"H'", hp.order()}}},
          {"pseudoreflections", std::move(pr)},
          {"orbits", std::move(orb)},
          {"gOrbits", g_orbits},
          {"hPrimeNoPseudoreflections", hp_clean},
          {"abelianization",
           {{"quotientOrder", abel.quotient_order}, {"productOfE", abel.product_of_e}, {"ok", abel.ok()}}}};
}

std::vector<FixtureOutcome> verify_fixtures(const std::string& dir, bool write_goldens) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  const Json manifest = read_json_file(root / "manifest.json");
  if (!manifest.contains("fixtures") || !manifest["fixtures"].is_array()) {
    throw InputError("manifest.json must hold a \"fixtures\" array");
  }
  std::vector<FixtureOutcome> outcomes;
  for (const auto& fx : manifest["fixtures"]) {
    FixtureOutcome o;
    o.name = fx.at("name").get<std::string>();
    const GroupDescription d = group_from_json(read_json_file(root / fx.at("group").get<std::string>()));
    const AnalysisConfig cfg = fixture_config(fx);
    const FactorizationLadder l = build_ladder(close_group(d, cfg.max_group_order), cfg);
    const Json report = ladder_to_json(l);
    const fs::path golden = root / fx.at("expected").get<std::string>();
    if (write_goldens) {
      std::ofstream f(golden);
      if (!f) throw InputError("cannot write \"" + golden.string() + "\"");
      f << report.dump(2) << "\n";
    }
    if (!fs::exists(golden)) {
      o.golden_missing = true;
    } else {
      const Json expected = read_json_file(golden);
      o.golden_match = expected == report;
      if (!o.golden_match) {
        const Json patch = Json::diff(expected, report);
        o.golden_diff = patch.empty() ? "/" : patch[0].value("path", "/");
      }
    }
    if (fx.contains("expect")) {
      for (const auto& [pointer, value] : fx["expect"].items()) {
        const Json::json_pointer ptr(pointer);
        if (!report.contains(ptr)) {
          o.semantic_failures.push_back(pointer + " missing");
        } else if (report.at(ptr) != value) {
          o.semantic_failures.push_back(pointer + " is " + report.at(ptr).dump() + ", expected " + value.dump());
        }
      }
    }
    o.failed_checks = l.failed_checks();
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

Json fixtures_to_json(const std::vector<FixtureOutcome>& outcomes) {
  Json list = Json::array();
  int passed = 0;
  for (const auto& o : outcomes) {
    passed += o.passed() ? 1 : 0;
    Json golden = o.golden_missing ? Json("missing") : Json(o.golden_match ? "match" : "differs");
    Json entry = {{"name", o.name},
                  {"passed", o.passed()},
                  {"golden", golden},
                  {"semanticFailures", o.semantic_failures},
                  {"failedChecks", o.failed_checks}};
    if (!o.golden_match && !o.golden_missing) entry["goldenDiff"] = o.golden_diff;
    list.push_back(std::move(entry));
  }
  const int total = static_cast<int>(outcomes.size());
  return {{"fixtures", std::move(list)}, {"passed", passed}, {"failed", total - passed}, {"total", total}};
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant theory of finite linear groups: the ladder [V/G] -> [(V/H')/(G/H')] -> "
               "[(V/H)/(G/H)] -> V/G, with H the reflection subgroup and H' = [H, H].",
               "quot"};
  app.require_subcommand(1, 1);

  std::string cat_name;
  std::vector<std::string> cat_params;
  std::string cat_rep = "full";
  int cat_conductor = 0;
  auto* cat = app.add_subcommand("catalog",
                                 "print a catalog group description:\n"
                                 "  symmetric n          S_n, 2 <= n <= 5 (--rep full or standard)\n"
                                 "  cyclic m w1 w2 ...   <diag(zeta_m^w1, ...)>\n"
                                 "  dihedral m           D_4m of order 4m: <diag(zeta_2m, zeta_2m^-1), swap>;"
                                 " m = 2 is D8\n"
                                 "  cuspidal-s3          S_3 as <diag(zeta_3, zeta_3^2), swap>\n"
                                 "  trivial n            the trivial group on k^n\n"
                                 "  product A.json B.json  block-diagonal direct product");
  cat->add_option("name", cat_name, "catalog group")->required();
  cat->add_option("params", cat_params, "parameters");
  cat->add_option("--rep", cat_rep, "full or standard, for symmetric");
  cat->add_option("--conductor", cat_conductor, "field Q(zeta_N) to work over");

  Options analyze_o, molien_o, inv_o, rel_o, refl_o;
  auto* analyze = app.add_subcommand("analyze", "full factorization report");
  add_analysis_options(analyze, analyze_o);
  auto* mol = app.add_subcommand("molien", "Molien series of G");
  add_analysis_options(mol, molien_o);
  auto* inv = app.add_subcommand("invariants", "generators of k[V]^G");
  add_analysis_options(inv, inv_o);
  auto* rel = app.add_subcommand("relations", "generators of k[V]^G and their relations");
  add_analysis_options(rel, rel_o);
  auto* refl = app.add_subcommand("reflections", "pseudoreflections, H, H', hyperplane orbits and characters");
  add_analysis_options(refl, refl_o);

  std::string fixture_dir = default_fixture_dir();
  std::string fixture_format = "json";
  bool write_goldens = false;
  auto* vf = app.add_subcommand("verify-fixtures", "run the pinned example suite against its golden reports");
  vf->add_option("--fixture-dir", fixture_dir, "directory holding manifest.json");
  vf->add_option("--format", fixture_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  vf->add_flag("--write-goldens", write_goldens, "rewrite the expected reports before comparing");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, 2, e.what());
    return 2;
  }

  try {
    if (cat->parsed()) {
      emit(out, to_json(catalog_group(cat_name, cat_params, cat_rep, cat_conductor, in)));
      return 0;
    }
    if (vf->parsed()) {
      const auto outcomes = verify_fixtures(fixture_dir, write_goldens);
      if (fixture_format == "text") out << fixtures_text(outcomes);
      else emit(out, fixtures_to_json(outcomes));
      bool all = true;
      for (const auto& o : outcomes) all = all && o.passed();
      if (!all) {
        emit_error(err, 4, "fixture verification failed");
        return 4;
      }
      return 0;
    }

    const std::pair<CLI::App*, Options*> subs[] = {
        {analyze, &analyze_o}, {mol, &molien_o}, {inv, &inv_o}, {rel, &rel_o}, {refl, &refl_o}};
    for (const auto& [sub, o] : subs) {
      if (!sub->parsed()) continue;
      const AnalysisConfig cfg = finish_config(*o);
      const GroupDescription d = parse_group(read_input(o->input, in));
      const GroupPtr group = close_group(d, cfg.max_group_order);
      const Subgroup whole = Subgroup::whole(group);
      const bool text = o->format == "text";
      if (sub == analyze) {
        const FactorizationLadder l = build_ladder(group, cfg);
        if (text) out << ladder_to_text(l);
        else emit(out, ladder_to_json(l));
        if (!l.ok()) {
          std::string failed;
          for (const auto& c : l.failed_checks()) failed += (failed.empty() ? "" : ", ") + c;
          emit_error(err, 4, "failed checks: " + failed);
          return 4;
        }
      } else if (sub == mol) {
        const Json j = molien_report(whole, cfg.molien_degree);
        if (text) out << molien_text(j);
        else emit(out, j);
      } else if (sub == inv || sub == rel) {
        const Json j = sub == inv ? invariants_report(whole, cfg) : relations_report(whole, cfg);
        if (text) out << generators_text(j);
        else emit(out, j);
      } else {
        const Json j = reflections_report(whole);
        if (text) out << reflections_text(j);
        else emit(out, j);
      }
      return 0;
    }
    emit_error(err, 2, "no subcommand");
    return 2;
  } catch (const InputError& e) {
    emit_error(err, 2, e.what());
    return 2;
  } catch (const BoundError& e) {
    emit_error(err, 3, e.what());
    return 3;
  } catch (const Json::exception& e) {
    emit_error(err, 2, e.what());
    return 2;
  } catch (const std::exception& e) {
    emit_error(err, 4, e.what());
    return 4;
  }
}

}  // namespace quot
