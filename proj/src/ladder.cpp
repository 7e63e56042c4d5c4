#include "quot/ladder.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quot/errors.hpp"
#include "quot/graded.hpp"
#include "quot/linalg.hpp"

namespace quot {

namespace {

std::vector<Poly> linear_images(const Matrix& m) {
  const int r = static_cast<int>(m.rows());
  std::vector<Poly> out;
  for (int j = 0; j < r; ++j) {
    Poly p(r);
    for (int k = 0; k < r; ++k) p += Poly::variable(r, k, m(k, j));
    out.push_back(std::move(p));
  }
  return out;
}

Matrix matrix_of_linear_images(const std::vector<Poly>& images) {
  const int r = static_cast<int>(images.size());
  Matrix m = Matrix::Constant(r, r, Cyclotomic(0));
  for (int j = 0; j < r; ++j) {
    for (const auto& [e, c] : images[static_cast<std::size_t>(j)].terms()) {
      const auto k = std::find(e.begin(), e.end(), 1) - e.begin();
      m(k, j) = c;
    }
  }
  return m;
}

// Homomorphism, reproduction and pseudoreflection checks.
void finish(QuotientAction& qa, const Subgroup& g, const CosetDecomposition& cd, PolyAction& action) {
  const MatrixGroup& parent = g.parent();
  const std::size_t r = qa.generators.size();
  const int q = qa.order;

  qa.reproduced = true;
  for (int c = 0; c < q; ++c) {
    for (std::size_t j = 0; j < r; ++j) {
      const Poly moved = action.act(qa.representatives[static_cast<std::size_t>(c)], qa.generators[j]);
      if (!(substitute(qa.images[static_cast<std::size_t>(c)][j], qa.generators) == moved)) qa.reproduced = false;
    }
  }

  qa.homomorphism = true;
  for (int a = 0; a < q && qa.homomorphism; ++a) {
    for (int b = 0; b < q && qa.homomorphism; ++b) {
      const int ab = cd.multiply(parent, a, b);
      if (!qa.matrices.empty()) {
        const Matrix prod = qa.matrices[static_cast<std::size_t>(a)] * qa.matrices[static_cast<std::size_t>(b)];
        if (!matrices_equal(prod, qa.matrices[static_cast<std::size_t>(ab)])) qa.homomorphism = false;
        continue;
      }
      for (std::size_t j = 0; j < r; ++j) {
        const Poly composed = substitute(qa.images[static_cast<std::size_t>(b)][j], qa.images[static_cast<std::size_t>(a)]);
        if (!(substitute(composed, qa.generators) == substitute(qa.images[static_cast<std::size_t>(ab)][j], qa.generators))) {
          qa.homomorphism = false;
        }
      }
    }
  }

  qa.pseudoreflection_cosets.clear();
  qa.faithful = !qa.matrices.empty();
  for (int c = 1; c < q && !qa.matrices.empty(); ++c) {
    const Matrix& m = qa.matrices[static_cast<std::size_t>(c)];
    if (r > 0 && is_pseudoreflection(m)) qa.pseudoreflection_cosets.push_back(c);
    if (r == 0 || matrices_equal(m, identity_matrix(static_cast<int>(r), parent.field()))) qa.faithful = false;
  }
}

bool relations_vanish(const RelationSet& rs, const std::vector<Poly>& gens) {
  return std::all_of(rs.relations.begin(), rs.relations.end(),
                     [&](const Poly& r) { return substitute(r, gens).is_zero(); });
}

}  // namespace

int relation_degree_bound(const AnalysisConfig& cfg, const std::vector<int>& degrees) {
  if (cfg.relation_degree_bound > 0) return cfg.relation_degree_bound;
  const int top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  return std::max(12, 2 * top);
}

InvariantGenerators invariant_generators(const Subgroup& g, const AnalysisConfig& cfg) {
  if (reflection_subgroup(g.parent_ptr()).order() == g.order()) return fundamental_invariants(g);
  return general_invariant_generators(g, std::min(g.order(), cfg.molien_degree));
}

QuotientAction induced_action(const Subgroup& g, const Subgroup& n, const std::vector<Poly>& gens) {
  const CosetDecomposition cd = coset_decomposition(g, n, true);
  const int nv = g.parent().dimension();
  QuotientAction qa;
  qa.order = cd.size();
  qa.representatives = cd.representatives;
  qa.generators = gens;
  for (const auto& p : gens) qa.degrees.push_back(p.degree());

  PolyAction action(g.parent_ptr());
  SubalgebraProducts sp(gens, nv);
  qa.linear = true;
  for (int rep : qa.representatives) {
    std::vector<Poly> row;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      auto e = express_in_generators(sp, action.act(rep, gens[j]));
      if (!e) {
        throw InternalError("image of generator " + std::to_string(j) + " under element " + std::to_string(rep) +
                            " is not in the generator subalgebra");
      }
      for (const auto& [ex, c] : e->terms()) {
        if (total_degree(ex) != 1) qa.linear = false;
      }
      row.push_back(std::move(*e));
    }
    qa.images.push_back(std::move(row));
  }
  if (qa.linear) {
    for (const auto& row : qa.images) qa.matrices.push_back(matrix_of_linear_images(row));
  }
  finish(qa, g, cd, action);
  return qa;
}

QuotientAction linearize_quotient_action(const QuotientAction& qa, const Subgroup& g, const Subgroup& n) {
  const CosetDecomposition cd = coset_decomposition(g, n, true);
  const MatrixGroup& parent = g.parent();
  const int nv = parent.dimension();
  PolyAction action(g.parent_ptr());

  std::map<int, std::vector<Poly>> by_degree;
  for (std::size_t j = 0; j < qa.generators.size(); ++j) by_degree[qa.degrees[j]].push_back(qa.generators[j]);

  QuotientAction out;
  out.group = qa.group;
  out.space = qa.space;
  out.order = qa.order;
  out.representatives = qa.representatives;
  out.linear = true;
  out.linearized = true;

  std::vector<std::pair<int, int>> blocks;  // (start, size) per degree
  for (const auto& [d, cur] : by_degree) {
    const MonomialBasis basis(nv, d);
    SubalgebraProducts lower(out.generators, nv);
    const Matrix dec = lower.graded_piece_rows(d);
    const Matrix c = basis.to_rows(cur);
    const Eigen::Index dd = dec.rows();
    const Eigen::Index k = c.rows();
    const Eigen::Index w = dd + k;
    Matrix b(w, basis.size());
    b.topRows(dd) = dec;
    b.bottomRows(k) = c;
    if (rank<Cyclotomic>(b) != w) {
      throw InternalError("degree " + std::to_string(d) + " generators are not independent of the decomposables");
    }
    const Matrix bt = b.transpose();

    // pi projects onto the decomposables along the chosen generators
    Matrix pi = Matrix::Constant(w, w, Cyclotomic(0));
    for (Eigen::Index i = 0; i < dd; ++i) pi(i, i) = Cyclotomic(1);
    Matrix avg = Matrix::Constant(w, w, Cyclotomic(0));
    for (int rep : out.representatives) {
      Matrix r(w, w);
      for (Eigen::Index i = 0; i < w; ++i) {
        const Poly moved = action.act(rep, basis.from_row(b.row(i)));
        const auto x = solve<Cyclotomic>(bt, Vector(basis.to_row(moved).transpose()));
        if (!x) throw InternalError("degree " + std::to_string(d) + " invariants are not stable under the quotient");
        r.col(i) = *x;
      }
      avg += r * pi * inverse<Cyclotomic>(r);
    }
    avg *= Cyclotomic(Rational(1, out.order));

    const Matrix complement = Matrix::Identity(w, w) - avg;
    Matrix fresh(k, basis.size());
    for (Eigen::Index j = 0; j < k; ++j) fresh.row(j) = complement.col(dd + j).transpose() * b;
    fresh = row_space_basis<Cyclotomic>(std::move(fresh));
    if (fresh.rows() != k) throw InternalError("averaged complement lost rank in degree " + std::to_string(d));

    blocks.emplace_back(static_cast<int>(out.generators.size()), static_cast<int>(k));
    for (auto& p : basis.from_rows(fresh)) {
      out.generators.push_back(std::move(p));
      out.degrees.push_back(d);
    }
  }

  const int r = static_cast<int>(out.generators.size());
  for (int rep : out.representatives) {
    Matrix m = Matrix::Constant(r, r, Cyclotomic(0));
    for (const auto& [start, size] : blocks) {
      const int d = out.degrees[static_cast<std::size_t>(start)];
      const MonomialBasis basis(nv, d);
      const std::vector<Poly> block(out.generators.begin() + start, out.generators.begin() + start + size);
      const Matrix bt = basis.to_rows(block).transpose();
      for (int j = start; j < start + size; ++j) {
        const Poly moved = action.act(rep, out.generators[static_cast<std::size_t>(j)]);
        const auto x = solve<Cyclotomic>(bt, Vector(basis.to_row(moved).transpose()));
        if (!x) throw InternalError("averaged complement is not stable in degree " + std::to_string(d));
        for (int i = 0; i < size; ++i) m(start + i, j) = (*x)(i);
      }
    }
    out.images.push_back(linear_images(m));
    out.matrices.push_back(std::move(m));
  }
  finish(out, g, cd, action);
  return out;
}

std::vector<RamificationEntry> ramification_image(const Subgroup& g, const std::vector<HyperplaneOrbit>& orbits,
                                                  const std::vector<std::vector<int>>& g_orbits,
                                                  const InvariantGenerators& coarse) {
  const int nv = g.parent().dimension();
  PolyAction action(g.parent_ptr());
  SubalgebraProducts sp(coarse.gens, nv);
  std::vector<RamificationEntry> out;
  for (const auto& fused : g_orbits) {
    RamificationEntry entry;
    entry.h_orbits = fused;
    entry.e = orbits[static_cast<std::size_t>(fused.front())].e;
    entry.divisor = Poly::constant(nv, Cyclotomic(1));
    for (int i : fused) {
      if (orbits[static_cast<std::size_t>(i)].e != entry.e) {
        throw InternalError("ramification degree is not constant on a G-orbit of hyperplanes");
      }
      entry.divisor = entry.divisor * orbits[static_cast<std::size_t>(i)].f;
    }

    int k = 1;
    for (int x : g.generators()) {
      const Poly moved = action.act(x, entry.divisor);
      const Cyclotomic lambda = moved.coeff(entry.divisor.leading_exponent()) / entry.divisor.leading_coefficient();
      if (!(moved == entry.divisor * lambda)) throw InternalError("hyperplane G-orbit product is not semi-invariant");
      const auto ord = lambda.root_of_unity_order();
      if (!ord) throw InternalError("G acts on a hyperplane product by a non-root of unity");
      k = std::lcm(k, *ord);
    }
    entry.power = k;

    const Poly target = entry.divisor.pow(k);
    const int deg = target.degree();
    if (!coarse.complete && deg > coarse.certified_through) {
      throw BoundError("ramification image needs degree " + std::to_string(deg) +
                       " but the coarse generators are certified only through degree " +
                       std::to_string(coarse.certified_through) + "; raise --molien-degree");
    }
    auto e = express_in_generators(sp, target);
    if (!e) throw InternalError("invariant power of a hyperplane product is not in the coarse generators");
    entry.image = std::move(*e);
    entry.verified = substitute(entry.image, coarse.gens) == target;
    out.push_back(std::move(entry));
  }
  return out;
}

bool FactorizationLadder::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

std::vector<std::string> FactorizationLadder::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, value] : checks) {
    if (!value) out.push_back(name);
  }
  return out;
}

FactorizationLadder build_ladder(const GroupPtr& group, const AnalysisConfig& cfg) {
  if (cfg.molien_degree < 1) throw InputError("molien degree must be positive");
  if (cfg.relation_degree_bound < 0) throw InputError("relation degree bound must be positive");
  const int n = group->dimension();
  FactorizationLadder l;
  l.group = group;
  l.g = Subgroup::whole(group);
  l.pseudoreflections = find_pseudoreflections(*group);
  l.h = reflection_subgroup(group, l.pseudoreflections);
  l.hp = commutator_subgroup(l.h);
  l.orbits = hyperplane_orbits(l.h, l.hp, l.pseudoreflections);
  l.g_orbits = fuse_orbits(l.g, l.orbits);
  for (const auto& o : l.orbits) l.character_checks.push_back(character_values_check(o, l.h, l.pseudoreflections));
  l.abelianization = abelianization_isomorphism(l.h, l.hp, l.orbits);
  l.collapsed = l.h.is_trivial();

  l.h_invariants = fundamental_invariants(l.h);
  const InvariantGenerators semi = semi_invariant_generators(l.h, l.hp, l.orbits, l.h_invariants, cfg.molien_degree);
  l.hp_invariants = echelon_generators(semi.gens, n);
  l.hp_invariants.certified_through = semi.certified_through;
  l.hp_invariants.complete = semi.complete;
  l.hp_relation_bound = relation_degree_bound(cfg, l.hp_invariants.degrees);
  l.hp_relations = find_relations(l.hp_invariants.gens, n, l.hp_relation_bound);

  if (l.h.order() == l.g.order()) {
    l.coarse = l.h_invariants;
  } else {
    l.coarse = general_invariant_generators(l.g, std::min(l.g.order(), cfg.molien_degree));
  }
  l.coarse_relation_bound = relation_degree_bound(cfg, l.coarse.degrees);
  l.coarse_relations = find_relations(l.coarse.gens, n, l.coarse_relation_bound);

  l.g_mod_hp = induced_action(l.g, l.hp, l.hp_invariants.gens);
  l.g_mod_h = induced_action(l.g, l.h, l.h_invariants.gens);
  if (cfg.linearize) {
    l.g_mod_hp = linearize_quotient_action(l.g_mod_hp, l.g, l.hp);
    l.g_mod_h = linearize_quotient_action(l.g_mod_h, l.g, l.h);
  }
  l.g_mod_hp.group = "G/H'";
  l.g_mod_hp.space = "V/H'";
  l.g_mod_h.group = "G/H";
  l.g_mod_h.space = "V/H";

  l.ramification = ramification_image(l.g, l.orbits, l.g_orbits, l.coarse);
  l.molien_g = molien(l.g);
  l.molien_expansion = l.molien_g.expansion(cfg.molien_degree);

  // -- checks ----------------------------------------------------------------
  auto& c = l.checks;
  c["hPrimeNoPseudoreflections"] = std::none_of(l.pseudoreflections.begin(), l.pseudoreflections.end(),
                                                [&](const Pseudoreflection& r) { return l.hp.contains(r.element); });
  c["commutatorsHaveDeterminantOne"] =
      std::all_of(l.hp.members().begin(), l.hp.members().end(), [&](int x) { return group->determinant(x).is_one(); });
  c["characterMapBijective"] = l.abelianization.ok();
  c["characterFormula"] =
      std::all_of(l.character_checks.begin(), l.character_checks.end(), [](const CharacterCheck& k) { return k.ok(); });
  bool e_ok = true;
  for (const auto& o : l.orbits) {
    int best = 1;
    for (const auto& r : l.pseudoreflections) {
      if (std::find(o.orbit.begin(), o.orbit.end(), r.hyperplane) != o.orbit.end()) best = std::max(best, r.order);
    }
    if (o.e != best || o.primitive.order != o.e) e_ok = false;
  }
  c["eEqualsPseudoreflectionOrders"] = e_ok;
  long prod_e = 1;
  for (const auto& o : l.orbits) prod_e *= o.e;
  c["orderBookkeeping"] = l.order_g() == l.order_hp() * l.g_mod_hp.order &&
                          l.order_g() == l.order_h() * l.g_mod_h.order &&
                          l.order_h() == l.order_hp() * prod_e;
  c["hPrimeGenerationCertified"] = l.hp_invariants.certified_through >= cfg.molien_degree;
  c["quotientActionHomomorphism"] = l.g_mod_hp.homomorphism && l.g_mod_h.homomorphism;
  c["quotientActionReproduced"] = l.g_mod_hp.reproduced && l.g_mod_h.reproduced;
  c["gOverHLinear"] = l.g_mod_h.linear;
  if (!l.g_mod_h.matrices.empty()) {
    c["gOverHNoPseudoreflections"] = l.g_mod_h.pseudoreflection_cosets.empty();
    c["gOverHFaithful"] = l.g_mod_h.faithful;
  }
  c["ramificationImagesVerified"] =
      std::all_of(l.ramification.begin(), l.ramification.end(), [](const RamificationEntry& r) { return r.verified; });
  c["relationsVanish"] =
      relations_vanish(l.hp_relations, l.hp_invariants.gens) && relations_vanish(l.coarse_relations, l.coarse.gens);
  return l;
}

// ---------------------------------------------------------------------------

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

Json action_json(const QuotientAction& qa) {
  Json cosets = Json::array();
  for (std::size_t c = 0; c < qa.representatives.size(); ++c) {
    Json entry = {{"representative", qa.representatives[c]}, {"images", poly_list(qa.images[c], "A")}};
    if (!qa.matrices.empty()) entry["matrix"] = to_json(qa.matrices[c]);
    cosets.push_back(std::move(entry));
  }
  Json out = {{"group", qa.group},
              {"space", qa.space},
              {"order", qa.order},
              {"generators", poly_list(qa.generators)},
              {"degrees", qa.degrees},
              {"linear", qa.linear},
              {"linearized", qa.linearized},
              {"homomorphism", qa.homomorphism},
              {"reproduced", qa.reproduced},
              {"cosets", std::move(cosets)}};
  if (!qa.matrices.empty()) {
    out["pseudoreflectionCosets"] = qa.pseudoreflection_cosets;
    out["faithful"] = qa.faithful;
  }
  return out;
}

std::string e_list(const FactorizationLadder& l) {
  std::string s;
  for (std::size_t i = 0; i < l.orbits.size(); ++i) s += (i ? ", " : "") + std::to_string(l.orbits[i].e);
  return s;
}

}  // namespace

Json ladder_to_json(const FactorizationLadder& l) {
  const MatrixGroup& grp = *l.group;
  Json orders = {{"G", l.order_g()},
                 {"H", l.order_h()},
                 {"H'", l.order_hp()},
                 {"G/H'", l.g_mod_hp.order},
                 {"G/H", l.g_mod_h.order},
                 {"H/H'", l.abelianization.quotient_order}};

  Json stages = Json::array({
      {{"stack", "[V/G]"}, {"space", "V"}, {"group", "G"}, {"order", l.order_g()}},
      {{"stack", "[(V/H')/(G/H')]"}, {"space", "V/H'"}, {"group", "G/H'"}, {"order", l.g_mod_hp.order}},
      {{"stack", "[(V/H)/(G/H)]"}, {"space", "V/H"}, {"group", "G/H"}, {"order", l.g_mod_h.order}},
      {{"stack", "V/G"}, {"space", "V/G"}, {"group", "1"}, {"order", 1}},
  });
  std::vector<int> es;
  for (const auto& o : l.orbits) es.push_back(o.e);
  Json morphisms = Json::array({
      {{"from", "[V/G]"}, {"to", "[(V/H')/(G/H')]"}, {"kind", "canonical"}, {"reason", "H' has no pseudoreflections"}},
      {{"from", "[(V/H')/(G/H')]"}, {"to", "[(V/H)/(G/H)]"}, {"kind", "root"}, {"orders", es}},
      {{"from", "[(V/H)/(G/H)]"},
       {"to", "V/G"},
       {"kind", "canonical"},
       {"reason", "G/H acts linearly on V/H without pseudoreflections"}},
  });

  Json prs = Json::array();
  for (const auto& r : l.pseudoreflections) {
    prs.push_back({{"element", r.element},
                   {"order", r.order},
                   {"determinant", to_json(r.determinant)},
                   {"hyperplane", r.hyperplane.to_string()}});
  }

  Json orbits = Json::array();
  for (std::size_t i = 0; i < l.orbits.size(); ++i) {
    const auto& o = l.orbits[i];
    Json table = Json::array();
    for (const auto& [rep, v] : o.chi_table) table.push_back(Json::array({rep, to_json(v)}));
    int gorb = -1;
    for (std::size_t k = 0; k < l.g_orbits.size(); ++k) {
      const auto& f = l.g_orbits[k];
      if (std::find(f.begin(), f.end(), static_cast<int>(i)) != f.end()) gorb = static_cast<int>(k);
    }
    orbits.push_back({{"representative", o.representative.to_string()},
                      {"orbitSize", o.orbit.size()},
                      {"e", o.e},
                      {"f", o.f.to_string()},
                      {"chiTable", std::move(table)},
                      {"primitive", o.primitive.element},
                      {"gOrbit", gorb},
                      {"characterViolations", l.character_checks[i].violations}});
  }

  Json ram = Json::array();
  for (const auto& r : l.ramification) {
    ram.push_back({{"hOrbits", r.h_orbits},
                   {"e", r.e},
                   {"divisor", r.divisor.to_string()},
                   {"power", r.power},
                   {"image", r.image.to_string("A")},
                   {"verified", r.verified}});
  }

  Json abel_rows = Json::array();
  for (const auto& row : l.abelianization.table) {
    Json vals = Json::array();
    for (const auto& v : row.values) vals.push_back(to_json(v));
    abel_rows.push_back(Json::array({row.coset_representative, std::move(vals)}));
  }

  Json coarse = generators_json(l.coarse);
  coarse["relations"] = poly_list(l.coarse_relations.relations, "A");
  coarse["relationDegrees"] = l.coarse_relations.weighted_degrees;
  coarse["relationDegreeBound"] = l.coarse_relation_bound;

  Json hp = generators_json(l.hp_invariants);
  hp["relations"] = poly_list(l.hp_relations.relations, "A");
  hp["relationDegrees"] = l.hp_relations.weighted_degrees;
  hp["relationDegreeBound"] = l.hp_relation_bound;

  std::string note;
  if (l.order_g() == 1) {
    note = "G is trivial: every stage is V and V/G = V";
  } else if (l.collapsed) {
    note = "H is trivial: [V/G] -> V/G is already the canonical stack and there is no ramification divisor";
  }

  Json out = {{"input", {{"conductor", grp.conductor()}, {"dimension", grp.dimension()}}},
              {"orders", std::move(orders)},
              {"stages", std::move(stages)},
              {"morphisms", std::move(morphisms)},
              {"collapsed", l.collapsed},
              {"note", note},
              {"pseudoreflections", std::move(prs)},
              {"orbits", std::move(orbits)},
              {"ramification", std::move(ram)},
              {"abelianization",
               {{"quotientOrder", l.abelianization.quotient_order},
                {"productOfE", l.abelianization.product_of_e},
                {"wellDefined", l.abelianization.well_defined},
                {"valuesInMu", l.abelianization.values_in_mu},
                {"injective", l.abelianization.injective},
                {"table", std::move(abel_rows)}}},
              {"hInvariants", generators_json(l.h_invariants)},
              {"hPrimeInvariants", std::move(hp)},
              {"coarsePresentation", std::move(coarse)},
              {"quotientActions", Json::array({action_json(l.g_mod_hp), action_json(l.g_mod_h)})},
              {"molien",
               {{"numerator", upoly_to_string(l.molien_g.numerator)},
                {"denominator", upoly_to_string(l.molien_g.denominator)},
                {"expansion", l.molien_expansion}}},
              {"checks", l.checks}};
  return out;
}

std::string ladder_to_text(const FactorizationLadder& l) {
  std::ostringstream os;
  os << "[V/G] --canonical--> [(V/H')/(G/H')] --root(e = " << (l.orbits.empty() ? "-" : e_list(l))
     << ")--> [(V/H)/(G/H)] --canonical--> V/G\n";
  os << "|G| = " << l.order_g() << ", |H| = " << l.order_h() << ", |H'| = " << l.order_hp()
     << ", |G/H'| = " << l.g_mod_hp.order << ", |G/H| = " << l.g_mod_h.order << "\n";
  if (l.order_g() == 1) {
    os << "G is trivial: V/G = V\n";
  } else if (l.collapsed) {
    os << "H is trivial: [V/G] -> V/G is the canonical stack, no ramification divisor\n";
  }
  os << "\npseudoreflections: " << l.pseudoreflections.size() << "\n";
  for (std::size_t i = 0; i < l.orbits.size(); ++i) {
    const auto& o = l.orbits[i];
    os << "orbit " << i << ": " << o.representative.to_string() << " (size " << o.orbit.size() << ", e = " << o.e
       << ")\n  f = " << o.f.to_string() << "\n  chi:";
    for (const auto& [rep, v] : o.chi_table) os << " [" << rep << ": " << v.to_string() << "]";
    os << "\n";
  }

  auto gens_block = [&](const std::string& title, const std::vector<Poly>& gens) {
    os << "\n" << title << "\n";
    for (std::size_t j = 0; j < gens.size(); ++j) os << "  A" << j << " = " << gens[j].to_string() << "\n";
  };
  auto rel_block = [&](const RelationSet& rs) {
    if (rs.relations.empty()) {
      os << "  no relations\n";
      return;
    }
    for (const auto& r : rs.relations) os << "  " << r.to_string("A") << " = 0\n";
  };
  gens_block("V/H = Spec k[A]:", l.h_invariants.gens);
  gens_block("V/H' generators:", l.hp_invariants.gens);
  rel_block(l.hp_relations);
  gens_block("V/G generators:", l.coarse.gens);
  rel_block(l.coarse_relations);
  if (!l.coarse.complete) os << "  (certified through degree " << l.coarse.certified_through << ")\n";

  for (const QuotientAction* qa : {&l.g_mod_hp, &l.g_mod_h}) {
    os << "\n" << qa->group << " on " << qa->space << (qa->linear ? " (linear)" : " (polynomial)") << ":\n";
    for (std::size_t c = 0; c < qa->representatives.size(); ++c) {
      os << "  [" << qa->representatives[c] << "]";
      for (std::size_t j = 0; j < qa->images[c].size(); ++j) os << " A" << j << " -> " << qa->images[c][j].to_string("A") << ";";
      os << "\n";
    }
  }

  if (!l.ramification.empty()) os << "\nramification divisor on V/G:\n";
  for (const auto& r : l.ramification) {
    os << "  (" << r.image.to_string("A") << ") = 0, e = " << r.e << ", from (" << r.divisor.to_string() << ")^"
       << r.power << "\n";
  }

  os << "\nchecks:\n";
  for (const auto& [name, v] : l.checks) os << "  " << name << ": " << (v ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace quot
