#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "quot/catalog.hpp"
#include "quot/errors.hpp"
#include "quot/invariants.hpp"
#include "quot/reflection.hpp"

using namespace quot;

namespace {

Poly var(int n, int i) { return Poly::variable(n, i); }

// Number of exponent vectors of degree d with sum w_i e_i = 0 mod m.
long diagonal_count(const std::vector<int>& w, int m, int d) {
  long count = 0;
  for (const auto& e : monomials_of_degree(static_cast<int>(w.size()), d)) {
    long s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) s += static_cast<long>(w[i]) * e[i];
    if (((s % m) + m) % m == 0) ++count;
  }
  return count;
}

// Partitions of d into parts of size at most k.
long partitions(int d, int k) {
  std::vector<long> p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (int s = part; s <= d; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p[static_cast<std::size_t>(d)];
}

bool proportional(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

}  // namespace

TEST_CASE("Molien series of diagonal cyclic groups") {
  const std::vector<std::pair<int, std::vector<int>>> cases{
      {2, {1, -1}}, {3, {1, -1}}, {5, {1, -1}}, {3, {1, 2}}, {4, {1, 1}}, {4, {1, 2}}, {3, {1}}, {4, {1, 1, 2}}};
  for (const auto& [m, w] : cases) {
    CAPTURE(m);
    const GroupPtr g = close_group(cyclic_diagonal(m, w));
    const auto series = molien(Subgroup::whole(g)).expansion(12);
    for (int d = 0; d <= 12; ++d) CHECK(series[static_cast<std::size_t>(d)] == diagonal_count(w, m, d));
  }
}

TEST_CASE("Molien series of symmetric groups") {
  for (int n = 2; n <= 4; ++n) {
    const GroupPtr full = close_group(symmetric_group(n, SymmetricRep::Full));
    const GroupPtr std_rep = close_group(symmetric_group(n, SymmetricRep::Standard));
    const auto a = molien(Subgroup::whole(full)).expansion(12);
    const auto b = molien(Subgroup::whole(std_rep)).expansion(12);
    for (int d = 0; d <= 12; ++d) {
      CHECK(a[static_cast<std::size_t>(d)] == partitions(d, n));
      // drop the degree-1 invariant: no parts of size 1
      const long without_ones = partitions(d, n) - (d >= 1 ? partitions(d - 1, n) : 0);
      CHECK(b[static_cast<std::size_t>(d)] == without_ones);
    }
  }
}

TEST_CASE("Molien equals Reynolds rank across the zoo") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    const int top = entry.description.dimension >= 4 ? 6 : 8;
    for (int d = 0; d <= top; ++d) {
      CAPTURE(d);
      const auto dim = invariant_dimension(Subgroup::whole(g), d);
      CHECK(dim.from_molien == dim.from_reynolds);
    }
  }
}

TEST_CASE("Reynolds operator") {
  const GroupPtr g = close_group(dihedral_gl2(2));
  const Subgroup whole = Subgroup::whole(g);
  const Poly x = var(2, 0);
  const Poly y = var(2, 1);
  const Poly p = x.pow(4) + x * y * Cyclotomic(3) + y;
  const Poly r = reynolds(whole, p);
  CHECK(reynolds(whole, r) == r);
  for (int h = 0; h < g->order(); ++h) CHECK(compose_linear(r, g->element(h)) == r);
  // xy is invariant here; y averages to 0
  CHECK(r == (x.pow(4) + y.pow(4)) * Cyclotomic(Rational(1, 2)) + x * y * Cyclotomic(3));
}

TEST_CASE("invariant spaces are invariant") {
  const GroupPtr g = close_group(symmetric_group(3, SymmetricRep::Standard));
  const Subgroup whole = Subgroup::whole(g);
  for (int d = 0; d <= 6; ++d) {
    const auto basis = invariant_space(whole, d);
    CHECK(static_cast<long>(basis.size()) == molien(whole).expansion(d)[static_cast<std::size_t>(d)]);
    for (const auto& p : basis)
      for (int h = 0; h < g->order(); ++h) CHECK(compose_linear(p, g->element(h)) == p);
  }
}

TEST_CASE("fundamental invariants of reflection groups") {
  for (const auto& entry : catalog_zoo()) {
    if (!entry.reflection_group) continue;
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    const Subgroup whole = Subgroup::whole(g);
    const auto inv = fundamental_invariants(whole);
    const int n = entry.description.dimension;
    REQUIRE(static_cast<int>(inv.gens.size()) == n);
    CHECK(inv.complete);
    const long prod = std::accumulate(inv.degrees.begin(), inv.degrees.end(), 1L, std::multiplies<>());
    CHECK(prod == g->order());
    // sum (d_i - 1) is the number of pseudoreflections
    const auto prs = find_pseudoreflections(*g);
    long sum = 0;
    for (int d : inv.degrees) sum += d - 1;
    CHECK(sum == static_cast<long>(prs.size()));
    for (const auto& p : inv.gens)
      for (int h = 0; h < g->order(); ++h) CHECK(compose_linear(p, g->element(h)) == p);
    // algebraically independent: the Jacobian is nonzero, a product of l_U^{e_U - 1}
    const Poly j = jacobian_determinant(inv.gens);
    const auto orbits = hyperplane_orbits(whole, commutator_subgroup(whole), prs);
    Poly expected = Poly::constant(n, Cyclotomic(1));
    for (const auto& o : orbits) {
      for (const auto& l : o.orbit) expected = expected * l.poly().pow(o.e - 1);
    }
    CHECK(proportional(j, expected));
    CHECK(find_relations(inv.gens, n, 12).relations.empty());
  }
}

TEST_CASE("fundamental degrees") {
  auto degrees = [](const GroupDescription& d) {
    auto v = fundamental_invariants(Subgroup::whole(close_group(d))).degrees;
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(degrees(symmetric_group(3, SymmetricRep::Full)) == std::vector<int>{1, 2, 3});
  CHECK(degrees(symmetric_group(4, SymmetricRep::Standard)) == std::vector<int>{2, 3, 4});
  CHECK(degrees(dihedral_gl2(2)) == std::vector<int>{2, 4});
  CHECK(degrees(dihedral_gl2(3)) == std::vector<int>{2, 6});
  CHECK(degrees(cyclic_diagonal(4, {1})) == std::vector<int>{4});
  CHECK(degrees(cuspidal_s3()) == std::vector<int>{2, 3});
  CHECK_THROWS_AS(fundamental_invariants(Subgroup::whole(close_group(cyclic_diagonal(3, {1, 2})))), InputError);
}

TEST_CASE("general generators and relations") {
  const GroupPtr g = close_group(cyclic_diagonal(2, {1, -1}));
  const auto inv = general_invariant_generators(Subgroup::whole(g), 4);
  CHECK(inv.degrees == std::vector<int>{2, 2, 2});
  CHECK(inv.complete);
  const auto rel = find_relations(inv.gens, 2, 8);
  REQUIRE(rel.relations.size() == 1);
  CHECK(rel.weighted_degrees[0] == 4);
  // substituting the generators kills the relation
  CHECK(substitute(rel.relations[0], inv.gens).is_zero());

  // mu_3 acting by (zeta, zeta^-1): x^3, y^3, xy with x^3 y^3 = (xy)^3
  const GroupPtr c3 = close_group(cyclic_diagonal(3, {1, -1}));
  const auto inv3 = general_invariant_generators(Subgroup::whole(c3), 6);
  std::vector<int> d3 = inv3.degrees;
  std::sort(d3.begin(), d3.end());
  CHECK(d3 == std::vector<int>{2, 3, 3});
  CHECK(inv3.certified_through >= 6);
  CHECK(find_relations(inv3.gens, 2, 12).relations.size() == 1);
}

TEST_CASE("express in generators") {
  const Poly x = var(2, 0);
  const Poly y = var(2, 1);
  SubalgebraProducts sp({x + y, x * y}, 2);
  const auto e = express_in_generators(sp, x * x + y * y);
  REQUIRE(e.has_value());
  const Poly a0 = var(2, 0);
  const Poly a1 = var(2, 1);
  CHECK(*e == a0 * a0 - a1 * Cyclotomic(2));
  CHECK_FALSE(express_in_generators(sp, x * x).has_value());
}

TEST_CASE("semi-invariants generate the H'-invariants") {
  for (const auto& d : {symmetric_group(3, SymmetricRep::Standard), dihedral_gl2(2), cuspidal_s3(),
                        symmetric_group(3, SymmetricRep::Full)}) {
    const GroupPtr g = close_group(d);
    const auto prs = find_pseudoreflections(*g);
    const Subgroup h = reflection_subgroup(g, prs);
    const Subgroup hp = commutator_subgroup(h);
    const auto orbits = hyperplane_orbits(h, hp, prs);
    const auto base = fundamental_invariants(h);
    const auto semi = semi_invariant_generators(h, hp, orbits, base, 12);
    CHECK(semi.gens.size() == base.gens.size() + orbits.size());
    CHECK(semi.certified_through >= 12);
    for (const auto& p : semi.gens)
      for (int k : hp.members()) CHECK(compose_linear(p, g->element(k)) == p);
  }
}
