#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "quot/catalog.hpp"
#include "quot/errors.hpp"
#include "quot/linalg.hpp"
#include "quot/reflection.hpp"

using namespace quot;

namespace {

struct Analysis {
  GroupPtr g;
  std::vector<Pseudoreflection> prs;
  Subgroup h;
  Subgroup hp;
  std::vector<HyperplaneOrbit> orbits;
};

Analysis analyse(const GroupDescription& d) {
  GroupPtr g = close_group(d);
  auto prs = find_pseudoreflections(*g);
  Subgroup h = reflection_subgroup(g, prs);
  Subgroup hp = commutator_subgroup(h);
  auto orbits = hyperplane_orbits(h, hp, prs);
  return {g, std::move(prs), std::move(h), std::move(hp), std::move(orbits)};
}

// 3-dim group whose two reflection hyperplane orbits get swapped: H = <diag(-1,1,1),
// diag(1,-1,1)>, extended by (x, y, z) -> (y, x, -z).
GroupDescription fusing_group() {
  const auto& f = CyclotomicField::get(1);
  Matrix r = identity_matrix(3, f);
  r(0, 0) = Cyclotomic(-1);
  Matrix s = Matrix::Constant(3, 3, Cyclotomic::zero(f));
  s(0, 1) = Cyclotomic(1);
  s(1, 0) = Cyclotomic(1);
  s(2, 2) = Cyclotomic(-1);
  return {1, 3, {r, s}, true};
}

Poly var(int n, int i) { return Poly::variable(n, i); }

}  // namespace

TEST_CASE("pseudoreflection detection") {
  const auto& f = CyclotomicField::get(4);
  Matrix m = identity_matrix(3, f);
  m(1, 1) = Cyclotomic::zeta(f);
  CHECK(is_pseudoreflection(m));
  m(2, 2) = Cyclotomic(-1);
  CHECK_FALSE(is_pseudoreflection(m));
  CHECK_FALSE(is_pseudoreflection(identity_matrix(3, f)));
  // a transvection-shaped matrix has rank(g - I) = 1 too
  Matrix t = identity_matrix(2, f);
  t(0, 1) = Cyclotomic(1);
  CHECK(is_pseudoreflection(t));
}

TEST_CASE("linear forms normalize") {
  RowVector v(3);
  v << Cyclotomic(0), Cyclotomic(2), Cyclotomic(-4);
  const LinearForm l(v);
  CHECK(l.coeffs()(1).is_one());
  CHECK(l.coeffs()(2) == Cyclotomic(-2));
  RowVector z(2);
  z << Cyclotomic(0), Cyclotomic(0);
  CHECK_THROWS_AS(LinearForm{z}, InputError);
}

TEST_CASE("symmetric groups") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const Analysis a = analyse(symmetric_group(n, SymmetricRep::Full));
    CHECK(static_cast<int>(a.prs.size()) == n * (n - 1) / 2);
    CHECK(a.h.order() == a.g->order());
    REQUIRE(a.orbits.size() == 1);
    CHECK(a.orbits[0].e == 2);
    CHECK(static_cast<int>(a.orbits[0].orbit.size()) == n * (n - 1) / 2);
    // f is the Vandermonde product up to sign
    Poly vandermonde = Poly::constant(n, Cyclotomic(1));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) vandermonde = vandermonde * (var(n, i) - var(n, j));
    CHECK((a.orbits[0].f == vandermonde || a.orbits[0].f == -vandermonde));
    CHECK(a.hp.order() * 2 == a.h.order());
  }
}

TEST_CASE("dihedral group of order 8") {
  const Analysis a = analyse(dihedral_gl2(2));
  CHECK(a.prs.size() == 4);
  CHECK(a.hp.order() == 2);
  REQUIRE(a.orbits.size() == 2);
  for (const auto& o : a.orbits) {
    CHECK(o.e == 2);
    CHECK(o.orbit.size() == 2);
    CHECK(o.f.degree() == 2);
  }
  const auto rep = abelianization_isomorphism(a.h, a.hp, a.orbits);
  CHECK(rep.ok());
  CHECK(rep.quotient_order == 4);
}

TEST_CASE("non-reflection part is split off") {
  const Analysis a = analyse(cyclic_diagonal(4, {1, 2}));
  CHECK(a.g->order() == 4);
  CHECK(a.h.order() == 2);
  REQUIRE(a.orbits.size() == 1);
  CHECK(a.orbits[0].e == 2);
  CHECK(a.orbits[0].f == var(2, 0));

  const Analysis b = analyse(cyclic_diagonal(3, {1, 2}));
  CHECK(b.prs.empty());
  CHECK(b.h.is_trivial());
  CHECK(b.orbits.empty());
}

TEST_CASE("derived subgroup of H has no pseudoreflections across the zoo") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const Analysis a = analyse(entry.description);
    for (const auto& r : a.prs) CHECK_FALSE(a.hp.contains(r.element));
    CHECK((a.h.order() == a.g->order()) == entry.reflection_group);
  }
}

TEST_CASE("orbit characters across the zoo") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const Analysis a = analyse(entry.description);
    long prod = 1;
    for (const auto& o : a.orbits) {
      // h.f = chi(h) f checked directly
      for (int h : a.h.members()) {
        const Poly moved = compose_linear(o.f, a.g->element(h));
        CHECK(moved == o.f * o.chi.at(h));
      }
      CHECK(character_values_check(o, a.h, a.prs).ok());
      // e is the largest pseudoreflection order fixing a hyperplane of the orbit
      int e = 1;
      for (const auto& r : a.prs)
        if (std::find(o.orbit.begin(), o.orbit.end(), r.hyperplane) != o.orbit.end()) e = std::max(e, r.order);
      CHECK(o.e == e);
      CHECK(o.primitive.order == o.e);
      prod *= o.e;
    }
    const auto rep = abelianization_isomorphism(a.h, a.hp, a.orbits);
    CHECK(rep.ok());
    CHECK(rep.product_of_e == prod);
    CHECK(rep.quotient_order * a.hp.order() == a.h.order());
  }
}

TEST_CASE("G fuses H-orbits") {
  const Analysis a = analyse(fusing_group());
  CHECK(a.g->order() == 8);
  CHECK(a.h.order() == 4);
  CHECK(a.orbits.size() == 2);
  const auto fused = fuse_orbits(Subgroup::whole(a.g), a.orbits);
  REQUIRE(fused.size() == 1);
  CHECK(fused[0] == std::vector<int>{0, 1});

  const Analysis d = analyse(dihedral_gl2(2));
  CHECK(fuse_orbits(Subgroup::whole(d.g), d.orbits).size() == 2);
}
