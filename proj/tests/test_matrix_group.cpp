#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "quot/catalog.hpp"
#include "quot/errors.hpp"
#include "quot/matrix_group.hpp"

using namespace quot;

namespace {

// Naive closure: keep multiplying every pair until nothing new appears.
std::vector<Matrix> naive_closure(const std::vector<Matrix>& gens, int n, const CyclotomicField& f) {
  std::vector<Matrix> all{identity_matrix(n, f)};
  auto has = [&](const Matrix& m) {
    return std::any_of(all.begin(), all.end(), [&](const Matrix& x) { return matrices_equal(x, m); });
  };
  for (const auto& g : gens) {
    Matrix b = bind_matrix(g, f);
    if (!has(b)) all.push_back(std::move(b));
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t sz = all.size();
    for (std::size_t i = 0; i < sz; ++i) {
      for (std::size_t j = 0; j < sz; ++j) {
        Matrix p = all[i] * all[j];
        if (!has(p)) {
          all.push_back(std::move(p));
          grew = true;
        }
      }
    }
  }
  return all;
}

std::set<int> brute_derived(const MatrixGroup& g) {
  std::set<int> s{0};
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) s.insert(g.commutator(a, b));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur)
        if (s.insert(g.multiply(a, b)).second) grew = true;
  }
  return s;
}

}  // namespace

TEST_CASE("closure agrees with naive closure across the zoo") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const auto& d = entry.description;
    const GroupPtr g = close_group(d);
    CHECK(g->order() == entry.advertised_order);
    const auto naive = naive_closure(d.generators, d.dimension, CyclotomicField::get(d.conductor));
    REQUIRE(static_cast<int>(naive.size()) == g->order());
    for (const auto& m : naive) CHECK(g->find(m).has_value());
    CHECK(matrices_equal(g->element(0), identity_matrix(d.dimension, g->field())));
  }
}

TEST_CASE("multiplication table and inverses match matrix products") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    for (int a = 0; a < g->order(); ++a) {
      CHECK(g->multiply(a, g->inverse(a)) == 0);
      for (int b = 0; b < g->order(); ++b) {
        CHECK(matrices_equal(g->element(g->multiply(a, b)), g->element(a) * g->element(b)));
      }
    }
  }
}

TEST_CASE("derived subgroup matches brute-force commutators") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup d = commutator_subgroup(whole);
    const auto oracle = brute_derived(*g);
    CHECK(std::vector<int>(oracle.begin(), oracle.end()) == d.members());
  }
}

TEST_CASE("known derived subgroups") {
  {
    const GroupPtr g = close_group(symmetric_group(4, SymmetricRep::Full));
    CHECK(commutator_subgroup(Subgroup::whole(g)).order() == 12);
  }
  {
    const GroupPtr g = close_group(dihedral_gl2(2));
    const Subgroup d = commutator_subgroup(Subgroup::whole(g));
    CHECK(d.order() == 2);
    CHECK(d.contains(*g->find(identity_matrix(2, g->field()) * Cyclotomic(-1))));
  }
  {
    const GroupPtr g = close_group(cyclic_diagonal(5, {1, -1}));
    CHECK(commutator_subgroup(Subgroup::whole(g)).is_trivial());
  }
}

TEST_CASE("normality agrees with conjugating by every element") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    const Subgroup whole = Subgroup::whole(g);
    for (int s = 0; s < g->order(); ++s) {
      const Subgroup h = subgroup_generated(g, {s});
      bool normal = true;
      for (int x = 0; x < g->order() && normal; ++x)
        for (int y : h.members())
          if (!h.contains(g->conjugate(x, y))) normal = false;
      CHECK(is_normal(whole, h) == normal);
    }
  }
}

TEST_CASE("coset decomposition partitions the group") {
  for (const auto& entry : catalog_zoo()) {
    CAPTURE(entry.name);
    const GroupPtr g = close_group(entry.description);
    const Subgroup whole = Subgroup::whole(g);
    const Subgroup d = commutator_subgroup(whole);
    const CosetDecomposition c = coset_decomposition(whole, d, true);
    CHECK(c.size() * d.order() == g->order());
    std::vector<int> seen;
    for (const auto& coset : c.cosets) {
      CHECK(static_cast<int>(coset.size()) == d.order());
      seen.insert(seen.end(), coset.begin(), coset.end());
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(static_cast<int>(seen.size()) == g->order());
    for (std::size_t i = 0; i < c.representatives.size(); ++i) {
      CHECK(c.representatives[i] == c.cosets[i].front());
    }
    // the quotient by the derived subgroup is abelian
    for (int a = 0; a < c.size(); ++a)
      for (int b = 0; b < c.size(); ++b) CHECK(c.multiply(*g, a, b) == c.multiply(*g, b, a));
  }
}

TEST_CASE("non-normal coset group is rejected") {
  const GroupPtr g = close_group(symmetric_group(3, SymmetricRep::Full));
  const Subgroup whole = Subgroup::whole(g);
  const Subgroup t = subgroup_generated(g, {g->generators()[0]});  // a transposition
  CHECK_FALSE(is_normal(whole, t));
  CHECK_THROWS_AS(coset_decomposition(whole, t, true), InputError);
}

TEST_CASE("bad generators") {
  Matrix shear(2, 2);
  shear << Cyclotomic(1), Cyclotomic(1), Cyclotomic(0), Cyclotomic(1);
  CHECK_THROWS_AS(MatrixGroup::close({shear}, 2, 1), BoundError);
  Matrix singular(2, 2);
  singular << Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(0);
  CHECK_THROWS_AS(MatrixGroup::close({singular}, 2, 1), InputError);
  CHECK_THROWS_AS(MatrixGroup::close({identity_matrix(3, CyclotomicField::get(1))}, 2, 1), InputError);
  // order 5 exceeds a bound of 4
  CHECK_THROWS_AS(close_group(cyclic_diagonal(5, {1}), 4), BoundError);
}

TEST_CASE("element orders and determinants") {
  const GroupPtr g = close_group(cyclic_diagonal(4, {1, 2}));
  const int gen = g->generators()[0];
  CHECK(g->element_order(gen) == 4);
  CHECK(g->element_order(0) == 1);
  const auto chi = determinant_character(Subgroup::whole(g));
  const auto& f = g->field();
  // det diag(i, -1) = -i
  CHECK(chi.at(gen) == -Cyclotomic::zeta(f));
}
