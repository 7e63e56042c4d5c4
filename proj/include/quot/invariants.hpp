#pragma once

// Invariant rings of finite matrix groups: Reynolds operator, Molien series,
// graded invariant spaces, generator sweeps and relations among generators.

#include <map>
#include <string>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/graded.hpp"
#include "quot/matrix_group.hpp"
#include "quot/poly.hpp"
#include "quot/reflection.hpp"
#include "quot/univariate.hpp"

namespace quot {

/// g.p = p o g^{-1} for elements of one group, with monomial images cached.
class PolyAction {
 public:
  explicit PolyAction(GroupPtr group);

  const MatrixGroup& group() const { return *group_; }
  Poly act(int element, const Poly& p);
  const Poly& act_monomial(int element, const Exponent& e);
  /// Row i holds the coordinates of element . basis.at(i).
  Matrix degree_matrix(int element, const MonomialBasis& basis);

 private:
  GroupPtr group_;
  std::vector<std::vector<Poly>> forms_;
  std::vector<std::map<Exponent, Poly>> cache_;
};

Poly reynolds(const Subgroup& h, const Poly& p);

struct MolienSeries {
  UPoly<Cyclotomic> numerator;
  UPoly<Cyclotomic> denominator;  // denominator(0) = 1

  /// Power-series coefficients of t^0 .. t^upto; each checked to be a
  /// non-negative integer.
  std::vector<long> expansion(int upto) const;
};

MolienSeries molien(const Subgroup& h);

/// Canonical (RREF) basis of the degree-d invariants, as coordinate rows.
Matrix invariant_space_rows(const Subgroup& h, int d, PolyAction& action);
std::vector<Poly> invariant_space(const Subgroup& h, int d);

/// Rank of the Reynolds projector on degree-d polynomials.
int reynolds_image_dimension(const Subgroup& h, int d);

struct InvariantDimension {
  long from_molien;
  long from_reynolds;
};
InvariantDimension invariant_dimension(const Subgroup& h, int d);

struct InvariantGenerators {
  std::vector<Poly> gens;
  std::vector<int> degrees;
  /// Subalgebra graded dimensions match the Molien coefficients for all
  /// degrees <= certified_through.
  int certified_through = -1;
  /// Generation proven in every degree (CST, Noether bound, or the
  /// semi-invariant theorem plus certification).
  bool complete = false;
};

/// Chevalley-Shephard-Todd generators; H must be generated by
/// pseudoreflections.
InvariantGenerators fundamental_invariants(const Subgroup& h);

/// Minimal homogeneous generators up to degree_bound (no independence).
/// complete iff degree_bound >= |H| and certification reaches it.
InvariantGenerators general_invariant_generators(const Subgroup& h, int degree_bound);

/// base.gens followed by the orbit products f; certified against
/// molien(H') through certify_degree.  Raises InternalError with the first
/// mismatching degree.
InvariantGenerators semi_invariant_generators(const Subgroup& h, const Subgroup& h_prime,
                                              const std::vector<HyperplaneOrbit>& orbits,
                                              const InvariantGenerators& base, int certify_degree);

/// Minimal generators of the algebra generated by gens, degree by degree:
/// each degree is reduced modulo products of lower generators and
/// echelonized.  Certification fields are left unset.
InvariantGenerators echelon_generators(const std::vector<Poly>& gens, int num_vars);

struct RelationSet {
  /// Polynomials in A0..A{r-1}, one abstract variable per generator.
  std::vector<Poly> relations;
  /// Weighted degree (ambient degree after substitution) of each relation.
  std::vector<int> weighted_degrees;
};

RelationSet find_relations(const std::vector<Poly>& gens, int num_vars, int max_weighted_degree);

/// det(d g_i / d x_j).
Poly jacobian_determinant(const std::vector<Poly>& gens);

/// Express a homogeneous p in the subalgebra generated by gens as a
/// polynomial in A-variables (free coordinates zero), or nullopt.
std::optional<Poly> express_in_generators(SubalgebraProducts& sp, const Poly& p);

}  // namespace quot
