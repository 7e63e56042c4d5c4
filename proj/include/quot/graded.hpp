#pragma once

// Homogeneous pieces as coordinate vectors, and the graded pieces of the
// subalgebra generated by a list of homogeneous polynomials.

#include <map>
#include <optional>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/poly.hpp"

namespace quot {

/// The degree-d monomials in n variables, descending grevlex, with lookup.
class MonomialBasis {
 public:
  MonomialBasis(int num_vars, int degree);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(monos_.size()); }
  const Exponent& at(Eigen::Index i) const { return monos_[static_cast<std::size_t>(i)]; }
  std::optional<Eigen::Index> index(const Exponent& e) const;

  /// Coordinates of a polynomial homogeneous of this degree.
  RowVector to_row(const Poly& p) const;
  Poly from_row(const RowVector& row) const;
  Matrix to_rows(const std::vector<Poly>& polys) const;
  std::vector<Poly> from_rows(const Matrix& rows) const;

 private:
  int n_;
  int d_;
  std::vector<Exponent> monos_;
  std::map<Exponent, Eigen::Index> index_;
};

/// Products A^a = prod_i gens[i]^{a_i} of homogeneous generators, memoized.
class SubalgebraProducts {
 public:
  SubalgebraProducts(std::vector<Poly> gens, int num_vars);

  int num_vars() const { return n_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::vector<Poly>& generators() const { return gens_; }
  const std::vector<int>& weights() const { return weights_; }

  /// Exponents a with sum a_i * deg(gens[i]) = d, descending grevlex in a.
  std::vector<Exponent> abstract_monomials(int d) const;

  const Poly& product(const Exponent& a);

  /// Canonical (RREF) basis of the degree-d piece of the generated algebra.
  std::vector<Poly> graded_piece_basis(int d);
  Matrix graded_piece_rows(int d);
  int graded_piece_dimension(int d);

 private:
  int n_;
  std::vector<Poly> gens_;
  std::vector<int> weights_;
  std::map<Exponent, Poly> products_;
};

/// Basis of the span of all products of `polys` of total degree exactly d.
std::vector<Poly> graded_piece_basis(const std::vector<Poly>& polys, int d, int num_vars);

/// p with the components along `basis_rows` pivots eliminated (basis in RREF).
RowVector reduce_modulo(RowVector v, const Matrix& rref_rows);

}  // namespace quot
