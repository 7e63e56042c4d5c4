#pragma once

// Named constructors for the example groups, emitting group descriptions.

#include <string>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/matrix_group.hpp"

namespace quot {

struct GroupDescription {
  int conductor = 1;
  int dimension = 1;
  std::vector<Matrix> generators;
  /// Only false when the input explicitly asks for a non-faithful action.
  bool faithful = true;
};

GroupPtr close_group(const GroupDescription& d, std::size_t max_order = kDefaultMaxOrder);

enum class SymmetricRep { Full, Standard };

/// S_n (2 <= n <= 5) from (1 2) and (1 2 ... n); `Standard` uses the basis
/// x_i - x_{i+1} of the sum-zero hyperplane.
GroupDescription symmetric_group(int n, SymmetricRep rep, int conductor = 1);

/// <diag(zeta_m^w_1, ..., zeta_m^w_n)>; conductor 0 means m.
GroupDescription cyclic_diagonal(int m, const std::vector<int>& weights, int conductor = 0);

/// Order-4m dihedral group <diag(zeta_2m, zeta_2m^-1), swap>; conductor 0
/// means 2m.
GroupDescription dihedral_gl2(int m, int conductor = 0);

/// S_3 as <diag(zeta_3, zeta_3^2), swap>, the A_3-eigenbasis form of the
/// 2-dimensional irreducible representation.
GroupDescription cuspidal_s3(int conductor = 3);

GroupDescription trivial_group(int dimension, int conductor = 1);

/// Block-diagonal action on the sum, over the lcm of the conductors.
GroupDescription direct_product(const GroupDescription& a, const GroupDescription& b);

struct CatalogEntry {
  std::string name;
  GroupDescription description;
  int advertised_order;
  bool reflection_group;
};

/// Every catalog group with |G| <= 48 used by the property suites.
std::vector<CatalogEntry> catalog_zoo();

}  // namespace quot
