#pragma once

// The four-stage factorization [V/G] -> [(V/H')/(G/H')] -> [(V/H)/(G/H)] -> V/G
// for a finite linear group G, H its reflection subgroup and H' = [H, H],
// computed as ring-level data.

#include <map>
#include <string>
#include <vector>

#include "quot/invariants.hpp"
#include "quot/json_io.hpp"
#include "quot/matrix_group.hpp"
#include "quot/reflection.hpp"

namespace quot {

struct AnalysisConfig {
  int molien_degree = 12;
  /// 0 means max(12, 2 * largest generator degree), per generator set.
  int relation_degree_bound = 0;
  std::size_t max_group_order = kDefaultMaxOrder;
  bool linearize = true;
};

/// The configured bound, or max(12, 2 * largest degree).
int relation_degree_bound(const AnalysisConfig& cfg, const std::vector<int>& degrees);

/// Generators of k[V]^G for the whole group g: fundamental invariants when G
/// is generated by pseudoreflections, else a sweep to min(|G|, molien degree).
InvariantGenerators invariant_generators(const Subgroup& g, const AnalysisConfig& cfg);

/// Action of G/N on generators of the N-invariants, N normal in G.
struct QuotientAction {
  std::string group;  // "G/H" or "G/H'"
  std::string space;  // "V/H" or "V/H'"
  int order = 1;
  /// Smallest element of each coset; coset 0 is N itself.
  std::vector<int> representatives;
  std::vector<Poly> generators;
  std::vector<int> degrees;
  /// images[c][j]: representative c applied to generator j, as a polynomial
  /// in A0..A{r-1}.
  std::vector<std::vector<Poly>> images;
  bool linear = false;
  bool linearized = false;
  /// Filled when linear.  Column j holds the coordinates of c . g_j.
  std::vector<Matrix> matrices;
  bool homomorphism = false;
  bool reproduced = false;
  /// Cosets other than N whose matrix is a pseudoreflection.
  std::vector<int> pseudoreflection_cosets;
  bool faithful = false;
};

/// Expresses each gamma . g_j in the degree-d_j piece of k[gens].  Raises
/// InternalError if an image is not in the subalgebra.
QuotientAction induced_action(const Subgroup& g, const Subgroup& n, const std::vector<Poly>& gens);

/// Replaces each degree's generators by a G-stable complement of the
/// decomposable part (image of the averaged projector) and re-solves; the
/// result is linear.
QuotientAction linearize_quotient_action(const QuotientAction& qa, const Subgroup& g, const Subgroup& n);

struct RamificationEntry {
  /// H-orbits fused into one G-orbit.
  std::vector<int> h_orbits;
  int e = 0;
  /// Product of the fused orbit products.
  Poly divisor;
  /// Least k with divisor^k G-invariant.
  int power = 1;
  /// divisor^power in the coarse generators A0..A{r-1}.
  Poly image;
  bool verified = false;
};

/// One entry per G-orbit of hyperplanes.  BoundError when an image degree
/// lies past what the coarse generators are certified for.
std::vector<RamificationEntry> ramification_image(const Subgroup& g, const std::vector<HyperplaneOrbit>& orbits,
                                                  const std::vector<std::vector<int>>& g_orbits,
                                                  const InvariantGenerators& coarse);

struct FactorizationLadder {
  GroupPtr group;
  Subgroup g;
  Subgroup h;
  Subgroup hp;
  std::vector<Pseudoreflection> pseudoreflections;
  std::vector<HyperplaneOrbit> orbits;
  std::vector<std::vector<int>> g_orbits;
  std::vector<CharacterCheck> character_checks;
  AbelianizationReport abelianization;

  InvariantGenerators h_invariants;
  InvariantGenerators hp_invariants;
  RelationSet hp_relations;
  int hp_relation_bound = 0;
  InvariantGenerators coarse;
  RelationSet coarse_relations;
  int coarse_relation_bound = 0;

  QuotientAction g_mod_hp;
  QuotientAction g_mod_h;
  std::vector<RamificationEntry> ramification;

  MolienSeries molien_g;
  std::vector<long> molien_expansion;

  /// H trivial: [V/G] -> V/G is already the canonical stack.
  bool collapsed = false;
  std::map<std::string, bool> checks;

  int order_g() const { return g.order(); }
  int order_h() const { return h.order(); }
  int order_hp() const { return hp.order(); }
  bool ok() const;
  std::vector<std::string> failed_checks() const;
};

FactorizationLadder build_ladder(const GroupPtr& group, const AnalysisConfig& cfg = {});

Json ladder_to_json(const FactorizationLadder& ladder);
std::string ladder_to_text(const FactorizationLadder& ladder);

}  // namespace quot
