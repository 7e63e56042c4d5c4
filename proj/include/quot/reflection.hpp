#pragma once

// Pseudoreflections, their hyperplanes, H-orbits of hyperplanes with the
// semi-invariant products f = prod l_U, and the characters H acts on them by.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/matrix_group.hpp"
#include "quot/poly.hpp"

namespace quot {

/// A nonzero linear functional, scaled so its first nonzero coefficient is 1.
class LinearForm {
 public:
  LinearForm() = default;
  /// Normalizes; raises InputError for the zero functional.
  explicit LinearForm(const RowVector& coeffs);

  const RowVector& coeffs() const { return coeffs_; }
  int dimension() const { return static_cast<int>(coeffs_.size()); }
  Poly poly() const;
  std::string to_string() const { return poly().to_string(); }

  /// The form l o g^{-1}, renormalized, given g^{-1}.
  LinearForm transformed(const Matrix& g_inverse) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b);
  friend bool operator<(const LinearForm& a, const LinearForm& b);

 private:
  RowVector coeffs_;
};

struct Pseudoreflection {
  int element = -1;
  LinearForm hyperplane;
  int order = 0;
  Cyclotomic determinant;
};

/// rank(g - I) == 1.
bool is_pseudoreflection(const Matrix& g);

/// Every non-identity element with rank(g - I) = 1, in element order.
std::vector<Pseudoreflection> find_pseudoreflections(const MatrixGroup& g);

/// Subgroup generated by the pseudoreflections; asserted normal in G.
Subgroup reflection_subgroup(const GroupPtr& g, const std::vector<Pseudoreflection>& prs);
Subgroup reflection_subgroup(const GroupPtr& g);

struct HyperplaneOrbit {
  LinearForm representative;
  /// Sorted H-translates of the representative.
  std::vector<LinearForm> orbit;
  /// Product of the orbit's normalized forms.
  Poly f;
  /// h.f = chi(h) f for every member h of H.
  std::map<int, Cyclotomic> chi;
  /// chi on the H'-coset representatives, in coset order.
  std::vector<std::pair<int, Cyclotomic>> chi_table;
  Pseudoreflection primitive;
  int e = 0;
};

/// H-orbits of the hyperplanes of the pseudoreflections lying in H.
std::vector<HyperplaneOrbit> hyperplane_orbits(const Subgroup& h, const Subgroup& h_prime,
                                               const std::vector<Pseudoreflection>& prs);

struct CharacterCheck {
  int checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// chi(r) = det(r)^{-1} if r's hyperplane is in the orbit, else 1, for every
/// pseudoreflection r in H.
CharacterCheck character_values_check(const HyperplaneOrbit& orbit, const Subgroup& h,
                                      const std::vector<Pseudoreflection>& prs);

struct AbelianizationReport {
  struct Row {
    int coset_representative;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> table;
  int quotient_order = 0;
  long product_of_e = 1;
  bool well_defined = true;
  bool values_in_mu = true;
  bool injective = true;
  bool ok() const { return well_defined && values_in_mu && injective && quotient_order == product_of_e; }
};

/// H/H' -> mu_{e_1} x ... x mu_{e_k} induced by the orbit characters.
AbelianizationReport abelianization_isomorphism(const Subgroup& h, const Subgroup& h_prime,
                                                const std::vector<HyperplaneOrbit>& orbits);

/// Groups of H-orbit indices fused by the action of G.
std::vector<std::vector<int>> fuse_orbits(const Subgroup& g, const std::vector<HyperplaneOrbit>& orbits);

}  // namespace quot
