#pragma once

// Finite matrix groups given by generators, with subgroup bookkeeping done on
// element indices through a precomputed multiplication table.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "quot/cyclotomic.hpp"

namespace quot {

inline constexpr std::size_t kDefaultMaxOrder = 2000;

class MatrixGroup {
 public:
  /// Breadth-first closure from the identity, generators applied on the
  /// right in input order.  Element 0 is the identity.
  static std::shared_ptr<const MatrixGroup> close(const std::vector<Matrix>& generators, int dimension, int conductor,
                                                  std::size_t max_order = kDefaultMaxOrder);

  int dimension() const { return dim_; }
  const CyclotomicField& field() const { return *field_; }
  int conductor() const { return field_->conductor(); }
  int order() const { return static_cast<int>(elements_.size()); }

  const Matrix& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Matrix>& elements() const { return elements_; }
  /// Indices of the input generators (after deduplication).
  const std::vector<int>& generators() const { return generators_; }

  int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverses_[static_cast<std::size_t>(a)]; }
  int conjugate(int g, int h) const { return multiply(multiply(g, h), inverse(g)); }
  int commutator(int a, int b) const { return multiply(multiply(a, b), multiply(inverse(a), inverse(b))); }
  int element_order(int a) const;
  const Cyclotomic& determinant(int a) const { return dets_[static_cast<std::size_t>(a)]; }

  std::optional<int> find(const Matrix& m) const;

 private:
  MatrixGroup() = default;

  int dim_ = 0;
  const CyclotomicField* field_ = nullptr;
  std::vector<Matrix> elements_;
  std::vector<int> generators_;
  std::vector<int> table_;
  std::vector<int> inverses_;
  std::vector<Cyclotomic> dets_;
  std::multimap<std::size_t, int> by_hash_;
};

using GroupPtr = std::shared_ptr<const MatrixGroup>;

/// A subgroup of a MatrixGroup, as sorted member indices plus generators.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<int> members, std::vector<int> generators);

  static Subgroup whole(GroupPtr parent);

  const MatrixGroup& parent() const { return *parent_; }
  const GroupPtr& parent_ptr() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<int>& generators() const { return generators_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int element) const { return mask_[static_cast<std::size_t>(element)]; }
  bool is_trivial() const { return members_.size() == 1; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> generators_;
  std::vector<bool> mask_;
};

Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& seeds);

/// Normal closure in H of the commutators of H's generators.
Subgroup commutator_subgroup(const Subgroup& h);

/// H normal in G, tested on generators (H <= G assumed).
bool is_normal(const Subgroup& g, const Subgroup& h);

struct CosetDecomposition {
  /// Left cosets gH as sorted index lists, ordered by representative.
  std::vector<std::vector<int>> cosets;
  /// Smallest index in each coset.
  std::vector<int> representatives;
  /// Coset number of each parent element (-1 outside G).
  std::vector<int> coset_of;
  bool normal = false;

  int size() const { return static_cast<int>(cosets.size()); }
  /// Product in G/H; only meaningful when H is normal.
  int multiply(const MatrixGroup& parent, int a, int b) const;
};

/// Raises InputError when `require_group` and H is not normal in G.
CosetDecomposition coset_decomposition(const Subgroup& g, const Subgroup& h, bool require_group = false);

/// det of each member of H (each value checked to be a root of unity).
std::map<int, Cyclotomic> determinant_character(const Subgroup& h);

}  // namespace quot
