#include "quot/matrix_group.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "quot/errors.hpp"
#include "quot/linalg.hpp"

namespace quot {

std::shared_ptr<const MatrixGroup> MatrixGroup::close(const std::vector<Matrix>& generators, int dimension,
                                                      int conductor, std::size_t max_order) {
  if (dimension < 1) throw InputError("group dimension must be positive");
  std::shared_ptr<MatrixGroup> g(new MatrixGroup());
  g->dim_ = dimension;
  g->field_ = &CyclotomicField::get(conductor);

  std::vector<Matrix> gens;
  gens.reserve(generators.size());
  for (const auto& m : generators) {
    if (m.rows() != dimension || m.cols() != dimension) {
      throw InputError("generator is not a " + std::to_string(dimension) + "x" + std::to_string(dimension) + " matrix");
    }
    Matrix b = bind_matrix(m, *g->field_);
    if (quot::determinant<Cyclotomic>(b).is_zero()) throw InputError("generator is not invertible");
    gens.push_back(std::move(b));
  }

  auto lookup = [&](const Matrix& m) -> std::optional<int> {
    const std::size_t h = hash_matrix(m);
    auto [lo, hi] = g->by_hash_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (matrices_equal(g->elements_[static_cast<std::size_t>(it->second)], m)) return it->second;
    }
    return std::nullopt;
  };
  auto insert = [&](Matrix m) {
    if (g->elements_.size() >= max_order) {
      throw BoundError("group too large / possibly infinite: closure exceeded " + std::to_string(max_order) +
                       " elements");
    }
    const int idx = static_cast<int>(g->elements_.size());
    g->by_hash_.emplace(hash_matrix(m), idx);
    g->elements_.push_back(std::move(m));
    return idx;
  };

  insert(identity_matrix(dimension, *g->field_));
  const std::size_t ng = gens.size();
  std::vector<std::vector<int>> right;  // right[i][k] = index of elements[i] * gens[k]
  std::vector<int> parent{0};
  std::vector<int> via{-1};
  for (std::size_t i = 0; i < g->elements_.size(); ++i) {
    right.emplace_back(ng, -1);
    for (std::size_t k = 0; k < ng; ++k) {
      Matrix p = g->elements_[i] * gens[k];
      auto found = lookup(p);
      int idx = found ? *found : -1;
      if (!found) {
        idx = insert(std::move(p));
        parent.push_back(static_cast<int>(i));
        via.push_back(static_cast<int>(k));
      }
      right[i][k] = idx;
    }
  }

  for (std::size_t k = 0; k < ng; ++k) {
    const int idx = right[0][k];
    if (std::find(g->generators_.begin(), g->generators_.end(), idx) == g->generators_.end()) {
      g->generators_.push_back(idx);
    }
  }

  const std::size_t n = g->elements_.size();
  g->table_.assign(n * n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    g->table_[a * n] = static_cast<int>(a);
    for (std::size_t b = 1; b < n; ++b) {
      const int left = g->table_[a * n + static_cast<std::size_t>(parent[b])];
      g->table_[a * n + b] = right[static_cast<std::size_t>(left)][static_cast<std::size_t>(via[b])];
    }
  }
  g->inverses_.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g->table_[a * n + b] == 0) {
        g->inverses_[a] = static_cast<int>(b);
        break;
      }
    }
  }
  g->dets_.reserve(n);
  for (const auto& m : g->elements_) g->dets_.push_back(quot::determinant<Cyclotomic>(m));
  return g;
}

int MatrixGroup::element_order(int a) const {
  int k = 1;
  int p = a;
  while (p != 0) {
    p = multiply(p, a);
    ++k;
  }
  return k;
}

std::optional<int> MatrixGroup::find(const Matrix& m) const {
  if (m.rows() != dim_ || m.cols() != dim_) return std::nullopt;
  const Matrix b = bind_matrix(m, *field_);
  auto [lo, hi] = by_hash_.equal_range(hash_matrix(b));
  for (auto it = lo; it != hi; ++it) {
    if (matrices_equal(elements_[static_cast<std::size_t>(it->second)], b)) return it->second;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members, std::vector<int> generators)
    : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
  mask_.assign(static_cast<std::size_t>(parent_->order()), false);
  for (int m : members_) mask_[static_cast<std::size_t>(m)] = true;
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(static_cast<std::size_t>(parent->order()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<int> gens = parent->generators();
  gens.erase(std::remove(gens.begin(), gens.end(), 0), gens.end());
  return Subgroup(std::move(parent), std::move(all), std::move(gens));
}

Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<int>& seeds) {
  std::vector<int> gens;
  for (int s : seeds) {
    if (s < 0 || s >= parent->order()) throw InputError("subgroup seed index out of range");
    if (s != 0 && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  }
  std::vector<bool> seen(static_cast<std::size_t>(parent->order()), false);
  std::vector<int> members{0};
  seen[0] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : gens) {
      const int p = parent->multiply(members[i], s);
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        members.push_back(p);
      }
    }
  }
  return Subgroup(parent, std::move(members), std::move(gens));
}

Subgroup commutator_subgroup(const Subgroup& h) {
  const MatrixGroup& g = h.parent();
  std::vector<int> gens;
  for (int a : h.generators()) {
    for (int b : h.generators()) {
      const int c = g.commutator(a, b);
      if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
    }
  }
  Subgroup n = subgroup_generated(h.parent_ptr(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : h.generators()) {
      for (int y : n.generators()) {
        const int c = g.conjugate(x, y);
        if (!n.contains(c)) {
          gens.push_back(c);
          changed = true;
        }
      }
      if (changed) break;
    }
    if (changed) n = subgroup_generated(h.parent_ptr(), gens);
  }
  return n;
}

bool is_normal(const Subgroup& g, const Subgroup& h) {
  for (int x : g.generators()) {
    for (int y : h.generators()) {
      if (!h.contains(g.parent().conjugate(x, y))) return false;
    }
  }
  return true;
}

int CosetDecomposition::multiply(const MatrixGroup& parent, int a, int b) const {
  const int p = parent.multiply(representatives[static_cast<std::size_t>(a)], representatives[static_cast<std::size_t>(b)]);
  return coset_of[static_cast<std::size_t>(p)];
}

CosetDecomposition coset_decomposition(const Subgroup& g, const Subgroup& h, bool require_group) {
  const MatrixGroup& parent = g.parent();
  CosetDecomposition out;
  out.normal = is_normal(g, h);
  if (require_group && !out.normal) throw InputError("coset group requested for a non-normal subgroup");
  out.coset_of.assign(static_cast<std::size_t>(parent.order()), -1);
  for (int x : g.members()) {
    if (out.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> coset;
    coset.reserve(h.members().size());
    for (int y : h.members()) coset.push_back(parent.multiply(x, y));
    std::sort(coset.begin(), coset.end());
    const int id = static_cast<int>(out.cosets.size());
    for (int c : coset) out.coset_of[static_cast<std::size_t>(c)] = id;
    out.representatives.push_back(coset.front());
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

std::map<int, Cyclotomic> determinant_character(const Subgroup& h) {
  std::map<int, Cyclotomic> out;
  for (int x : h.members()) {
    const Cyclotomic& d = h.parent().determinant(x);
    if (!d.root_of_unity_order()) throw InternalError("determinant of a group element is not a root of unity");
    out.emplace(x, d);
  }
  return out;
}

}  // namespace quot
