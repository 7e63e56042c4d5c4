#include "quot/catalog.hpp"

#include <numeric>

#include "quot/errors.hpp"

namespace quot {

namespace {

Matrix zeros(int n, const CyclotomicField& f) {
  Matrix m(n, n);
  m.setConstant(Cyclotomic::zero(f));
  return m;
}

// Column i is the image of basis vector i.
Matrix permutation_matrix(const std::vector<int>& sigma, const CyclotomicField& f) {
  const int n = static_cast<int>(sigma.size());
  Matrix m = zeros(n, f);
  for (int i = 0; i < n; ++i) m(sigma[static_cast<std::size_t>(i)], i) = Cyclotomic::one(f);
  return m;
}

// sigma acting on the basis b_i = e_i - e_{i+1} of the sum-zero hyperplane.
Matrix standard_matrix(const std::vector<int>& sigma, const CyclotomicField& f) {
  const int n = static_cast<int>(sigma.size());
  Matrix m = zeros(n - 1, f);
  for (int i = 0; i < n - 1; ++i) {
    const int a = sigma[static_cast<std::size_t>(i)];
    const int b = sigma[static_cast<std::size_t>(i + 1)];
    // e_a - e_b = +-(b_lo + ... + b_{hi-1})
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const Cyclotomic s = a < b ? Cyclotomic::one(f) : -Cyclotomic::one(f);
    for (int k = lo; k < hi; ++k) m(k, i) = s;
  }
  return m;
}

}  // namespace

GroupPtr close_group(const GroupDescription& d, std::size_t max_order) {
  return MatrixGroup::close(d.generators, d.dimension, d.conductor, max_order);
}

GroupDescription symmetric_group(int n, SymmetricRep rep, int conductor) {
  if (n < 2 || n > 5) throw InputError("symmetric_group: n must lie in 2..5");
  const auto& f = CyclotomicField::get(conductor);
  std::vector<int> transposition(static_cast<std::size_t>(n));
  std::vector<int> cycle(static_cast<std::size_t>(n));
  std::iota(transposition.begin(), transposition.end(), 0);
  std::swap(transposition[0], transposition[1]);
  for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
  GroupDescription d;
  d.conductor = conductor;
  if (rep == SymmetricRep::Full) {
    d.dimension = n;
    d.generators = {permutation_matrix(transposition, f), permutation_matrix(cycle, f)};
  } else {
    d.dimension = n - 1;
    d.generators = {standard_matrix(transposition, f), standard_matrix(cycle, f)};
  }
  return d;
}

GroupDescription cyclic_diagonal(int m, const std::vector<int>& weights, int conductor) {
  if (m < 1) throw InputError("cyclic_diagonal: m must be positive");
  if (weights.empty()) throw InputError("cyclic_diagonal: need at least one weight");
  if (conductor == 0) conductor = m;
  if (conductor % m != 0) {
    throw InputError("cyclic_diagonal: conductor " + std::to_string(conductor) + " is not divisible by " +
                     std::to_string(m));
  }
  const auto& f = CyclotomicField::get(conductor);
  const int n = static_cast<int>(weights.size());
  Matrix g = zeros(n, f);
  for (int i = 0; i < n; ++i) {
    const long w = ((weights[static_cast<std::size_t>(i)] % m) + m) % m;
    g(i, i) = Cyclotomic::zeta(f, static_cast<int>(w * (conductor / m)));
  }
  return {conductor, n, {g}, true};
}

GroupDescription dihedral_gl2(int m, int conductor) {
  if (m < 1) throw InputError("dihedral_gl2: m must be positive");
  if (conductor == 0) conductor = 2 * m;
  if (conductor % (2 * m) != 0) {
    throw InputError("dihedral_gl2: conductor " + std::to_string(conductor) + " is not divisible by " +
                     std::to_string(2 * m));
  }
  const auto& f = CyclotomicField::get(conductor);
  const int step = conductor / (2 * m);
  Matrix rot = zeros(2, f);
  rot(0, 0) = Cyclotomic::zeta(f, step);
  rot(1, 1) = Cyclotomic::zeta(f, conductor - step);
  Matrix swap = permutation_matrix({1, 0}, f);
  return {conductor, 2, {rot, swap}, true};
}

GroupDescription cuspidal_s3(int conductor) {
  if (conductor % 3 != 0) throw InputError("cuspidal_s3: conductor must be divisible by 3");
  const auto& f = CyclotomicField::get(conductor);
  const int step = conductor / 3;
  Matrix rot = zeros(2, f);
  rot(0, 0) = Cyclotomic::zeta(f, step);
  rot(1, 1) = Cyclotomic::zeta(f, 2 * step);
  return {conductor, 2, {rot, permutation_matrix({1, 0}, f)}, true};
}

GroupDescription trivial_group(int dimension, int conductor) {
  if (dimension < 1) throw InputError("trivial_group: dimension must be positive");
  return {conductor, dimension, {identity_matrix(dimension, CyclotomicField::get(conductor))}, true};
}

GroupDescription direct_product(const GroupDescription& a, const GroupDescription& b) {
  const int conductor = std::lcm(a.conductor, b.conductor);
  const auto& f = CyclotomicField::get(conductor);
  const int n = a.dimension + b.dimension;
  GroupDescription d;
  d.conductor = conductor;
  d.dimension = n;
  d.faithful = a.faithful && b.faithful;
  for (const auto& g : a.generators) {
    Matrix m = identity_matrix(n, f);
    m.topLeftCorner(a.dimension, a.dimension) = embed_matrix(g, f);
    d.generators.push_back(std::move(m));
  }
  for (const auto& g : b.generators) {
    Matrix m = identity_matrix(n, f);
    m.bottomRightCorner(b.dimension, b.dimension) = embed_matrix(g, f);
    d.generators.push_back(std::move(m));
  }
  return d;
}

std::vector<CatalogEntry> catalog_zoo() {
  std::vector<CatalogEntry> z;
  z.push_back({"trivial(2)", trivial_group(2), 1, true});
  for (int n = 2; n <= 4; ++n) {
    int fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    z.push_back({"symmetric(" + std::to_string(n) + ", full)", symmetric_group(n, SymmetricRep::Full), fact, true});
    z.push_back(
        {"symmetric(" + std::to_string(n) + ", standard)", symmetric_group(n, SymmetricRep::Standard), fact, true});
  }
  for (int m = 2; m <= 5; ++m) {
    z.push_back({"cyclic_diagonal(" + std::to_string(m) + ", [1, -1])", cyclic_diagonal(m, {1, -1}), m, false});
  }
  z.push_back({"cyclic_diagonal(3, [1, 2])", cyclic_diagonal(3, {1, 2}), 3, false});
  z.push_back({"cyclic_diagonal(2, [1])", cyclic_diagonal(2, {1}), 2, true});
  z.push_back({"cyclic_diagonal(3, [1])", cyclic_diagonal(3, {1}), 3, true});
  z.push_back({"cyclic_diagonal(4, [1])", cyclic_diagonal(4, {1}), 4, true});
  z.push_back({"cyclic_diagonal(4, [1, 1])", cyclic_diagonal(4, {1, 1}), 4, false});
  z.push_back({"cyclic_diagonal(4, [1, 2])", cyclic_diagonal(4, {1, 2}), 4, false});
  for (int m = 1; m <= 4; ++m) {
    z.push_back({"dihedral_gl2(" + std::to_string(m) + ")", dihedral_gl2(m), 4 * m, true});
  }
  z.push_back({"cuspidal_s3", cuspidal_s3(), 6, true});
  z.push_back({"direct_product(cyclic_diagonal(2, [1]), cyclic_diagonal(3, [1, -1]))",
               direct_product(cyclic_diagonal(2, {1}), cyclic_diagonal(3, {1, -1})), 6, false});
  z.push_back({"direct_product(trivial(1), dihedral_gl2(2))", direct_product(trivial_group(1), dihedral_gl2(2)), 8, true});
  z.push_back({"direct_product(symmetric(2, standard), dihedral_gl2(1))",
               direct_product(symmetric_group(2, SymmetricRep::Standard), dihedral_gl2(1)), 8, true});
  return z;
}

}  // namespace quot
