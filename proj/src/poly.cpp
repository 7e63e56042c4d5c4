#include <algorithm>

#include "quot/graded.hpp"
#include "quot/linalg.hpp"
#include "quot/poly.hpp"

namespace quot {

namespace {

void compositions(int n, int d, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos + 1 == static_cast<std::size_t>(n)) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    compositions(n, d - k, pos + 1, cur, out);
  }
}

void weighted(const std::vector<int>& w, int d, std::size_t pos, Exponent& cur, std::vector<Exponent>& out) {
  if (pos == w.size()) {
    if (d == 0) out.push_back(cur);
    return;
  }
  for (int k = d / w[pos]; k >= 0; --k) {
    cur[pos] = k;
    weighted(w, d - k * w[pos], pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int n, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponent cur(static_cast<std::size_t>(n), 0);
  compositions(n, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

std::vector<Poly> coefficients_in(const Poly& p, int var) {
  if (var < 0 || var >= p.num_vars()) throw InputError("coefficients_in: variable out of range");
  int deg = -1;
  for (const auto& [e, c] : p.terms()) deg = std::max(deg, e[static_cast<std::size_t>(var)]);
  std::vector<Poly> out(static_cast<std::size_t>(deg + 1), Poly(p.num_vars()));
  for (const auto& [e, c] : p.terms()) {
    Exponent f = e;
    const int k = f[static_cast<std::size_t>(var)];
    f[static_cast<std::size_t>(var)] = 0;
    out[static_cast<std::size_t>(k)].add_term(f, c);
  }
  return out;
}

Poly resultant(const Poly& f, const Poly& g, int var) {
  if (f.is_zero() || g.is_zero()) throw InputError("resultant of the zero polynomial");
  if (f.num_vars() != g.num_vars()) throw InputError("resultant: variable count mismatch");
  const auto cf = coefficients_in(f, var);
  const auto cg = coefficients_in(g, var);
  const std::size_t m = cf.size() - 1;
  const std::size_t k = cg.size() - 1;
  const std::size_t size = m + k;
  const int n = f.num_vars();
  const Poly zero(n);
  const Poly one = Poly::constant(n, Cyclotomic(1));
  std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, zero));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j <= m; ++j) syl[i][i + j] = cf[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= k; ++j) syl[k + i][i + j] = cg[k - j];
  }
  return determinant_by_minors(syl, zero, one);
}

// ---------------------------------------------------------------------------

MonomialBasis::MonomialBasis(int num_vars, int degree) : n_(num_vars), d_(degree), monos_(monomials_of_degree(num_vars, degree)) {
  for (std::size_t i = 0; i < monos_.size(); ++i) index_.emplace(monos_[i], static_cast<Eigen::Index>(i));
}

std::optional<Eigen::Index> MonomialBasis::index(const Exponent& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RowVector MonomialBasis::to_row(const Poly& p) const {
  RowVector row(size());
  row.setConstant(Cyclotomic(0));
  for (const auto& [e, c] : p.terms()) {
    auto idx = index(e);
    if (!idx) throw InputError("polynomial is not homogeneous of degree " + std::to_string(d_));
    row(*idx) = c;
  }
  return row;
}

Poly MonomialBasis::from_row(const RowVector& row) const {
  Poly p(n_);
  for (Eigen::Index i = 0; i < row.size(); ++i) p.add_term(at(i), row(i));
  return p;
}

Matrix MonomialBasis::to_rows(const std::vector<Poly>& polys) const {
  Matrix m(static_cast<Eigen::Index>(polys.size()), size());
  for (std::size_t i = 0; i < polys.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = to_row(polys[i]);
  return m;
}

std::vector<Poly> MonomialBasis::from_rows(const Matrix& rows) const {
  std::vector<Poly> out;
  out.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index i = 0; i < rows.rows(); ++i) out.push_back(from_row(rows.row(i)));
  return out;
}

RowVector reduce_modulo(RowVector v, const Matrix& rref_rows) {
  for (Eigen::Index r = 0; r < rref_rows.rows(); ++r) {
    Eigen::Index piv = 0;
    while (piv < rref_rows.cols() && rref_rows(r, piv).is_zero()) ++piv;
    if (piv == rref_rows.cols() || v(piv).is_zero()) continue;
    const Cyclotomic f = v(piv);
    for (Eigen::Index k = piv; k < v.size(); ++k) {
      if (!rref_rows(r, k).is_zero()) v(k) -= f * rref_rows(r, k);
    }
  }
  return v;
}

// ---------------------------------------------------------------------------

SubalgebraProducts::SubalgebraProducts(std::vector<Poly> gens, int num_vars) : n_(num_vars), gens_(std::move(gens)) {
  for (const auto& g : gens_) {
    if (g.num_vars() != n_) throw InputError("generator lives in the wrong polynomial ring");
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 1) {
      throw InputError("subalgebra generators must be nonzero homogeneous of positive degree");
    }
    weights_.push_back(g.degree());
  }
}

std::vector<Exponent> SubalgebraProducts::abstract_monomials(int d) const {
  std::vector<Exponent> out;
  if (d < 0) return out;
  Exponent cur(gens_.size(), 0);
  weighted(weights_, d, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

const Poly& SubalgebraProducts::product(const Exponent& a) {
  auto it = products_.find(a);
  if (it != products_.end()) return it->second;
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0) ++i;
  Poly value = Poly::constant(n_, Cyclotomic(1));
  if (i < a.size()) {
    Exponent b = a;
    --b[i];
    value = product(b) * gens_[i];
  }
  return products_.emplace(a, std::move(value)).first->second;
}

Matrix SubalgebraProducts::graded_piece_rows(int d) {
  const MonomialBasis basis(n_, d);
  const auto monos = abstract_monomials(d);
  Matrix m(static_cast<Eigen::Index>(monos.size()), basis.size());
  for (std::size_t i = 0; i < monos.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = basis.to_row(product(monos[i]));
  return row_space_basis<Cyclotomic>(std::move(m));
}

std::vector<Poly> SubalgebraProducts::graded_piece_basis(int d) {
  return MonomialBasis(n_, d).from_rows(graded_piece_rows(d));
}

int SubalgebraProducts::graded_piece_dimension(int d) { return static_cast<int>(graded_piece_rows(d).rows()); }

std::vector<Poly> graded_piece_basis(const std::vector<Poly>& polys, int d, int num_vars) {
  SubalgebraProducts sp(polys, num_vars);
  return sp.graded_piece_basis(d);
}

}  // namespace quot
