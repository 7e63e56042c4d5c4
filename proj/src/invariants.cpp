#include "quot/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "quot/errors.hpp"
#include "quot/linalg.hpp"

namespace quot {

PolyAction::PolyAction(GroupPtr group) : group_(std::move(group)) {
  const int n = group_->dimension();
  forms_.resize(static_cast<std::size_t>(group_->order()));
  cache_.resize(static_cast<std::size_t>(group_->order()));
  for (int x = 0; x < group_->order(); ++x) {
    const Matrix& inv = group_->element(group_->inverse(x));
    auto& f = forms_[static_cast<std::size_t>(x)];
    for (int i = 0; i < n; ++i) {
      Poly l(n);
      for (int j = 0; j < n; ++j) l += Poly::variable(n, j, inv(i, j));
      f.push_back(std::move(l));
    }
  }
}

const Poly& PolyAction::act_monomial(int element, const Exponent& e) {
  auto& cache = cache_[static_cast<std::size_t>(element)];
  auto it = cache.find(e);
  if (it != cache.end()) return it->second;
  std::size_t k = 0;
  while (k < e.size() && e[k] == 0) ++k;
  Poly value = Poly::constant(group_->dimension(), Cyclotomic(1));
  if (k < e.size()) {
    Exponent rest = e;
    --rest[k];
    value = act_monomial(element, rest) * forms_[static_cast<std::size_t>(element)][k];
  }
  return cache.emplace(e, std::move(value)).first->second;
}

Poly PolyAction::act(int element, const Poly& p) {
  Poly out(p.num_vars());
  for (const auto& [e, c] : p.terms()) out += act_monomial(element, e) * c;
  return out;
}

Matrix PolyAction::degree_matrix(int element, const MonomialBasis& basis) {
  Matrix m(basis.size(), basis.size());
  for (Eigen::Index i = 0; i < basis.size(); ++i) m.row(i) = basis.to_row(act_monomial(element, basis.at(i)));
  return m;
}

Poly reynolds(const Subgroup& h, const Poly& p) {
  PolyAction action(h.parent_ptr());
  Poly sum(p.num_vars());
  for (int x : h.members()) sum += action.act(x, p);
  return sum * Cyclotomic(Rational(1, h.order()));
}

// ---------------------------------------------------------------------------

namespace {

struct UPolyLess {
  bool operator()(const UPoly<Cyclotomic>& a, const UPoly<Cyclotomic>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto c = compare(a[i], b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

MolienSeries molien(const Subgroup& h) {
  std::map<UPoly<Cyclotomic>, long, UPolyLess> classes;
  for (int x : h.members()) ++classes[det_one_minus_tg(h.parent().element(x))];

  UPoly<Cyclotomic> den{Cyclotomic(1)};
  for (const auto& [p, count] : classes) {
    const auto g = upoly_gcd(den, p);
    den = upoly_divmod(upoly_mul(den, p), g).first;
  }
  UPoly<Cyclotomic> num;
  for (const auto& [p, count] : classes) {
    num = upoly_add(num, upoly_scale(upoly_divmod(den, p).first, Cyclotomic(count)));
  }
  num = upoly_scale(num, Cyclotomic(Rational(1, h.order())));
  const auto g = upoly_gcd(num, den);
  num = upoly_divmod(num, g).first;
  den = upoly_divmod(den, g).first;
  const Cyclotomic c0 = den.front().inverse();
  return {upoly_scale(num, c0), upoly_scale(den, c0)};
}

std::vector<long> MolienSeries::expansion(int upto) const {
  std::vector<Cyclotomic> s;
  std::vector<long> out;
  for (int k = 0; k <= upto; ++k) {
    Cyclotomic v = static_cast<std::size_t>(k) < numerator.size() ? numerator[static_cast<std::size_t>(k)] : Cyclotomic(0);
    for (std::size_t j = 1; j < denominator.size() && j <= static_cast<std::size_t>(k); ++j) {
      v -= denominator[j] * s[static_cast<std::size_t>(k) - j];
    }
    if (!v.is_rational()) throw InternalError("Molien coefficient is not rational");
    const Rational q = v.rational();
    if (q.get_den() != 1 || q < 0) throw InternalError("Molien coefficient is not a non-negative integer: " + q.get_str());
    out.push_back(q.get_num().get_si());
    s.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

Matrix invariant_space_rows(const Subgroup& h, int d, PolyAction& action) {
  const MonomialBasis basis(h.parent().dimension(), d);
  const Eigen::Index n = basis.size();
  const auto& gens = h.generators();
  if (gens.empty()) {
    Matrix id = Matrix::Constant(n, n, Cyclotomic(0));
    for (Eigen::Index i = 0; i < n; ++i) id(i, i) = Cyclotomic(1);
    return id;
  }
  Matrix stacked(n * static_cast<Eigen::Index>(gens.size()), n);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    Matrix a = action.degree_matrix(gens[k], basis);
    for (Eigen::Index i = 0; i < n; ++i) a(i, i) -= Cyclotomic(1);
    stacked.block(static_cast<Eigen::Index>(k) * n, 0, n, n) = a.transpose();
  }
  return kernel_basis<Cyclotomic>(std::move(stacked));
}

std::vector<Poly> invariant_space(const Subgroup& h, int d) {
  PolyAction action(h.parent_ptr());
  return MonomialBasis(h.parent().dimension(), d).from_rows(invariant_space_rows(h, d, action));
}

int reynolds_image_dimension(const Subgroup& h, int d) {
  PolyAction action(h.parent_ptr());
  const MonomialBasis basis(h.parent().dimension(), d);
  Matrix r = Matrix::Constant(basis.size(), basis.size(), Cyclotomic(0));
  for (int x : h.members()) r += action.degree_matrix(x, basis);
  return static_cast<int>(rank<Cyclotomic>(std::move(r)));
}

InvariantDimension invariant_dimension(const Subgroup& h, int d) {
  return {molien(h).expansion(d).back(), reynolds_image_dimension(h, d)};
}

// ---------------------------------------------------------------------------

namespace {

// New generators in degree d: invariants reduced modulo the decomposable
// piece, then echelonized.
std::vector<Poly> sweep_degree(const Subgroup& h, int d, PolyAction& action, const std::vector<Poly>& chosen) {
  const int n = h.parent().dimension();
  const MonomialBasis basis(n, d);
  const Matrix inv = invariant_space_rows(h, d, action);
  if (inv.rows() == 0) return {};
  SubalgebraProducts sp(chosen, n);
  const Matrix dec = sp.graded_piece_rows(d);
  Matrix reduced(inv.rows(), inv.cols());
  for (Eigen::Index i = 0; i < inv.rows(); ++i) reduced.row(i) = reduce_modulo(inv.row(i), dec);
  return basis.from_rows(row_space_basis<Cyclotomic>(std::move(reduced)));
}

int certify(const std::vector<Poly>& gens, int n, const MolienSeries& series, int upto) {
  const auto coeffs = series.expansion(upto);
  SubalgebraProducts sp(gens, n);
  for (int d = 0; d <= upto; ++d) {
    if (sp.graded_piece_dimension(d) != coeffs[static_cast<std::size_t>(d)]) return d - 1;
  }
  return upto;
}

}  // namespace

InvariantGenerators fundamental_invariants(const Subgroup& h) {
  const int n = h.parent().dimension();
  {
    std::vector<int> seeds;
    for (int x : h.members()) {
      if (x != 0 && is_pseudoreflection(h.parent().element(x))) seeds.push_back(x);
    }
    if (!(subgroup_generated(h.parent_ptr(), seeds) == h)) {
      throw InputError("fundamental_invariants: subgroup is not generated by pseudoreflections");
    }
  }
  PolyAction action(h.parent_ptr());
  InvariantGenerators out;
  for (int d = 1; static_cast<int>(out.gens.size()) < n; ++d) {
    if (d > h.order()) throw InternalError("invariant sweep passed degree |H| without finding n generators");
    for (auto& g : sweep_degree(h, d, action, out.gens)) {
      out.gens.push_back(std::move(g));
      out.degrees.push_back(d);
    }
  }
  long prod = 1;
  for (int d : out.degrees) prod *= d;
  if (static_cast<int>(out.gens.size()) != n || prod != h.order()) {
    throw InternalError("fundamental invariants contradict Chevalley-Shephard-Todd (product of degrees " +
                        std::to_string(prod) + ", |H| = " + std::to_string(h.order()) + ")");
  }
  out.complete = true;
  out.certified_through = *std::max_element(out.degrees.begin(), out.degrees.end());
  return out;
}

InvariantGenerators general_invariant_generators(const Subgroup& h, int degree_bound) {
  if (degree_bound < 1) throw InputError("degree bound must be at least 1");
  const int n = h.parent().dimension();
  PolyAction action(h.parent_ptr());
  InvariantGenerators out;
  for (int d = 1; d <= degree_bound; ++d) {
    for (auto& g : sweep_degree(h, d, action, out.gens)) {
      out.gens.push_back(std::move(g));
      out.degrees.push_back(d);
    }
  }
  out.certified_through = certify(out.gens, n, molien(h), degree_bound);
  out.complete = out.certified_through == degree_bound && degree_bound >= h.order();
  return out;
}

InvariantGenerators semi_invariant_generators(const Subgroup& h, const Subgroup& h_prime,
                                              const std::vector<HyperplaneOrbit>& orbits,
                                              const InvariantGenerators& base, int certify_degree) {
  const int n = h.parent().dimension();
  PolyAction action(h.parent_ptr());
  InvariantGenerators out = base;
  for (const auto& o : orbits) {
    for (int x : h_prime.generators()) {
      if (!(action.act(x, o.f) == o.f)) throw InternalError("orbit product is not H'-invariant");
    }
    out.gens.push_back(o.f);
    out.degrees.push_back(o.f.degree());
  }
  const int reached = certify(out.gens, n, molien(h_prime), certify_degree);
  if (reached < certify_degree) {
    throw InternalError("V/H' generation certification failed in degree " + std::to_string(reached + 1));
  }
  out.certified_through = certify_degree;
  out.complete = true;
  return out;
}

InvariantGenerators echelon_generators(const std::vector<Poly>& gens, int num_vars) {
  std::map<int, std::vector<Poly>> by_degree;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous() || g.degree() < 1) throw InputError("generators must be homogeneous of positive degree");
    by_degree[g.degree()].push_back(g);
  }
  InvariantGenerators out;
  for (const auto& [d, polys] : by_degree) {
    const MonomialBasis basis(num_vars, d);
    SubalgebraProducts sp(out.gens, num_vars);
    const Matrix dec = sp.graded_piece_rows(d);
    Matrix rows = basis.to_rows(polys);
    for (Eigen::Index i = 0; i < rows.rows(); ++i) rows.row(i) = reduce_modulo(rows.row(i), dec);
    for (auto& g : basis.from_rows(row_space_basis<Cyclotomic>(std::move(rows)))) {
      out.gens.push_back(std::move(g));
      out.degrees.push_back(d);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RelationSet find_relations(const std::vector<Poly>& gens, int num_vars, int max_weighted_degree) {
  SubalgebraProducts sp(gens, num_vars);
  const int r = sp.num_generators();
  RelationSet out;
  for (int d = 1; d <= max_weighted_degree; ++d) {
    const auto monos = sp.abstract_monomials(d);
    if (monos.size() < 2) continue;
    const MonomialBasis basis(num_vars, d);
    Matrix eval(static_cast<Eigen::Index>(monos.size()), basis.size());
    for (std::size_t i = 0; i < monos.size(); ++i) eval.row(static_cast<Eigen::Index>(i)) = basis.to_row(sp.product(monos[i]));
    Matrix kernel = kernel_basis<Cyclotomic>(eval.transpose());
    if (kernel.rows() == 0) continue;

    std::map<Exponent, Eigen::Index> where;
    for (std::size_t i = 0; i < monos.size(); ++i) where.emplace(monos[i], static_cast<Eigen::Index>(i));
    std::vector<RowVector> multiples;
    for (std::size_t k = 0; k < out.relations.size(); ++k) {
      for (const auto& u : sp.abstract_monomials(d - out.weighted_degrees[k])) {
        const Poly m = Poly::monomial(u) * out.relations[k];
        RowVector row = RowVector::Constant(static_cast<Eigen::Index>(monos.size()), Cyclotomic(0));
        for (const auto& [e, c] : m.terms()) row(where.at(e)) = c;
        multiples.push_back(std::move(row));
      }
    }
    Matrix ideal(static_cast<Eigen::Index>(multiples.size()), static_cast<Eigen::Index>(monos.size()));
    for (std::size_t i = 0; i < multiples.size(); ++i) ideal.row(static_cast<Eigen::Index>(i)) = multiples[i];
    ideal = row_space_basis<Cyclotomic>(std::move(ideal));
    if (ideal.rows() == kernel.rows()) continue;

    for (Eigen::Index i = 0; i < kernel.rows(); ++i) kernel.row(i) = reduce_modulo(kernel.row(i), ideal);
    const Matrix fresh = row_space_basis<Cyclotomic>(std::move(kernel));
    for (Eigen::Index i = 0; i < fresh.rows(); ++i) {
      Poly rel(r);
      for (std::size_t j = 0; j < monos.size(); ++j) rel.add_term(monos[j], fresh(i, static_cast<Eigen::Index>(j)));
      out.relations.push_back(std::move(rel));
      out.weighted_degrees.push_back(d);
    }
  }
  return out;
}

Poly jacobian_determinant(const std::vector<Poly>& gens) {
  if (gens.empty()) throw InputError("jacobian of an empty list");
  const int n = gens.front().num_vars();
  if (static_cast<int>(gens.size()) != n) throw InputError("jacobian needs as many polynomials as variables");
  std::vector<std::vector<Poly>> jac(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) jac[static_cast<std::size_t>(i)].push_back(derivative(gens[static_cast<std::size_t>(i)], j));
  }
  return determinant_by_minors(jac, Poly(n), Poly::constant(n, Cyclotomic(1)));
}

std::optional<Poly> express_in_generators(SubalgebraProducts& sp, const Poly& p) {
  const int r = sp.num_generators();
  if (p.is_zero()) return Poly(r);
  if (!p.is_homogeneous()) throw InputError("express_in_generators needs a homogeneous polynomial");
  const int d = p.degree();
  const auto monos = sp.abstract_monomials(d);
  const MonomialBasis basis(sp.num_vars(), d);
  Matrix eval(basis.size(), static_cast<Eigen::Index>(monos.size()));
  for (std::size_t i = 0; i < monos.size(); ++i) eval.col(static_cast<Eigen::Index>(i)) = basis.to_row(sp.product(monos[i])).transpose();
  const auto sol = solve<Cyclotomic>(eval, Vector(basis.to_row(p).transpose()));
  if (!sol) return std::nullopt;
  Poly out(r);
  for (std::size_t i = 0; i < monos.size(); ++i) out.add_term(monos[i], (*sol)(static_cast<Eigen::Index>(i)));
  return out;
}

}  // namespace quot
