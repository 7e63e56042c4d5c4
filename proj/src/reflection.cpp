#include "quot/reflection.hpp"

#include <algorithm>
#include <set>

#include "quot/errors.hpp"
#include "quot/linalg.hpp"

namespace quot {

LinearForm::LinearForm(const RowVector& coeffs) : coeffs_(coeffs) {
  Eigen::Index lead = 0;
  while (lead < coeffs_.size() && coeffs_(lead).is_zero()) ++lead;
  if (lead == coeffs_.size()) throw InputError("zero linear form");
  const Cyclotomic inv = coeffs_(lead).inverse();
  for (Eigen::Index i = lead; i < coeffs_.size(); ++i) coeffs_(i) *= inv;
}

Poly LinearForm::poly() const {
  const int n = dimension();
  Poly p(n);
  for (int j = 0; j < n; ++j) p.add_term([&] {
      Exponent e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(j)] = 1;
      return e;
    }(), coeffs_(j));
  return p;
}

LinearForm LinearForm::transformed(const Matrix& g_inverse) const {
  return LinearForm(RowVector(coeffs_ * g_inverse));
}

bool operator==(const LinearForm& a, const LinearForm& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (Eigen::Index i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_(i) == b.coeffs_(i))) return false;
  }
  return true;
}

bool operator<(const LinearForm& a, const LinearForm& b) {
  for (Eigen::Index i = 0; i < std::min(a.coeffs_.size(), b.coeffs_.size()); ++i) {
    const auto c = compare(a.coeffs_(i), b.coeffs_(i));
    if (c != 0) return c < 0;
  }
  return a.coeffs_.size() < b.coeffs_.size();
}

bool is_pseudoreflection(const Matrix& g) {
  Matrix d = g;
  for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, i) -= Cyclotomic(1);
  return rank<Cyclotomic>(d) == 1;
}

std::vector<Pseudoreflection> find_pseudoreflections(const MatrixGroup& g) {
  std::vector<Pseudoreflection> out;
  for (int i = 1; i < g.order(); ++i) {
    Matrix d = g.element(i);
    for (Eigen::Index k = 0; k < d.rows(); ++k) d(k, k) -= Cyclotomic(1);
    if (rank<Cyclotomic>(d) != 1) continue;
    Eigen::Index row = 0;
    while (d.row(row).unaryExpr([](const Cyclotomic& c) { return c.is_zero() ? 0 : 1; }).sum() == 0) ++row;
    Pseudoreflection r;
    r.element = i;
    r.hyperplane = LinearForm(RowVector(d.row(row)));
    r.order = g.element_order(i);
    r.determinant = g.determinant(i);
    out.push_back(std::move(r));
  }
  return out;
}

Subgroup reflection_subgroup(const GroupPtr& g, const std::vector<Pseudoreflection>& prs) {
  std::vector<int> seeds;
  seeds.reserve(prs.size());
  for (const auto& r : prs) seeds.push_back(r.element);
  Subgroup h = subgroup_generated(g, seeds);
  if (!is_normal(Subgroup::whole(g), h)) {
    throw InternalError("reflection subgroup is not normal; pseudoreflections are not conjugation-stable");
  }
  return h;
}

Subgroup reflection_subgroup(const GroupPtr& g) { return reflection_subgroup(g, find_pseudoreflections(*g)); }

std::vector<HyperplaneOrbit> hyperplane_orbits(const Subgroup& h, const Subgroup& h_prime,
                                               const std::vector<Pseudoreflection>& prs) {
  const MatrixGroup& g = h.parent();
  std::vector<LinearForm> forms;
  for (const auto& r : prs) {
    if (!h.contains(r.element)) continue;
    if (std::find(forms.begin(), forms.end(), r.hyperplane) == forms.end()) forms.push_back(r.hyperplane);
  }
  std::sort(forms.begin(), forms.end());

  const CosetDecomposition cosets = coset_decomposition(h, h_prime, true);
  std::vector<bool> used(forms.size(), false);
  std::vector<HyperplaneOrbit> out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (used[i]) continue;
    HyperplaneOrbit orb;
    orb.orbit.push_back(forms[i]);
    for (std::size_t j = 0; j < orb.orbit.size(); ++j) {
      for (int s : h.generators()) {
        LinearForm image = orb.orbit[j].transformed(g.element(g.inverse(s)));
        if (std::find(orb.orbit.begin(), orb.orbit.end(), image) == orb.orbit.end()) orb.orbit.push_back(image);
      }
    }
    for (const auto& l : orb.orbit) {
      auto it = std::find(forms.begin(), forms.end(), l);
      if (it == forms.end()) throw InternalError("hyperplane orbit left the set of reflection hyperplanes");
      used[static_cast<std::size_t>(it - forms.begin())] = true;
    }
    std::sort(orb.orbit.begin(), orb.orbit.end());
    orb.representative = orb.orbit.front();

    orb.f = Poly::constant(g.dimension(), Cyclotomic(1));
    for (const auto& l : orb.orbit) orb.f = orb.f * l.poly();

    const Cyclotomic lead = orb.f.leading_coefficient();
    const Exponent& lead_exp = orb.f.leading_exponent();
    for (int x : h.members()) {
      const Poly moved = substitute_linear(orb.f, g.element(g.inverse(x)));
      const Cyclotomic ratio = moved.coeff(lead_exp) / lead;
      if (!(moved == orb.f * ratio)) throw InternalError("orbit product is not a semi-invariant");
      orb.chi.emplace(x, ratio);
    }
    for (int rep : cosets.representatives) orb.chi_table.emplace_back(rep, orb.chi.at(rep));

    const Pseudoreflection* best = nullptr;
    for (const auto& r : prs) {
      if (!h.contains(r.element) || !(r.hyperplane == orb.representative)) continue;
      if (!best || r.order > best->order) best = &r;
    }
    orb.primitive = *best;
    orb.e = best->order;
    out.push_back(std::move(orb));
  }
  return out;
}

CharacterCheck character_values_check(const HyperplaneOrbit& orbit, const Subgroup& h,
                                      const std::vector<Pseudoreflection>& prs) {
  CharacterCheck out;
  for (const auto& r : prs) {
    if (!h.contains(r.element)) continue;
    const bool through = std::find(orbit.orbit.begin(), orbit.orbit.end(), r.hyperplane) != orbit.orbit.end();
    const Cyclotomic expected = through ? r.determinant.inverse() : Cyclotomic(1);
    const Cyclotomic& actual = orbit.chi.at(r.element);
    ++out.checked;
    if (!(actual == expected)) {
      out.violations.push_back("element " + std::to_string(r.element) + ": chi = " + actual.to_string() +
                               ", expected " + expected.to_string());
    }
  }
  if (!orbit.chi.at(0).is_one()) out.violations.push_back("chi(identity) != 1");
  return out;
}

AbelianizationReport abelianization_isomorphism(const Subgroup& h, const Subgroup& h_prime,
                                                const std::vector<HyperplaneOrbit>& orbits) {
  AbelianizationReport rep;
  const CosetDecomposition cosets = coset_decomposition(h, h_prime, true);
  rep.quotient_order = cosets.size();
  for (const auto& o : orbits) rep.product_of_e *= o.e;
  for (std::size_t c = 0; c < cosets.cosets.size(); ++c) {
    AbelianizationReport::Row row;
    row.coset_representative = cosets.representatives[c];
    for (const auto& o : orbits) {
      const Cyclotomic& v = o.chi.at(row.coset_representative);
      for (int x : cosets.cosets[c]) {
        if (!(o.chi.at(x) == v)) rep.well_defined = false;
      }
      if (!v.pow(o.e).is_one()) rep.values_in_mu = false;
      row.values.push_back(v);
    }
    for (const auto& prev : rep.table) {
      bool same = true;
      for (std::size_t k = 0; k < row.values.size(); ++k) same = same && prev.values[k] == row.values[k];
      if (same) rep.injective = false;
    }
    rep.table.push_back(std::move(row));
  }
  return rep;
}

std::vector<std::vector<int>> fuse_orbits(const Subgroup& g, const std::vector<HyperplaneOrbit>& orbits) {
  const MatrixGroup& parent = g.parent();
  auto orbit_of = [&](const LinearForm& l) {
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      if (std::find(orbits[i].orbit.begin(), orbits[i].orbit.end(), l) != orbits[i].orbit.end()) {
        return static_cast<int>(i);
      }
    }
    throw InternalError("G does not permute the reflection hyperplanes");
  };
  std::vector<int> label(orbits.size(), -1);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (label[i] >= 0) continue;
    std::vector<int> group{static_cast<int>(i)};
    label[i] = static_cast<int>(out.size());
    for (std::size_t j = 0; j < group.size(); ++j) {
      for (int s : g.generators()) {
        const int k = orbit_of(orbits[static_cast<std::size_t>(group[j])].representative.transformed(
            parent.element(parent.inverse(s))));
        if (label[static_cast<std::size_t>(k)] < 0) {
          label[static_cast<std::size_t>(k)] = label[i];
          group.push_back(k);
        }
      }
    }
    std::sort(group.begin(), group.end());
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace quot
