#pragma once

// Sparse multivariate polynomials over a field scalar.  Terms are kept in a
// map ordered by descending graded reverse lexicographic order with
// x0 > x1 > ... > x{n-1}, so iteration and printing are canonical.

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/errors.hpp"
#include "quot/linalg.hpp"

namespace quot {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
  int d = 0;
  for (int v : e) d += v;
  return d;
}

/// -1, 0, 1 as a < b, a == b, a > b in grevlex.
inline int grevlex_compare(const Exponent& a, const Exponent& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const { return grevlex_compare(a, b) > 0; }
};

/// All exponent vectors of total degree d in n variables, descending grevlex.
std::vector<Exponent> monomials_of_degree(int n, int d);

template <class Scalar = Cyclotomic>
class MultiPoly {
 public:
  using Terms = std::map<Exponent, Scalar, GrevlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(int num_vars) : n_(num_vars) {}

  static MultiPoly constant(int num_vars, const Scalar& c) {
    MultiPoly p(num_vars);
    p.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
    return p;
  }
  static MultiPoly variable(int num_vars, int i, const Scalar& c = Scalar(1)) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    return monomial(e, c);
  }
  static MultiPoly monomial(const Exponent& e, const Scalar& c = Scalar(1)) {
    MultiPoly p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  int num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) != d) return false;
    }
    return true;
  }

  const Exponent& leading_exponent() const { return terms_.begin()->first; }
  const Scalar& leading_coefficient() const { return terms_.begin()->second; }

  Scalar coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  void add_term(const Exponent& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != n_) throw InputError("exponent length does not match variable count");
    if (quot::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (quot::is_zero(it->second)) terms_.erase(it);
    }
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  MultiPoly& operator+=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const Scalar& s) {
    if (quot::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_vars(b);
    MultiPoly r(a.n_);
    Exponent e(static_cast<std::size_t>(a.n_));
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto ib = b.terms_.begin();
    for (const auto& [e, c] : a.terms_) {
      if (e != ib->first || !(c == ib->second)) return false;
      ++ib;
    }
    return true;
  }

  MultiPoly pow(int k) const {
    MultiPoly acc = constant(n_, Scalar(1));
    MultiPoly base = *this;
    while (k > 0) {
      if (k & 1) acc = acc * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return acc;
  }

  /// Component of total degree d.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(n_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) == d) r.terms_.emplace(e, c);
    }
    return r;
  }

  /// Printed with variables prefix0, prefix1, ...; e.g. "3/2*x0^2*x1 - x2^3".
  std::string to_string(const std::string& prefix = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += prefix + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      std::string coef;
      bool negative = false;
      if (c.is_rational()) {
        Rational q = c.rational();
        negative = q < 0;
        q = abs(q);
        if (q != 1 || mono.empty()) coef = q.get_str();
      } else {
        coef = "(" + c.to_string() + ")";
      }
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      os << coef;
      if (!coef.empty() && !mono.empty()) os << "*";
      os << mono;
      first = false;
    }
    return os.str();
  }

 private:
  void check_vars(const MultiPoly& o) const {
    if (o.n_ != n_) throw InputError("polynomials in different numbers of variables");
  }

  int n_ = 0;
  Terms terms_;
};

using Poly = MultiPoly<Cyclotomic>;

template <class Scalar>
bool is_zero(const MultiPoly<Scalar>& p) {
  return p.is_zero();
}

/// p(images[0], ..., images[n-1]); result lives in the images' ring.
template <class Scalar>
MultiPoly<Scalar> substitute(const MultiPoly<Scalar>& p, const std::vector<MultiPoly<Scalar>>& images) {
  if (static_cast<int>(images.size()) != p.num_vars()) throw InputError("substitute: wrong number of images");
  if (images.empty()) return p;
  const int m = images.front().num_vars();
  // cache powers per variable
  std::vector<std::vector<MultiPoly<Scalar>>> powers(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) powers[i].push_back(MultiPoly<Scalar>::constant(m, Scalar(1)));
  MultiPoly<Scalar> out(m);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<Scalar> t = MultiPoly<Scalar>::constant(m, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[static_cast<std::size_t>(e[i])];
    }
    out += t;
  }
  return out;
}

/// x_i -> sum_j a(i, j) x_j.
inline Poly substitute_linear(const Poly& p, const Matrix& a) {
  if (a.rows() != p.num_vars()) throw InputError("substitute_linear: dimension mismatch");
  const int m = static_cast<int>(a.cols());
  std::vector<Poly> images;
  images.reserve(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Poly li(m);
    for (int j = 0; j < m; ++j) li += Poly::variable(m, j, a(i, j));
    images.push_back(std::move(li));
  }
  return substitute(p, images);
}

/// The left action (g.p)(v) = p(g^{-1} v), i.e. x_i -> sum_j (g^{-1})_{ij} x_j.
inline Poly compose_linear(const Poly& p, const Matrix& g) {
  if (g.cols() != p.num_vars()) throw InputError("compose_linear: dimension mismatch");
  return substitute_linear(p, inverse<Cyclotomic>(g));
}

template <class Scalar>
MultiPoly<Scalar> derivative(const MultiPoly<Scalar>& p, int var) {
  MultiPoly<Scalar> r(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponent f = e;
    f[static_cast<std::size_t>(var)] = k - 1;
    r.add_term(f, c * Scalar(k));
  }
  return r;
}

/// Sylvester resultant with respect to `var`, coefficients polynomials in the
/// other variables.  Convention: deg_var(g) rows of f, then deg_var(f) rows of
/// g, coefficients listed from the highest power down.
Poly resultant(const Poly& f, const Poly& g, int var);

/// Coefficients c_k (k = 0..deg) with p = sum_k c_k * x_var^k.
std::vector<Poly> coefficients_in(const Poly& p, int var);

}  // namespace quot
