#pragma once

// Dense univariate polynomials over a field, constant term first.  Used for
// characteristic polynomials and the Molien rational function.

#include <string>
#include <utility>
#include <vector>

#include "quot/cyclotomic.hpp"
#include "quot/errors.hpp"
#include "quot/linalg.hpp"

namespace quot {

template <class Scalar>
using UPoly = std::vector<Scalar>;

template <class Scalar>
void upoly_trim(UPoly<Scalar>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

template <class Scalar>
UPoly<Scalar> upoly_add(UPoly<Scalar> a, const UPoly<Scalar>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Scalar(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  upoly_trim(a);
  return a;
}

template <class Scalar>
UPoly<Scalar> upoly_scale(UPoly<Scalar> a, const Scalar& s) {
  for (auto& c : a) c *= s;
  upoly_trim(a);
  return a;
}

template <class Scalar>
UPoly<Scalar> upoly_mul(const UPoly<Scalar>& a, const UPoly<Scalar>& b) {
  if (a.empty() || b.empty()) return {};
  UPoly<Scalar> r(a.size() + b.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  upoly_trim(r);
  return r;
}

/// (quotient, remainder) of a by nonzero b.
template <class Scalar>
std::pair<UPoly<Scalar>, UPoly<Scalar>> upoly_divmod(UPoly<Scalar> a, UPoly<Scalar> b) {
  upoly_trim(a);
  upoly_trim(b);
  if (b.empty()) throw DivisionByZero("polynomial division by zero");
  if (a.size() < b.size()) return {{}, a};
  UPoly<Scalar> q(a.size() - b.size() + 1, Scalar(0));
  const Scalar inv = Scalar(1) / b.back();
  for (std::size_t k = a.size() - 1;; --k) {
    const Scalar c = a[k] * inv;
    q[k - (b.size() - 1)] = c;
    if (!is_zero(c)) {
      for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
    }
    if (k == b.size() - 1) break;
  }
  upoly_trim(q);
  upoly_trim(a);
  return {q, a};
}

template <class Scalar>
UPoly<Scalar> upoly_monic(UPoly<Scalar> a) {
  upoly_trim(a);
  if (a.empty()) return a;
  return upoly_scale(a, Scalar(1) / a.back());
}

template <class Scalar>
UPoly<Scalar> upoly_gcd(UPoly<Scalar> a, UPoly<Scalar> b) {
  upoly_trim(a);
  upoly_trim(b);
  while (!b.empty()) {
    auto r = upoly_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(a);
}

inline std::string upoly_to_string(const UPoly<Cyclotomic>& p, const std::string& var = "t") {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Cyclotomic& c = p[k];
    if (c.is_zero()) continue;
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      Rational q = c.rational();
      negative = q < 0;
      q = abs(q);
      if (q != 1 || k == 0) coef = q.get_str();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef;
    if (k > 0) {
      if (!coef.empty()) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    first = false;
  }
  return out;
}

/// det(I - t*g), constant term first, by Faddeev-LeVerrier.
inline UPoly<Cyclotomic> det_one_minus_tg(const Matrix& g) {
  const Eigen::Index n = g.rows();
  // c[k] is the coefficient of lambda^k in det(lambda I - g).
  std::vector<Cyclotomic> c(static_cast<std::size_t>(n) + 1, Cyclotomic(0));
  c[static_cast<std::size_t>(n)] = Cyclotomic(1);
  Matrix m = Matrix::Constant(n, n, Cyclotomic(0));
  for (Eigen::Index k = 1; k <= n; ++k) {
    Matrix next = g * m;
    for (Eigen::Index i = 0; i < n; ++i) next(i, i) += c[static_cast<std::size_t>(n - k + 1)];
    m = std::move(next);
    const Matrix gm = g * m;
    Cyclotomic tr(0);
    for (Eigen::Index i = 0; i < n; ++i) tr += gm(i, i);
    c[static_cast<std::size_t>(n - k)] = -tr / Cyclotomic(static_cast<long>(k));
  }
  UPoly<Cyclotomic> out(static_cast<std::size_t>(n) + 1);
  for (Eigen::Index j = 0; j <= n; ++j) out[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(n - j)];
  upoly_trim(out);
  return out;
}

}  // namespace quot
