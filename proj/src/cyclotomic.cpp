#include "quot/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "quot/errors.hpp"

namespace quot {

namespace {

// Exact quotient of integer polynomials (constant term first); divisor monic.
std::vector<Integer> divide_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<Integer> q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const Integer c = num[k];
    q[k - dd] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  return q;
}

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(mpz_sgn(p) + 1);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n && i < 4; ++i) {
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(mpz_getlimbn(p, i));
  }
  return h;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int n) {
  if (n < 1) throw InputError("cyclotomic polynomial: conductor must be positive");
  std::vector<Integer> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(int conductor)
    : conductor_(conductor), degree_(euler_phi(conductor)), modulus_(cyclotomic_polynomial(conductor)) {
  const auto phi = static_cast<std::size_t>(degree_);
  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  zeta_powers_.reserve(static_cast<std::size_t>(conductor));
  for (int k = 0; k < conductor; ++k) {
    zeta_powers_.push_back(cur);
    // multiply by x and reduce modulo Phi_N
    Integer top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * modulus_[i];
  }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
  if (conductor < 1) throw InputError("conductor must be a positive integer");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CyclotomicField(conductor));
  return *slot;
}

const std::vector<Integer>& CyclotomicField::zeta_power(int k) const {
  k %= conductor_;
  if (k < 0) k += conductor_;
  return zeta_powers_[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------

Cyclotomic::Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
Cyclotomic::Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
Cyclotomic::Cyclotomic(const Integer& v) : Cyclotomic(Rational(v)) {}
Cyclotomic::Cyclotomic(const Rational& v) {
  if (v != 0) c_.push_back(v);
}

Cyclotomic::Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs)
    : field_(&field), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(field.degree())) {
    throw InputError("cyclotomic coefficient vector has wrong length");
  }
}

Cyclotomic Cyclotomic::zeta(const CyclotomicField& field, int exponent) {
  const auto& p = field.zeta_power(exponent);
  return Cyclotomic(field, std::vector<Rational>(p.begin(), p.end()));
}

Cyclotomic Cyclotomic::zero(const CyclotomicField& field) {
  return Cyclotomic(field, std::vector<Rational>(static_cast<std::size_t>(field.degree()), 0));
}

Cyclotomic Cyclotomic::one(const CyclotomicField& field) { return zeta(field, 0); }

Rational Cyclotomic::coeff(int i) const {
  return static_cast<std::size_t>(i) < c_.size() ? c_[static_cast<std::size_t>(i)] : Rational(0);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeff(0) == 1; }

Rational Cyclotomic::rational() const {
  if (!is_rational()) throw InputError("value is not rational: " + to_string());
  return coeff(0);
}

void Cyclotomic::trim() {
  if (!field_ && !c_.empty() && c_[0] == 0) c_.clear();
}

void Cyclotomic::lift_to(const CyclotomicField* f) {
  if (field_ || !f) return;
  Rational v = coeff(0);
  c_.assign(static_cast<std::size_t>(f->degree()), 0);
  c_[0] = v;
  field_ = f;
}

const CyclotomicField* Cyclotomic::common_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_) {
    throw ConductorMismatch("arithmetic between conductors " + std::to_string(a.conductor()) + " and " +
                            std::to_string(b.conductor()));
  }
  return a.field_ ? a.field_ : b.field_;
}

Cyclotomic Cyclotomic::bound_to(const CyclotomicField& field) const {
  if (field_ == &field) return *this;
  if (field_) {
    throw ConductorMismatch("value already bound to conductor " + std::to_string(conductor()));
  }
  Cyclotomic r = *this;
  r.lift_to(&field);
  return r;
}

Cyclotomic Cyclotomic::embedded_in(const CyclotomicField& field) const {
  if (!field_) return bound_to(field);
  if (field_ == &field) return *this;
  const int m = field_->conductor();
  if (field.conductor() % m != 0) {
    throw ConductorMismatch("cannot embed conductor " + std::to_string(m) + " into " +
                            std::to_string(field.conductor()));
  }
  const int step = field.conductor() / m;
  Cyclotomic r = zero(field);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const auto& p = field.zeta_power(static_cast<int>(i) * step);
    for (std::size_t j = 0; j < p.size(); ++j) r.c_[j] += c_[i] * p[j];
  }
  return r;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const CyclotomicField* f = common_field(*this, o);
  lift_to(f);
  if (!f) {
    Rational v = coeff(0) + o.coeff(0);
    c_.assign(1, v);
    trim();
    return *this;
  }
  if (o.field_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else if (!o.c_.empty()) {
    c_[0] += o.c_[0];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  const CyclotomicField* f = common_field(*this, o);
  lift_to(f);
  if (!f) {
    Rational v = coeff(0) - o.coeff(0);
    c_.assign(1, v);
    trim();
    return *this;
  }
  if (o.field_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  } else if (!o.c_.empty()) {
    c_[0] -= o.c_[0];
  }
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const CyclotomicField* f = Cyclotomic::common_field(a, b);
  if (!a.field_ || !b.field_) {
    const Cyclotomic& scalar = a.field_ ? b : a;
    const Cyclotomic& other = a.field_ ? a : b;
    Cyclotomic r = other;
    const Rational s = scalar.coeff(0);
    if (!f) {
      r.c_.assign(1, other.coeff(0) * s);
      r.trim();
      return r;
    }
    for (auto& c : r.c_) c *= s;
    return r;
  }
  const auto phi = static_cast<std::size_t>(f->degree());
  std::vector<Rational> t(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.c_[j] != 0) t[i + j] += a.c_[i] * b.c_[j];
    }
  }
  const auto& mod = f->modulus();
  for (std::size_t k = t.size(); k-- > phi;) {
    if (t[k] == 0) continue;
    const Rational c = t[k];
    t[k] = 0;
    for (std::size_t i = 0; i < phi; ++i) {
      if (mod[i] != 0) t[k - phi + i] -= c * mod[i];
    }
  }
  t.resize(phi);
  return Cyclotomic(*f, std::move(t));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) { return *this = *this * o; }
Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this = *this * o.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (!field_ || is_rational()) {
    Cyclotomic r(1 / coeff(0));
    return field_ ? r.bound_to(*field_) : r;
  }
  // Column j of the system is the coordinate vector of a * zeta^j; solve M b = e_0.
  const auto phi = static_cast<std::size_t>(field_->degree());
  std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1, 0));
  for (std::size_t j = 0; j < phi; ++j) {
    const Cyclotomic col = *this * zeta(*field_, static_cast<int>(j));
    for (std::size_t i = 0; i < phi; ++i) m[i][j] = col.c_[i];
  }
  m[0][phi] = 1;
  for (std::size_t col = 0; col < phi; ++col) {
    std::size_t piv = col;
    while (piv < phi && m[piv][col] == 0) ++piv;
    if (piv == phi) throw InternalError("singular multiplication matrix in cyclotomic inverse");
    std::swap(m[piv], m[col]);
    const Rational inv = 1 / m[col][col];
    for (std::size_t k = col; k <= phi; ++k) m[col][k] *= inv;
    for (std::size_t r = 0; r < phi; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational fct = m[r][col];
      for (std::size_t k = col; k <= phi; ++k) m[r][k] -= fct * m[col][k];
    }
  }
  std::vector<Rational> out(phi);
  for (std::size_t i = 0; i < phi; ++i) out[i] = m[i][phi];
  return Cyclotomic(*field_, std::move(out));
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this;
  Cyclotomic acc = field_ ? one(*field_) : Cyclotomic(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

std::optional<int> Cyclotomic::root_of_unity_order() const {
  if (is_zero()) return std::nullopt;
  const int bound = 2 * (field_ ? field_->conductor() : 1);
  Cyclotomic p = *this;
  for (int m = 1; m <= bound; ++m) {
    if (p.is_one()) return m;
    p *= *this;
  }
  return std::nullopt;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::common_field(a, b);
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeff(static_cast<int>(i)) != b.coeff(static_cast<int>(i))) return false;
  }
  return true;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic::common_field(a, b);
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::size_t t = hash_mpz(c_[i].get_num()) * 31 + hash_mpz(c_[i].get_den());
    h ^= t + 0x9E3779B97F4A7C15ULL + (i << 6) + (i >> 2);
  }
  return h;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeff(0).get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    Rational c = c_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "zeta";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a) { return os << a.to_string(); }

std::vector<Cyclotomic::Term> Cyclotomic::to_terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    out.push_back({c_[i].get_num(), c_[i].get_den(), static_cast<int>(i)});
  }
  return out;
}

Cyclotomic Cyclotomic::from_terms(const CyclotomicField& field, const std::vector<Term>& terms) {
  Cyclotomic r = zero(field);
  for (const auto& t : terms) {
    if (t.den == 0) throw InputError("cyclotomic term with zero denominator");
    if (t.exponent < 0 || t.exponent >= field.conductor()) {
      throw InputError("cyclotomic term exponent " + std::to_string(t.exponent) + " outside [0, " +
                       std::to_string(field.conductor()) + ")");
    }
    Rational c(t.num, t.den);
    c.canonicalize();
    const auto& p = field.zeta_power(t.exponent);
    for (std::size_t j = 0; j < p.size(); ++j) r.c_[j] += c * p[j];
  }
  return r;
}

// ---------------------------------------------------------------------------

Matrix identity_matrix(int n, const CyclotomicField& field) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = i == j ? Cyclotomic::one(field) : Cyclotomic::zero(field);
  }
  return m;
}

Matrix bind_matrix(const Matrix& m, const CyclotomicField& field) {
  return m.unaryExpr([&](const Cyclotomic& c) { return c.bound_to(field); });
}

Matrix embed_matrix(const Matrix& m, const CyclotomicField& field) {
  return m.unaryExpr([&](const Cyclotomic& c) { return c.embedded_in(field); });
}

std::size_t hash_matrix(const Matrix& m) {
  std::size_t h = static_cast<std::size_t>(m.rows()) * 1000003u + static_cast<std::size_t>(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) h = h * 0x100000001B3ULL ^ m(i, j).hash();
  }
  return h;
}

bool matrices_equal(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (!(a(i, j) == b(i, j))) return false;
    }
  }
  return true;
}

}  // namespace quot
