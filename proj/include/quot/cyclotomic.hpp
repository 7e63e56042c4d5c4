#pragma once

// Exact arithmetic in Q and in the cyclotomic field Q(zeta_N).
//
// A Cyclotomic is either *unbound* (a plain rational constant, no conductor)
// or bound to a CyclotomicField.  Unbound values embed into any field, so
// Eigen's Scalar(0) / Scalar(1) literals mix freely with field elements.  Two
// values bound to different conductors never mix.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace quot {

using Integer = mpz_class;
using Rational = mpq_class;

/// Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).
class CyclotomicField {
 public:
  /// Interned instance for conductor N; references stay valid for the
  /// lifetime of the program.
  static const CyclotomicField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }

  /// Coefficients of Phi_N, constant term first; monic of length degree()+1.
  const std::vector<Integer>& modulus() const { return modulus_; }

  /// Power-basis coordinates of zeta^k for 0 <= k < N.
  const std::vector<Integer>& zeta_power(int k) const;

 private:
  explicit CyclotomicField(int conductor);

  int conductor_;
  int degree_;
  std::vector<Integer> modulus_;
  std::vector<std::vector<Integer>> zeta_powers_;
};

/// Phi_N over Z, constant term first, via x^N - 1 = prod_{d | N} Phi_d.
std::vector<Integer> cyclotomic_polynomial(int n);

int euler_phi(int n);

class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(int v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(long v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& v);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Integer& v);  // NOLINT(google-explicit-constructor)

  /// Element with the given power-basis coordinates (length must be phi(N)).
  Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs);

  static Cyclotomic zeta(const CyclotomicField& field, int exponent = 1);
  static Cyclotomic zero(const CyclotomicField& field);
  static Cyclotomic one(const CyclotomicField& field);

  /// Null for unbound (rational) values.
  const CyclotomicField* field() const { return field_; }
  int conductor() const { return field_ ? field_->conductor() : 0; }

  /// Power-basis coordinate i (zero past the stored length).
  Rational coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Rational value; requires is_rational().
  Rational rational() const;

  /// The same value bound to `field`; raises ConductorMismatch if already
  /// bound elsewhere.
  Cyclotomic bound_to(const CyclotomicField& field) const;

  /// Image under Q(zeta_M) -> Q(zeta_N), zeta_M -> zeta_N^(N/M); needs M | N.
  Cyclotomic embedded_in(const CyclotomicField& field) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  /// Smallest m >= 1 with a^m = 1, searched up to 2N.
  std::optional<int> root_of_unity_order() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Total order: lexicographic on power-basis coordinates.  Not a field
  /// order; used only for canonical sorting.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  std::size_t hash() const;

  /// "3/2", "1 - 2*zeta^3", ...
  std::string to_string() const;

  /// JSON-style terms [numerator, denominator, exponent] with 0 <= exp < N.
  struct Term {
    Integer num;
    Integer den;
    int exponent;
  };
  std::vector<Term> to_terms() const;
  static Cyclotomic from_terms(const CyclotomicField& field, const std::vector<Term>& terms);

 private:
  void trim();
  static const CyclotomicField* common_field(const Cyclotomic& a, const Cyclotomic& b);
  void lift_to(const CyclotomicField* f);

  const CyclotomicField* field_ = nullptr;
  // Unbound: size 0 (zero) or 1.  Bound: size field_->degree().
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& a);

struct CyclotomicHash {
  std::size_t operator()(const Cyclotomic& a) const { return a.hash(); }
};

/// Group-element and system matrices.
using Matrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;
using RowVector = Eigen::Matrix<Cyclotomic, 1, Eigen::Dynamic>;

Matrix identity_matrix(int n, const CyclotomicField& field);
Matrix bind_matrix(const Matrix& m, const CyclotomicField& field);
Matrix embed_matrix(const Matrix& m, const CyclotomicField& field);
std::size_t hash_matrix(const Matrix& m);
bool matrices_equal(const Matrix& a, const Matrix& b);

}  // namespace quot

namespace Eigen {

template <>
struct NumTraits<quot::Cyclotomic> : GenericNumTraits<quot::Cyclotomic> {
  using Real = quot::Cyclotomic;
  using NonInteger = quot::Cyclotomic;
  using Nested = quot::Cyclotomic;
  using Literal = quot::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  // exact: no precision to report when printing
  static constexpr int digits10() { return 0; }
};

}  // namespace Eigen
