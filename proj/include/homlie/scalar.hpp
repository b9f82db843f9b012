#pragma once

// Exact arithmetic over Q and over the rational-function field Q(L), where the
// indeterminate L stands for the twist parameter λ.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace homlie {

/// Canonical rational number (gcd(num, den) = 1, den > 0), GMP-backed.
using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q in the indeterminate L.
/// Coefficients are stored by ascending degree with no trailing zero, so the
/// zero polynomial is the empty sequence and has degree kZeroDegree.
class Poly {
 public:
  static constexpr int kZeroDegree = -1;

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT: implicit lift Q -> Q[L]
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT
  explicit Poly(std::vector<Rational> ascending);

  static Poly indeterminate();
  static Poly monomial(const Rational& coeff, int degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept;
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t term_count() const noexcept;
  const Rational& leading() const;
  Rational coeff(int degree) const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Rational eval(const Rational& at) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder), divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& dividend, const Poly& divisor);
  /// Monic gcd; gcd(0, 0) = 0.
  static Poly gcd(Poly a, Poly b);
  /// Exact quotient; the caller guarantees divisibility.
  static Poly exact_div(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string to_string(const Poly& p);

/// Element of Q(L) kept in normal form: den monic, gcd(num, den) = 1, and the
/// zero element is 0/1. Structural equality is therefore field equality.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}                                    // NOLINT
  Scalar(const Rational& q) : num_(q), den_(1) {}                         // NOLINT
  Scalar(const Poly& p) : num_(p), den_(1) {}                             // NOLINT
  Scalar(Poly num, Poly den);

  static Scalar lambda() { return Scalar(Poly::indeterminate()); }
  static Scalar fraction(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(q);
  }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_one() const noexcept { return den_.is_one() && num_.is_one(); }
  bool is_invertible() const noexcept { return !is_zero(); }
  /// The value as a rational number when it does not depend on L.
  std::optional<Rational> as_rational() const;

  Scalar inverse() const;
  /// Specialize L := at. Throws PoleAtPoint when the denominator vanishes there.
  Rational eval(const Rational& at) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

Scalar pow(const Scalar& base, long exponent);

/// Canonical text form, e.g. `2*L^2-1/3`, `(L+1)/(L-1)`, `-1/L`.
std::string to_string(const Scalar& s);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses integers, `p/q`, `L`, `^` with integer exponents, `+ - * /` and
/// parentheses. Throws Error(ParseError) with a 1-based column on failure.
Scalar parse_scalar(std::string_view text);

}  // namespace homlie
