#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace hpa {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact element rat + coef_delta·δ of the quadratic field ℚ(δ), δ² = n.
///
/// When n is a perfect square the generator is replaced by its integer root
/// at construction, so coef_delta stays zero.  A value without δ component
/// is compatible with every n; mixing two δ components with different n is
/// a logic error and throws std::domain_error.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : rat_(v) {}
  Scalar(long v) : rat_(v) {}
  Scalar(const Rational& r) : rat_(r) { rat_.canonicalize(); }
  Scalar(const Rational& rat, const Rational& coef_delta, long n);

  /// The chosen square root sign·√n.  Throws std::invalid_argument for n < 1.
  static Scalar delta(long n, int sign = +1);

  const Rational& rat() const { return rat_; }
  const Rational& coef_delta() const { return del_; }
  long n() const { return del_ == 0 ? 0 : n_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(del_) == 0; }
  bool is_rational() const { return sgn(del_) == 0; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  /// this += a·b without temporaries on the rational fast path.
  void add_product(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse via the conjugate rat − coef_delta·δ.
  Scalar inverse() const;
  Scalar conjugate() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.rat_ == b.rat_ && a.del_ == b.del_ &&
           (sgn(a.del_) == 0 || a.n_ == b.n_);
  }

  /// "a + b·δ" with both parts printed as reduced fractions.
  std::string to_string() const;

 private:
  long merged_n(const Scalar& o) const;

  Rational rat_{0};
  Rational del_{0};
  long n_ = 0;
};

Scalar pow(const Scalar& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Parses "p", "-p", "p/q".  Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace hpa
