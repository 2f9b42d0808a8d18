#include "hpa/scalar.hpp"

#include <ostream>

namespace hpa {

Scalar::Scalar(const Rational& rat, const Rational& coef_delta, long n)
    : rat_(rat), del_(coef_delta), n_(n) {
  rat_.canonicalize();
  del_.canonicalize();
  if (sgn(del_) != 0) {
    if (n < 1) throw std::invalid_argument("δ² = n needs n ≥ 1");
    mpz_class root = sqrt(mpz_class(n));
    if (root * root == n) {
      rat_ += del_ * root;
      del_ = 0;
    }
  }
}

Scalar Scalar::delta(long n, int sign) {
  if (n < 1) throw std::invalid_argument("dimension must be a positive integer, got " + std::to_string(n));
  if (sign != 1 && sign != -1) throw std::invalid_argument("δ sign must be +1 or -1");
  return Scalar(Rational(0), Rational(sign), n);
}

long Scalar::merged_n(const Scalar& o) const {
  const long a = n(), b = o.n();
  if (a != 0 && b != 0 && a != b)
    throw std::domain_error("mixing ℚ(δ) elements with δ² = " + std::to_string(a) + " and " + std::to_string(b));
  return a != 0 ? a : b;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  n_ = merged_n(o);
  rat_ += o.rat_;
  if (sgn(o.del_) != 0) del_ += o.del_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  n_ = merged_n(o);
  rat_ -= o.rat_;
  if (sgn(o.del_) != 0) del_ -= o.del_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(del_) == 0 && sgn(o.del_) == 0) {
    rat_ *= o.rat_;
    return *this;
  }
  const long n = merged_n(o);
  Rational r = rat_ * o.rat_ + del_ * o.del_ * n;
  Rational d = rat_ * o.del_ + del_ * o.rat_;
  rat_ = std::move(r);
  del_ = std::move(d);
  n_ = n;
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (sgn(a.del_) == 0 && sgn(b.del_) == 0) {
    if (sgn(a.rat_) == 0 || sgn(b.rat_) == 0) return;
    rat_ += a.rat_ * b.rat_;
    return;
  }
  *this += a * b;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.rat_ = -r.rat_;
  r.del_ = -r.del_;
  return r;
}

Scalar Scalar::conjugate() const {
  Scalar r = *this;
  r.del_ = -r.del_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in ℚ(δ)");
  if (sgn(del_) == 0) return Scalar(Rational(1) / rat_);
  // (a + bδ)(a − bδ) = a² − n b², non-zero since n is not a perfect square.
  Rational norm = rat_ * rat_ - del_ * del_ * n_;
  return Scalar(rat_ / norm, -del_ / norm, n_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar pow(const Scalar& base, int exponent) {
  Scalar b = exponent < 0 ? base.inverse() : base;
  unsigned e = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  Scalar result(1);
  while (e != 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1u;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::string out = rat_.get_str();
  if (sgn(del_) < 0) {
    out += " - ";
    out += Rational(-del_).get_str();
  } else {
    out += " + ";
    out += del_.get_str();
  }
  out += "·δ";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digits_before = false, digits_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("malformed rational '" + text + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digits_after : digits_before) = true;
    } else {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  if (!digits_before || (seen_slash && !digits_after))
    throw std::invalid_argument("malformed rational '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational r;
  if (r.set_str(body, 10) != 0) throw std::invalid_argument("malformed rational '" + text + "'");
  if (seen_slash && r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace hpa
