#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "newmac/errors.hpp"

namespace newmac {

using Integer = mpz_class;

/// Arbitrary-precision non-negative integer. Mostly appears as the result
/// type of counting operations (binomial coefficients, root counts).
class Natural {
public:
  Natural() : v_(0) {}
  Natural(unsigned long v) : v_(v) {}
  explicit Natural(Integer v) : v_(std::move(v)) {
    if (v_ < 0) throw DomainError("Natural cannot hold a negative value");
  }

  const Integer& value() const { return v_; }
  std::string to_string() const { return v_.get_str(); }

  /// The value as unsigned long; throws if it does not fit.
  unsigned long to_ulong() const {
    if (!v_.fits_ulong_p()) throw DomainError("Natural too large for unsigned long");
    return v_.get_ui();
  }

  friend bool operator==(const Natural& a, const Natural& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Natural& a, const Natural& b) { return a.v_ != b.v_; }
  friend bool operator<(const Natural& a, const Natural& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Natural& a, const Natural& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Natural& a, const Natural& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Natural& a, const Natural& b) { return a.v_ >= b.v_; }
  friend Natural operator+(const Natural& a, const Natural& b) { return Natural(Integer(a.v_ + b.v_)); }
  friend Natural operator*(const Natural& a, const Natural& b) { return Natural(Integer(a.v_ * b.v_)); }

private:
  Integer v_;
};

/// Exact rational number, always held in canonical form: reduced to lowest
/// terms with a positive denominator (zero is 0/1). Backed by GMP.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(const Integer& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// num/den, normalized. Throws DomainError when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Parses the textual form: optional leading '-', a decimal integer,
  /// optionally followed by '/' and a positive decimal integer.
  /// "3", "-10/9", "0", "4/6" (normalized to 2/3). Anything else —
  /// whitespace, '+', empty numerator, zero or signed denominator —
  /// is a DomainError naming the offending token.
  static Rational parse(std::string_view text);

  /// Canonical text: "p" when the denominator is 1, else "p/q" with q > 1.
  std::string to_string() const;

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  /// Exact non-negative integer power.
  Rational pow(unsigned long e) const;

  /// Nearest double (GMP rounding); for diagnostics only.
  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class v_;
};

/// Canonical rational p/q: reduced, positive denominator. Throws on q = 0.
inline Rational rat_normalize(const Integer& p, const Integer& q) {
  return Rational(p, q);
}

/// Binomial coefficient C(n, k) as an exact Natural; 0 when k < 0 or k > n.
Natural binom(const Natural& n, long k);

/// Convenience overload for small n.
Natural binom(unsigned long n, long k);

} // namespace newmac
