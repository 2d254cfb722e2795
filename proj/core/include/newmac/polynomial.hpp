#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "newmac/rational.hpp"

namespace newmac {

/// Univariate polynomial over the rationals, dense coefficients stored
/// low-to-high. Invariant: the coefficient vector is empty (the zero
/// polynomial) or its last entry is nonzero, so degree() is just size-1.
/// The zero polynomial has no degree (empty optional), which keeps the
/// degree arithmetic honest in gcd/division code.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Rational a);
  /// c * t^power
  static Polynomial monomial(Rational c, std::size_t power);

  bool is_zero() const { return c_.empty(); }
  std::optional<long> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<long>(c_.size()) - 1;
  }
  /// Coefficient of t^i (0 beyond the degree).
  const Rational& coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading_coeff() const;

  Rational eval(const Rational& t) const; // Horner
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder with deg(rem) < deg(divisor); exact over Q.
  /// Throws DomainError when the divisor is zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  /// this / divisor when the division is exact; DomainError otherwise.
  Polynomial divide_exact(const Polynomial& divisor) const;

  /// Leading coefficient scaled to 1 (zero polynomial stays zero).
  Polynomial monic() const;

  /// Human-readable form like "t^3 - 6*t^2 + 11*t - 6" in the given
  /// variable name; for diagnostics and plain CLI output.
  std::string to_string(const std::string& var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic polynomial with exactly the given roots: prod_i (t - r_i).
/// An empty root list gives the constant 1.
Polynomial poly_from_roots(std::span<const Rational> roots);

inline Rational poly_eval(const Polynomial& p, const Rational& t) { return p.eval(t); }
inline Polynomial poly_derivative(const Polynomial& p) { return p.derivative(); }

/// Greatest common divisor, returned monic; undefined (DomainError) when
/// both arguments are zero. Computed over the integers with a primitive
/// pseudo-remainder sequence to keep intermediate coefficients small.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

} // namespace newmac
