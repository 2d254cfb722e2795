#include "newmac/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace newmac {

namespace {
const Rational kZero;
} // namespace

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(Rational a) {
  std::vector<Rational> c;
  if (!a.is_zero()) c.push_back(std::move(a));
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(Rational c, std::size_t power) {
  if (c.is_zero()) return Polynomial();
  std::vector<Rational> v(power + 1);
  v[power] = std::move(c);
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& Polynomial::leading_coeff() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Polynomial::eval(const Rational& t) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(Integer(i)) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  if (s.is_zero()) return Polynomial();
  std::vector<Rational> c(p.c_.size());
  for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (is_zero() || c_.size() < divisor.c_.size())
    return {Polynomial(), *this};

  std::vector<Rational> rem = c_;
  const std::size_t dn = divisor.c_.size();
  std::vector<Rational> quo(rem.size() - dn + 1);
  const Rational& lead = divisor.c_.back();
  for (std::size_t qi = quo.size(); qi-- > 0;) {
    Rational q = rem[qi + dn - 1] / lead;
    if (!q.is_zero())
      for (std::size_t j = 0; j < dn; ++j) rem[qi + j] -= q * divisor.c_[j];
    quo[qi] = std::move(q);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return (Rational(1) / leading_coeff()) * *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& a = c_[i];
    if (a.is_zero()) continue;
    const Rational mag = a.abs();
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      os << mag.to_string();
    } else {
      if (!unit) os << mag.to_string() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial poly_from_roots(std::span<const Rational> roots) {
  // Incremental product of (t - r); one extra slot per factor.
  std::vector<Rational> c{Rational(1)};
  c.reserve(roots.size() + 1);
  for (const Rational& r : roots) {
    c.push_back(Rational(0));
    for (std::size_t i = c.size(); i-- > 1;) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Polynomial(std::move(c));
}

namespace {

// Integer polynomial helpers for the primitive pseudo-remainder sequence.
using ZPoly = std::vector<Integer>; // low-to-high, trailing entry nonzero

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Clears denominators; result is primitive up to the caller's use.
ZPoly to_zpoly(const Polynomial& p) {
  Integer lcm(1);
  for (const Rational& a : p.coeffs()) {
    Integer d = a.denominator();
    Integer g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
    lcm = lcm / g * d;
  }
  ZPoly z(p.coeffs().size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Rational& a = p.coeffs()[i];
    z[i] = a.numerator() * (lcm / a.denominator());
  }
  return z;
}

Integer content(const ZPoly& p) {
  Integer g(0);
  for (const Integer& a : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  return g;
}

void make_primitive(ZPoly& p) {
  Integer g = content(p);
  if (g == 0) return;
  if (p.back() < 0) g = -g; // normalize to positive leading coefficient
  for (Integer& a : p) a /= g;
}

// Remainder of a by b scaled by a power of lc(b), so it stays integral.
// The exact scale is irrelevant: the caller strips content right after.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer head = a.back();
    for (Integer& c : a) c *= lb;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= head * b[j];
    ztrim(a);
  }
  return a;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw DomainError("gcd of two zero polynomials is undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();

  ZPoly u = to_zpoly(a), v = to_zpoly(b);
  make_primitive(u);
  make_primitive(v);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    ZPoly r = pseudo_rem(u, v);
    make_primitive(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> c(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) c[i] = Rational(u[i]);
  return Polynomial(std::move(c)).monic();
}

} // namespace newmac
