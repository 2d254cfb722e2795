#include "newmac/rational.hpp"

#include <cctype>
#include <ostream>

namespace newmac {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational denominator is zero");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

} // namespace

Rational Rational::parse(std::string_view text) {
  const std::string token(text);
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  std::string_view num = s, den;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
    if (!all_digits(den))
      throw DomainError("invalid rational token '" + token + "': denominator must be a positive decimal integer");
  }
  if (!all_digits(num))
    throw DomainError("invalid rational token '" + token + "'");

  Integer n(std::string(num), 10);
  if (negative) n = -n;
  Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (d == 0)
    throw DomainError("invalid rational token '" + token + "': denominator must be positive");
  return Rational(n, d);
}

std::string Rational::to_string() const {
  return v_.get_den() == 1 ? v_.get_num().get_str() : v_.get_str();
}

Rational Rational::pow(unsigned long e) const {
  mpq_class r;
  mpz_pow_ui(r.get_num_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(std::move(r)); // canonical since v_ is
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Natural binom(const Natural& n, long k) {
  if (k < 0 || Integer(k) > n.value()) return Natural(0ul);
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.value().get_mpz_t(), static_cast<unsigned long>(k));
  return Natural(std::move(r));
}

Natural binom(unsigned long n, long k) { return binom(Natural(n), k); }

} // namespace newmac
