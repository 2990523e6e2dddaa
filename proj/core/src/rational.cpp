#include "wblowup/rational.hpp"

#include "wblowup/errors.hpp"

#include <functional>

namespace wblowup {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  Rational r;
  if (text.empty() || r.value_.set_str(text, 10) != 0) {
    throw ParseError("malformed rational '" + text + "'");
  }
  if (r.value_.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.value_.canonicalize();
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

Rational Rational::pow(unsigned long k) const {
  Rational r;
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), k);
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), k);
  return r;
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::size_t Rational::hash() const {
  const std::string s = to_string();
  return std::hash<std::string>{}(s);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace wblowup
