#ifndef WBLOWUP_RATIONAL_HPP
#define WBLOWUP_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace wblowup {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "a" or "a/b" with optional leading sign.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Smallest integer >= this.
  BigInt ceil() const;
  /// Largest integer <= this.
  BigInt floor() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(unsigned long k) const;

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;
  std::size_t hash() const;

  const mpq_class& raw() const { return value_; }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned long n);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt gcd(const BigInt& a, const BigInt& b);

/// A value of T extended by a distinguished infinity that compares above every
/// finite value.
template <class T>
class WithInfinity {
public:
  WithInfinity() = default;  // infinity
  WithInfinity(T value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static WithInfinity infinity() { return WithInfinity(); }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }
  const T& value() const { return *value_; }

  friend bool operator==(const WithInfinity& a, const WithInfinity& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const WithInfinity& a, const WithInfinity& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    if (a.value() < b.value()) return std::strong_ordering::less;
    if (b.value() < a.value()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  std::optional<T> value_;
};

using Order = WithInfinity<std::uint64_t>;
using WeightedValue = WithInfinity<Rational>;

template <class T>
std::string to_string(const WithInfinity<T>& v) {
  if (v.is_infinite()) return "inf";
  if constexpr (std::is_same_v<T, Rational>) {
    return v.value().to_string();
  } else {
    return std::to_string(v.value());
  }
}

}  // namespace wblowup

#endif  // WBLOWUP_RATIONAL_HPP
