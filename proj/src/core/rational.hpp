#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace definetti {

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.  This is the weight type for every distribution in
/// the library; no operation here ever rounds.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int n) : value_(static_cast<long>(n)) {}
  Rational(std::int64_t n) : value_(static_cast<long>(n)) {}
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "num", "num/den", optional leading '-'; rejects anything else.
  static Rational parse(const std::string& text);

  static Rational from_mpq(mpq_class value);
  static Rational from_mpz(const mpz_class& value);

  const mpq_class& raw() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Integer value; caller must check is_integer() and range first.
  std::int64_t to_int64() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  /// Division by zero raises ErrorCode::divide_by_zero.
  Rational operator/(const Rational& o) const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  bool operator==(const Rational& o) const { return value_ == o.value_; }
  std::strong_ordering operator<=>(const Rational& o) const;

  Rational abs() const;
  /// Nonnegative integer exponent.
  Rational pow(int exponent) const;

  /// "num/den" in lowest terms, or just "num" when the denominator is 1.
  std::string str() const;

  /// Shortest decimal rendering of the IEEE-double approximation; for
  /// human-readable output columns only, never fed back into arithmetic.
  std::string decimal() const;

  /// Correctly rounded (nearest, ties to even) IEEE-double approximation.
  double to_double() const;

 private:
  explicit Rational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact C(n, k); zero when k < 0 or k > n.
Rational binomial_coefficient(std::int64_t n, std::int64_t k);

/// Exact n! for n >= 0.
Rational factorial(std::int64_t n);

}  // namespace definetti
