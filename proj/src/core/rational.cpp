#include "core/rational.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>

#include "core/errors.hpp"

namespace definetti {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    raise(ErrorCode::divide_by_zero, "rational with zero denominator");
  }
  value_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  if (sgn(value.get_den()) == 0) {
    raise(ErrorCode::divide_by_zero, "rational with zero denominator");
  }
  value.canonicalize();
  return Rational(std::move(value));
}

Rational Rational::from_mpz(const mpz_class& value) {
  return Rational(mpq_class(value));
}

Rational Rational::parse(const std::string& text) {
  const auto bad = [&]() -> Rational {
    raise(ErrorCode::parse_error, "not a rational: '" + text + "'");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t digits_start = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits_start) return bad();
  mpz_class num(text.substr(0, i));
  mpz_class den(1);
  if (i < text.size()) {
    if (text[i] != '/') return bad();
    ++i;
    std::size_t den_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_start || i != text.size()) return bad();
    den = mpz_class(text.substr(den_start));
    if (sgn(den) == 0) {
      raise(ErrorCode::divide_by_zero, "rational with zero denominator: '" + text + "'");
    }
  }
  return from_mpq(mpq_class(num, den));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) {
    raise(ErrorCode::bad_argument, "not an integer: " + str());
  }
  mpz_class n = numerator();
  if (!n.fits_slong_p()) {
    raise(ErrorCode::out_of_range, "integer too large: " + str());
  }
  return static_cast<std::int64_t>(n.get_si());
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::operator+(const Rational& o) const {
  return Rational(mpq_class(value_ + o.value_));
}

Rational Rational::operator-(const Rational& o) const {
  return Rational(mpq_class(value_ - o.value_));
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(mpq_class(value_ * o.value_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) {
    raise(ErrorCode::divide_by_zero, "division by zero");
  }
  return Rational(mpq_class(value_ / o.value_));
}

Rational& Rational::operator+=(const Rational& o) { return *this = *this + o; }
Rational& Rational::operator-=(const Rational& o) { return *this = *this - o; }
Rational& Rational::operator*=(const Rational& o) { return *this = *this * o; }
Rational& Rational::operator/=(const Rational& o) { return *this = *this / o; }

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  int c = cmp(value_, o.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs() const {
  return sign() < 0 ? -*this : *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    raise(ErrorCode::bad_argument, "negative exponent");
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den().get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return from_mpq(mpq_class(num, den));
}

std::string Rational::str() const { return value_.get_str(); }

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; correct rounding needs a comparison of
  // the two neighbouring doubles against the exact value, ties to even.
  double towards_zero = value_.get_d();
  if (!std::isfinite(towards_zero)) return towards_zero;
  double away = std::nextafter(
      towards_zero, sign() < 0 ? -std::numeric_limits<double>::infinity()
                               : std::numeric_limits<double>::infinity());
  if (!std::isfinite(away)) return towards_zero;
  mpq_class gap_zero = abs().value_ - mpq_class(std::fabs(towards_zero));
  mpq_class gap_away = mpq_class(std::fabs(away)) - abs().value_;
  if (gap_zero < gap_away) return towards_zero;
  if (gap_away < gap_zero) return away;
  // Exact midpoint: the neighbouring representations differ by one in the
  // bit encoding, so exactly one of them has an even mantissa.
  return (std::bit_cast<std::uint64_t>(towards_zero) & 1u) == 0 ? towards_zero
                                                                : away;
}

std::string Rational::decimal() const {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), to_double());
  if (ec != std::errc()) {
    raise(ErrorCode::internal_error, "decimal rendering failed");
  }
  return std::string(buf, end);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational binomial_coefficient(std::int64_t n, std::int64_t k) {
  if (n < 0) {
    raise(ErrorCode::bad_argument, "binomial coefficient with negative n");
  }
  if (k < 0 || k > n) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rational::from_mpz(result);
}

Rational factorial(std::int64_t n) {
  if (n < 0) {
    raise(ErrorCode::bad_argument, "factorial of negative number");
  }
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational::from_mpz(result);
}

}  // namespace definetti
