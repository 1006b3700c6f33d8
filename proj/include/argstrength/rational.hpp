#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace argstrength {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Stored in lowest terms with a positive denominator;
// every operation is exact. All probability values in the solver path are
// carried by this type, never by floating point.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by design

  Rational(long long numerator, long long denominator)
      : Rational(BigInt(numerator), BigInt(denominator)) {}

  Rational(BigInt numerator, BigInt denominator) {
    if (denominator == 0) {
      throw std::invalid_argument("Rational: zero denominator");
    }
    if (denominator < 0) {
      numerator = -numerator;
      denominator = -denominator;
    }
    value_ = Backing(std::move(numerator), std::move(denominator));
  }

  static Rational from_big(boost::multiprecision::cpp_rational v) {
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  // Accepts "2", "0.33", ".5", "17.", "1/3", with an optional leading sign.
  // Decimal literals convert exactly (0.33 -> 33/100). No exponents.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational::from_big(-a.value_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

  // "33/100", or just "3" for integers.
  std::string to_fraction() const {
    std::string s = numerator().str();
    if (!is_integer()) {
      s += "/" + denominator().str();
    }
    return s;
  }

  // True when the denominator is of the form 2^a * 5^b, i.e. the value has a
  // finite decimal expansion.
  bool has_finite_decimal() const {
    BigInt d = denominator();
    while (d % 2 == 0) d /= 2;
    while (d % 5 == 0) d /= 5;
    return d == 1;
  }

  // Exact decimal text, e.g. 33/100 -> "0.33". Pre: has_finite_decimal().
  std::string to_decimal_exact() const;

 private:
  using Backing = boost::multiprecision::cpp_rational;
  Backing value_{};
};

// Decimal rendering of `r` rounded half-up at `places` fractional digits.
// Exact integer arithmetic throughout: the printed string never differs from
// the exact value by more than half an ulp of the printed precision.
std::string decimal_string(const Rational& r, int places);

template <typename Stream>
Stream& operator<<(Stream& os, const Rational& r) {
  os << r.to_fraction();
  return os;
}

// ---------------------------------------------------------------------------

inline std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t& p) {
    std::string d;
    while (p < text.size() && text[p] >= '0' && text[p] <= '9') d += text[p++];
    return d;
  };
  const std::string whole = digits(pos);
  BigInt num;
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    const std::string frac = digits(pos);
    if (whole.empty() && frac.empty()) return std::nullopt;
    num = BigInt(whole.empty() ? "0" : whole);
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::string d = digits(pos);
    if (whole.empty() || d.empty()) return std::nullopt;
    num = BigInt(whole);
    den = BigInt(d);
    if (den == 0) return std::nullopt;
  } else {
    if (whole.empty()) return std::nullopt;
    num = BigInt(whole);
  }
  if (pos != text.size()) return std::nullopt;
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

inline std::string Rational::to_decimal_exact() const {
  BigInt d = denominator();
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) {
    throw std::logic_error("Rational::to_decimal_exact: no finite expansion");
  }
  const int places = twos > fives ? twos : fives;
  return decimal_string(*this, places);
}

inline std::string decimal_string(const Rational& r, int places) {
  if (places < 0) throw std::invalid_argument("decimal_string: negative places");
  BigInt num = r.numerator();
  const BigInt den = r.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt rem = scaled % den;
  if (rem * 2 >= den) ++q;  // round half up
  std::string digits = q.str();
  std::string out;
  if (places == 0) {
    out = digits;
  } else {
    if (static_cast<int>(digits.size()) <= places) {
      digits.insert(0, places + 1 - digits.size(), '0');
    }
    out = digits.substr(0, digits.size() - places) + "." +
          digits.substr(digits.size() - places);
  }
  if (negative && q != 0) out.insert(0, 1, '-');
  return out;
}

}  // namespace argstrength
