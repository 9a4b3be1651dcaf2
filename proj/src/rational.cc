#include "jtube/rational.h"

#include <cmath>
#include <numeric>
#include <regex>

#include "jtube/errors.h"

namespace jtube {

namespace {

constexpr double kInexactTol = 1e-12;

bool NearInteger(double v) { return std::abs(v - std::round(v)) <= kInexactTol * std::max(1.0, std::abs(v)); }

int64_t Pow10(int e) {
  int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 10;
  return p;
}

}  // namespace

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
  int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

Exponent Exponent::FromDouble(double v) {
  if (!std::isfinite(v)) throw ValidationError("exponent must be finite");
  for (int64_t den : {1, 2, 4, 8, 16, 32, 64}) {
    double scaled = v * static_cast<double>(den);
    if (std::abs(scaled) < 1e15 && scaled == std::round(scaled)) {
      return Exponent(Rational(static_cast<int64_t>(scaled), den));
    }
  }
  Exponent e;
  e.value_ = v;
  return e;
}

Exponent Exponent::Parse(const std::string& text) {
  static const std::regex kFraction(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
  static const std::regex kDecimal(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
  std::smatch m;
  if (std::regex_match(text, m, kFraction)) {
    int64_t den = std::stoll(m[2]);
    if (den == 0) throw ValidationError("exponent '" + text + "' has zero denominator");
    return Exponent(Rational(std::stoll(m[1]), den));
  }
  if (std::regex_match(text, m, kDecimal) && (m[2].length() + m[3].length()) > 0) {
    std::string digits = m[2].str() + m[3].str();
    int exp10 = m[4].matched ? std::stoi(m[4]) : 0;
    int shift = static_cast<int>(m[3].length()) - exp10;
    double value = std::stod(text);
    // Exact when the decimal fits comfortably in 64-bit arithmetic.
    size_t first = digits.find_first_not_of('0');
    std::string trimmed = first == std::string::npos ? "0" : digits.substr(first);
    if (trimmed.size() <= 15 && shift >= -3 && shift <= 15) {
      int64_t num = std::stoll(trimmed);
      if (m[1] == "-") num = -num;
      if (shift >= 0) return Exponent(Rational(num, Pow10(shift)));
      return Exponent(Rational(num * Pow10(-shift), 1));
    }
    Exponent e;
    e.value_ = value;
    return e;
  }
  throw ValidationError("cannot parse exponent '" + text + "'");
}

bool Exponent::IsInteger() const {
  if (exact_) return exact_->IsInteger();
  return NearInteger(value_);
}

std::string Exponent::ToString() const {
  if (exact_) return exact_->ToString();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value_);
  return buf;
}

bool Exponent::TimesIntegerIsEven(int64_t m) const {
  if (exact_) {
    Rational half = *exact_ * Rational(m, 2);
    return half.IsInteger();
  }
  return NearInteger(value_ * static_cast<double>(m) / 2.0);
}

bool Exponent::TimesIntegerIsInteger(int64_t m) const {
  if (exact_) return (*exact_ * Rational(m)).IsInteger();
  return NearInteger(value_ * static_cast<double>(m));
}

Exponent Exponent::Times(const Rational& q) const {
  if (exact_) return Exponent(*exact_ * q);
  Exponent e;
  e.value_ = value_ * q.ToDouble();
  return e;
}

}  // namespace jtube
