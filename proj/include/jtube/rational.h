#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace jtube {

// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(int64_t num, int64_t den = 1);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  double ToDouble() const { return static_cast<double>(num_) / den_; }
  bool IsInteger() const { return den_ == 1; }
  std::string ToString() const;

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

// A Riesz exponent: always carries a double, and an exact rational value
// whenever the input was given as one.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(Rational exact) : value_(exact.ToDouble()), exact_(exact) {}
  // Integers and dyadic fractions with small denominators are recognized
  // as exact; anything else is carried as an inexact double.
  static Exponent FromDouble(double v);
  // Accepts "p/q", integers, decimals ("0.25", "1.5e-1"). Throws
  // ValidationError on malformed input.
  static Exponent Parse(const std::string& text);

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool is_exact() const { return exact_.has_value(); }
  bool IsInteger() const;
  std::string ToString() const;

  // True iff value * m lies in 2Z (exact when possible, 1e-12 otherwise).
  bool TimesIntegerIsEven(int64_t m) const;
  // True iff value * m lies in Z.
  bool TimesIntegerIsInteger(int64_t m) const;
  // Exact product with a rational (result exact iff this is exact).
  Exponent Times(const Rational& q) const;

 private:
  double value_ = 0.0;
  std::optional<Rational> exact_;
};

}  // namespace jtube
