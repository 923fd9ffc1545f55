#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace seyver {

/// Arbitrary-precision rational with an always-canonical representation:
/// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);

  /// Accepts "p", "p/q" and plain decimals ("0.65", "-1.25"); exact in all
  /// three forms. Returns nullopt on malformed input or a zero denominator.
  static std::optional<Rational> parse(std::string_view s);

  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Canonical "p/q" form, denominator always present ("0/1", "3/2", "5/1").
  std::string str() const;
  double to_double() const { return v_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

Rational abs(const Rational& r);

/// 10^k as a rational, k may be negative.
Rational pow10(int k);

}  // namespace seyver

template <>
struct std::hash<seyver::Rational> {
  std::size_t operator()(const seyver::Rational& r) const noexcept;
};
