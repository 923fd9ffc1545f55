#pragma once

#include <array>
#include <string>
#include <vector>

#include "seyver/poly.hpp"
#include "seyver/rational.hpp"

namespace seyver {

/// The quintic 8x^5 + 4x^4 - 12x^3 - 7x^2 + 2x + 4 whose unique root gamma
/// in (0, 1) generates the working number field.
const Poly& defining_quintic();

/// The cubic 2x^3 + x^2 - 1 of the baseline constant lambda.
const Poly& baseline_cubic();

/// Certified interval around gamma of width at most `width`, refined by
/// bisection from (0, 1). The refinement is cached process-wide.
IsolatingInterval gamma_interval(const Rational& width);

/// Element of Q(gamma), stored as the reduced representative
/// a0 + a1*g + a2*g^2 + a3*g^3 + a4*g^4. All operations reduce eagerly
/// modulo the defining quintic; values are immutable and safe to share
/// across threads.
class FieldElement {
 public:
  FieldElement() = default;                        // zero
  FieldElement(long n) : FieldElement(Rational(n)) {}  // NOLINT: implicit by design
  FieldElement(const Rational& r) { c_[0] = r; }       // NOLINT: implicit by design

  static FieldElement gamma();
  static FieldElement from_coords(std::array<Rational, 5> coords);

  const std::array<Rational, 5>& coords() const { return c_; }

  /// True iff the value is exactly zero. Decided without assuming the
  /// quintic irreducible: a zero coordinate vector is zero; otherwise the
  /// gcd of the representative with the quintic is taken, and a nonconstant
  /// gcd is tested for a root in gamma's isolating interval.
  bool is_zero() const;

  /// Exact sign (-1, 0, +1), by interval refinement once certified nonzero.
  int sign() const;

  /// Multiplicative inverse via the extended Euclidean algorithm against the
  /// defining quintic. Throws std::domain_error on zero.
  FieldElement inverse() const;

  /// Decimal approximation with `digits` digits after the point, correctly
  /// rounded with ties resolved to the even final digit.
  std::string approx(int digits) const;

  double to_double() const;

  /// True iff the value lies in Q (all higher coordinates vanish).
  bool is_rational() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  // Value comparisons (exact, via the sign of the difference).
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  friend bool operator<(const FieldElement& a, const FieldElement& b);
  friend bool operator<=(const FieldElement& a, const FieldElement& b);
  friend bool operator>(const FieldElement& a, const FieldElement& b) { return b < a; }
  friend bool operator>=(const FieldElement& a, const FieldElement& b) { return b <= a; }

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a);

 private:
  std::array<Rational, 5> c_{};
};

/// Reduces an arbitrary coefficient sequence (lowest degree first, in powers
/// of gamma) to the canonical degree-<=4 representative.
FieldElement reduce_mod_p(const std::vector<Rational>& raw);

FieldElement pow(const FieldElement& a, unsigned e);

inline Rational half_of(const Rational& r) { return r * Rational(1, 2); }
inline FieldElement half_of(const FieldElement& a) { return a * FieldElement(Rational(1, 2)); }
inline double half_of(double x) { return x * 0.5; }

}  // namespace seyver
