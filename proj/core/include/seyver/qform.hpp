#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "seyver/field.hpp"

namespace seyver {

/// Homogeneous linear form c1*y1 + ... + c4*y4 over the field.
struct LinForm4 {
  std::array<FieldElement, 4> c{};

  static LinForm4 var(int i);  // y_i, 1-based
  bool is_zero() const;

  friend LinForm4 operator+(const LinForm4& a, const LinForm4& b);
  friend LinForm4 operator-(const LinForm4& a, const LinForm4& b);
  LinForm4 operator-() const;
  friend LinForm4 operator*(const FieldElement& s, const LinForm4& a);
  FieldElement eval(const std::array<FieldElement, 4>& y) const;
};

/// Symmetric quadratic form in y1..y4; the coefficient of y_i*y_j (i <= j)
/// is stored once, matching the convention sum_{i<=j} q_ij y_i y_j.
class QForm4 {
 public:
  QForm4() = default;

  const FieldElement& entry(int i, int j) const;   // 1-based, any order
  void add_entry(int i, int j, const FieldElement& v);

  bool is_zero() const;

  friend QForm4 operator+(const QForm4& a, const QForm4& b);
  friend QForm4 operator-(const QForm4& a, const QForm4& b);
  friend QForm4 operator*(const FieldElement& s, const QForm4& a);
  friend bool operator==(const QForm4& a, const QForm4& b);

  /// Product of two linear forms, expanded into entry convention.
  static QForm4 product(const LinForm4& a, const LinForm4& b);

  FieldElement eval(const std::array<FieldElement, 4>& y) const;

 private:
  static int index(int i, int j);
  std::array<FieldElement, 10> e_{};
};

/// Polynomial of total degree <= 2 in y1..y4 with field coefficients.
/// Multiplication throws if the product would exceed degree 2. This is the
/// carrier that lets the scalar F formula be instantiated symbolically.
struct Quad4 {
  FieldElement c;
  LinForm4 l;
  QForm4 q;

  Quad4() = default;
  Quad4(long n) : c(n) {}                       // NOLINT: implicit by design
  Quad4(const FieldElement& k) : c(k) {}        // NOLINT: implicit by design
  static Quad4 var(int i);

  bool linear_or_const() const { return q.is_zero(); }
  bool constant() const { return q.is_zero() && l.is_zero(); }

  friend Quad4 operator+(const Quad4& a, const Quad4& b);
  friend Quad4 operator-(const Quad4& a, const Quad4& b);
  friend Quad4 operator*(const Quad4& a, const Quad4& b);
  friend Quad4 operator*(const FieldElement& s, const Quad4& a);
  Quad4 operator-() const;
};

inline Quad4 half_of(const Quad4& a) { return FieldElement(Rational(1, 2)) * a; }

}  // namespace seyver
