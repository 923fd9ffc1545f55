#include "seyver/qform.hpp"

namespace seyver {

LinForm4 LinForm4::var(int i) {
  if (i < 1 || i > 4) throw std::out_of_range("LinForm4::var: index out of range");
  LinForm4 f;
  f.c[static_cast<size_t>(i - 1)] = FieldElement(1);
  return f;
}

bool LinForm4::is_zero() const {
  for (const auto& v : c)
    if (!v.is_zero()) return false;
  return true;
}

LinForm4 operator+(const LinForm4& a, const LinForm4& b) {
  LinForm4 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

LinForm4 operator-(const LinForm4& a, const LinForm4& b) {
  LinForm4 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

LinForm4 LinForm4::operator-() const {
  LinForm4 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = -c[i];
  return r;
}

LinForm4 operator*(const FieldElement& s, const LinForm4& a) {
  LinForm4 r;
  for (size_t i = 0; i < 4; ++i) r.c[i] = s * a.c[i];
  return r;
}

FieldElement LinForm4::eval(const std::array<FieldElement, 4>& y) const {
  FieldElement acc;
  for (size_t i = 0; i < 4; ++i) acc += c[i] * y[i];
  return acc;
}

int QForm4::index(int i, int j) {
  if (i < 1 || j < 1 || i > 4 || j > 4) throw std::out_of_range("QForm4: index out of range");
  if (i > j) std::swap(i, j);
  // (1,1) (1,2) (1,3) (1,4) (2,2) (2,3) (2,4) (3,3) (3,4) (4,4)
  static constexpr int base[5] = {0, 0, 4, 7, 9};
  return base[i] + (j - i);
}

const FieldElement& QForm4::entry(int i, int j) const {
  return e_[static_cast<size_t>(index(i, j))];
}

void QForm4::add_entry(int i, int j, const FieldElement& v) {
  e_[static_cast<size_t>(index(i, j))] += v;
}

bool QForm4::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

QForm4 operator+(const QForm4& a, const QForm4& b) {
  QForm4 r;
  for (size_t i = 0; i < 10; ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

QForm4 operator-(const QForm4& a, const QForm4& b) {
  QForm4 r;
  for (size_t i = 0; i < 10; ++i) r.e_[i] = a.e_[i] - b.e_[i];
  return r;
}

QForm4 operator*(const FieldElement& s, const QForm4& a) {
  QForm4 r;
  for (size_t i = 0; i < 10; ++i) r.e_[i] = s * a.e_[i];
  return r;
}

bool operator==(const QForm4& a, const QForm4& b) { return (a - b).is_zero(); }

QForm4 QForm4::product(const LinForm4& a, const LinForm4& b) {
  QForm4 r;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      FieldElement term = a.c[static_cast<size_t>(i - 1)] * b.c[static_cast<size_t>(j - 1)];
      if (!term.is_zero()) r.add_entry(i, j, term);
    }
  return r;
}

FieldElement QForm4::eval(const std::array<FieldElement, 4>& y) const {
  FieldElement acc;
  for (int i = 1; i <= 4; ++i)
    for (int j = i; j <= 4; ++j) acc += entry(i, j) * y[static_cast<size_t>(i - 1)] * y[static_cast<size_t>(j - 1)];
  return acc;
}

Quad4 Quad4::var(int i) {
  Quad4 r;
  r.l = LinForm4::var(i);
  return r;
}

Quad4 operator+(const Quad4& a, const Quad4& b) {
  Quad4 r;
  r.c = a.c + b.c;
  r.l = a.l + b.l;
  r.q = a.q + b.q;
  return r;
}

Quad4 operator-(const Quad4& a, const Quad4& b) {
  Quad4 r;
  r.c = a.c - b.c;
  r.l = a.l - b.l;
  r.q = a.q - b.q;
  return r;
}

Quad4 Quad4::operator-() const {
  Quad4 r;
  r.c = -c;
  r.l = -l;
  r.q = FieldElement(-1) * q;
  return r;
}

Quad4 operator*(const FieldElement& s, const Quad4& a) {
  Quad4 r;
  r.c = s * a.c;
  r.l = s * a.l;
  r.q = s * a.q;
  return r;
}

Quad4 operator*(const Quad4& a, const Quad4& b) {
  if (!a.q.is_zero() && !b.constant())
    throw std::logic_error("Quad4: product exceeds degree 2");
  if (!b.q.is_zero() && !a.constant())
    throw std::logic_error("Quad4: product exceeds degree 2");
  Quad4 r;
  r.c = a.c * b.c;
  r.l = (a.c * b.l) + (b.c * a.l);
  r.q = QForm4::product(a.l, b.l) + (a.c * b.q) + (b.c * a.q);
  return r;
}

}  // namespace seyver
