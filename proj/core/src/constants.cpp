#include "seyver/constants.hpp"

namespace seyver::consts {

const FieldElement& gamma() {
  static const FieldElement g = FieldElement::gamma();
  return g;
}

const FieldElement& gamma_inv() {
  static const FieldElement gi = gamma().inverse();
  return gi;
}

const FieldElement& w() {
  static const FieldElement v = gamma() * gamma() + FieldElement(2) * pow(gamma(), 3);
  return v;
}

const FieldElement& theta() {
  static const FieldElement v =
      FieldElement(2) + FieldElement(2) * gamma() - FieldElement(4) * pow(gamma(), 3);
  return v;
}

const FieldElement& rho() {
  static const FieldElement v = FieldElement(1) + theta() - gamma_inv() * theta();
  return v;
}

}  // namespace seyver::consts
