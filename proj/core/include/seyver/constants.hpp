#pragma once

#include "seyver/field.hpp"

namespace seyver::consts {

/// The generator of the working field (unique root of the defining quintic
/// in (0,1)) and the derived constants of the certificate and the
/// y-variable reduction. Built once, shared process-wide.
const FieldElement& gamma();
const FieldElement& gamma_inv();
/// w = gamma^2 + 2 gamma^3
const FieldElement& w();
/// theta = 2 + 2 gamma - 4 gamma^3
const FieldElement& theta();
/// rho = 1 + theta - gamma^{-1} theta
const FieldElement& rho();

}  // namespace seyver::consts
