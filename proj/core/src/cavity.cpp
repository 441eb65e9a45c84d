// Copyright 2026 The cavity-cswap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cswap/cavity.hpp"

#include <cmath>
#include <string>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

void require_rate(double value, const char* name) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string("cavity rate ") + name +
                      " must be finite and non-negative, got " +
                      std::to_string(value));
  }
}

}  // namespace

CavityParams CavityParams::symmetric(double g, double kappa, double gamma) {
  return CavityParams{g, g, kappa, kappa, gamma, gamma};
}

void CavityParams::validate() const {
  require_rate(g_h, "g_h");
  require_rate(g_v, "g_v");
  require_rate(kappa_h, "kappa_h");
  require_rate(kappa_v, "kappa_v");
  require_rate(gamma_h, "gamma_h");
  require_rate(gamma_v, "gamma_v");
  if (kappa_h <= 0.0 || kappa_v <= 0.0) {
    throw DomainError("cavity decay rates kappa_h, kappa_v must be positive");
  }
}

CavityParams CavityParams::normalized() const {
  validate();
  const double unit = kappa_h;
  return CavityParams{g_h / unit,     g_v / unit,     1.0,
                      kappa_v / unit, gamma_h / unit, gamma_v / unit};
}

double SpectralResponse::unitarity_residual() const {
  return std::norm(r) + std::norm(t) + std::norm(m) - 1.0;
}

SpectralResponse response(const CavityParams& params, Polarization pol,
                          AtomBranch branch, double omega) {
  params.validate();
  if (!std::isfinite(omega)) {
    throw DomainError("detuning omega must be finite");
  }
  const double kappa = params.kappa(pol);
  const double g = params.g(pol);
  const double gamma = params.gamma(pol);
  const cplx iw{0.0, omega};

  const double g2 = branch == AtomBranch::Coupled ? g * g : 0.0;
  if (g2 == 0.0) {
    // Empty cavity: nothing couples to the noise port.
    const cplx den = kappa - iw;
    return {iw / den, kappa / den, cplx{0.0, 0.0}};
  }

  // Multiply numerator and denominator by (i omega - gamma/2).
  const cplx pole = iw - 0.5 * gamma;
  const cplx den = (kappa - iw) * pole - g2;
  return {(iw * pole + g2) / den, kappa * pole / den,
          cplx{0.0, std::sqrt(kappa * gamma) * g} / den};
}

}  // namespace cswap
