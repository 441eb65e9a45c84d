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

#pragma once

#include <complex>
#include <functional>

namespace cswap {

using cplx = std::complex<double>;

enum class Polarization { H, V };

// Atomic ground state seen by the cavity. Coupled is |0>, which drives the
// |0> <-> |e_mu> transitions; Decoupled is |1>, which leaves the cavity empty.
enum class AtomBranch { Coupled, Decoupled };

// Rates of a two-sided single-atom cavity with symmetric mirrors, one set per
// polarization mode. All rates share one angular-frequency unit; the
// canonical form produced by normalized() measures everything in units of
// kappa_h.
struct CavityParams {
  double g_h = 0.0;
  double g_v = 0.0;
  double kappa_h = 1.0;
  double kappa_v = 1.0;
  double gamma_h = 0.0;
  double gamma_v = 0.0;

  // Same (g, kappa, gamma) for both polarizations.
  static CavityParams symmetric(double g, double kappa, double gamma);

  double g(Polarization pol) const { return pol == Polarization::H ? g_h : g_v; }
  double kappa(Polarization pol) const {
    return pol == Polarization::H ? kappa_h : kappa_v;
  }
  double gamma(Polarization pol) const {
    return pol == Polarization::H ? gamma_h : gamma_v;
  }

  // Throws DomainError on non-finite or negative rates, or kappa <= 0.
  void validate() const;

  // Rescaled copy with kappa_h == 1.
  CavityParams normalized() const;

  bool operator==(const CavityParams&) const = default;
};

// Reflection, transmission and noise coefficients at one detuning.
struct SpectralResponse {
  cplx r;
  cplx t;
  cplx m;

  // |r|^2 + |t|^2 + |m|^2 - 1
  double unitarity_residual() const;
};

// Linearized output-field coefficients of the dressed cavity at detuning
// omega (same unit as params). The Coupled branch is evaluated in the form
// with (i omega - gamma/2) cleared from all denominators, so gamma = 0,
// omega = 0 returns the analytic limit (-1, 0, 0).
SpectralResponse response(const CavityParams& params, Polarization pol,
                          AtomBranch branch, double omega);

using ResponseFn = std::function<SpectralResponse(
    const CavityParams&, Polarization, AtomBranch, double)>;

}  // namespace cswap
