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

// Independent reference computations used to freeze and cross-check expected
// values. Nothing here calls into the simplified library code paths.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "cswap/cavity.hpp"

namespace cswap::testing {

// Coefficients straight from the printed rational forms, with the atomic
// projector P0 = 1 (coupled) or 0 (decoupled). Singular at omega = 0 when
// gamma = 0 in the coupled branch.
inline SpectralResponse printed_response(double g, double kappa, double gamma, bool coupled,
                                         double omega) {
  const cplx i{0.0, 1.0};
  const double p0 = coupled ? 1.0 : 0.0;
  const cplx dressed = g * g * p0 / (i * omega - gamma / 2.0);
  const cplx den = kappa - i * omega - dressed;
  const cplx r = (i * omega + dressed) / den;
  const cplx t = kappa / den;
  const cplx m = i * std::sqrt(kappa * gamma) * g * p0 / (i * omega - gamma / 2.0) / den;
  return {r, t, m};
}

struct BruteOverlaps {
  double t1 = 0.0;
  double r0 = 0.0;
  cplx mean_t1;
  cplx mean_r0;
};

// Uniform-grid trapezoid average over the unit-normalized Gaussian
// |f|^2 = sqrt(2/pi)/bw exp(-2 w^2/bw^2) on [-span*bw, span*bw].
inline BruteOverlaps trapezoid_overlaps(double g, double kappa, double gamma, double bw,
                                        int points = 400001, double span = 8.0) {
  BruteOverlaps out;
  const double a = -span * bw;
  const double h = 2.0 * span * bw / (points - 1);
  for (int k = 0; k < points; ++k) {
    const double w = a + k * h;
    const double weight = (k == 0 || k == points - 1 ? 0.5 : 1.0) * h *
                          std::sqrt(2.0 / std::numbers::pi) / bw * std::exp(-2.0 * w * w / (bw * bw));
    // w never hits 0 exactly for an even number of intervals offset; guard anyway.
    const double ww = (w == 0.0) ? 1e-300 : w;
    const auto coupled = printed_response(g, kappa, gamma, true, ww);
    const auto empty = printed_response(g, kappa, gamma, false, ww);
    out.t1 += weight * std::norm(empty.t);
    out.r0 += weight * std::norm(coupled.r);
    out.mean_t1 += weight * empty.t;
    out.mean_r0 += weight * coupled.r;
  }
  return out;
}

}  // namespace cswap::testing
