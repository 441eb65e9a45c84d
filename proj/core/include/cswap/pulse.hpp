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

#include <optional>
#include <string>
#include <vector>

#include "cswap/cavity.hpp"

namespace cswap {

// Gaussian single-photon pulse. The spectral density
//   |f(w)|^2 = sqrt(2 / (pi bw^2)) exp(-2 w^2 / bw^2)
// is normalized to unit integral, which the loss and fidelity formulas need.
struct PulseSpec {
  double bandwidth = 0.1;

  void validate() const;
  double spectral_density(double omega) const;
};

enum class QuadratureMethod { GaussHermite, AdaptiveSimpson };

struct QuadratureConfig {
  QuadratureMethod method = QuadratureMethod::GaussHermite;
  // Gauss-Hermite: 8 to 256. Accuracy is checked against a 2x rule.
  int node_count = 64;
  // Adaptive Simpson: relative tolerance in (0, 1e-4].
  double tolerance = 1e-11;

  void validate() const;
};

// Relative accuracy every overlap computation must certify.
inline constexpr double kOverlapAccuracy = 1e-9;

// Pulse-averaged transmission (atom decoupled, superscript 1) and reflection
// (atom coupled, superscript 0) probabilities, and the normalized overlaps
// of the scattered pulse with the incident pulse shape.
struct OverlapSet {
  double t_h1 = 1.0;
  double t_v1 = 1.0;
  double r_h0 = 1.0;
  double r_v0 = 1.0;
  cplx xi_h1{1.0, 0.0};
  cplx xi_v1{1.0, 0.0};
  cplx xi_h0{1.0, 0.0};
  cplx xi_v0{1.0, 0.0};
  // Relative quadrature error estimate of the computation that produced this.
  double residual = 0.0;

  // Probabilities in [0, 1 + 1e-12], |xi| <= 1 + 1e-12.
  void validate() const;
};

struct GateMetrics {
  double p = 0.0;  // photon loss probability
  double F = 1.0;  // fidelity of the heralded two-photon output
};

OverlapSet overlaps(const CavityParams& params, const PulseSpec& pulse,
                    const QuadratureConfig& quad = {});

// p = 1 - (t_h1 t_v1 + r_h0 r_v0) / 2
// F = |xi_h0 xi_v0 + xi_h1 xi_v1|^2 / 4
GateMetrics metrics(const OverlapSet& ov);

struct SweepRow {
  double g_over_kappa = 0.0;
  double dw_over_kappa = 0.0;
  double p = 0.0;
  double F = 0.0;
  double residual = 0.0;
  std::optional<std::string> error;
};

// Grid over g/kappa x bandwidth/kappa. `base` supplies kappa and gamma (it is
// normalized first); g_h and g_v are both set from each grid value. Rows come
// back sorted by (g/kappa, bandwidth/kappa) whatever `workers` is. A point
// whose quadrature fails carries `error` and NaN metrics.
std::vector<SweepRow> sweep(const CavityParams& base,
                            std::vector<double> g_over_kappa,
                            std::vector<double> dw_over_kappa,
                            const QuadratureConfig& quad = {},
                            unsigned workers = 1);

}  // namespace cswap
