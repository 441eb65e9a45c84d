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

#include "cswap/pulse.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "cswap/errors.hpp"
#include "cswap/quadrature.hpp"

namespace cswap {

namespace {

constexpr double kSlack = 1e-12;

// Integrand layout, per polarization (h then v):
//   |T1|^2, |R0|^2, Re T1, Im T1, Re R0, Im R0
constexpr std::size_t kTerms = 12;
using Terms = std::array<double, kTerms>;

Terms integrand(const CavityParams& params, double omega) {
  Terms out{};
  std::size_t k = 0;
  for (auto pol : {Polarization::H, Polarization::V}) {
    const cplx t1 = response(params, pol, AtomBranch::Decoupled, omega).t;
    const cplx r0 = response(params, pol, AtomBranch::Coupled, omega).r;
    out[k++] = std::norm(t1);
    out[k++] = std::norm(r0);
    out[k++] = t1.real();
    out[k++] = t1.imag();
    out[k++] = r0.real();
    out[k++] = r0.imag();
  }
  return out;
}

// Averages of the integrand over |f|^2 with an n-point Gauss-Hermite rule,
// after the substitution u = sqrt(2) w / bw that turns |f|^2 dw into
// exp(-u^2) du / sqrt(pi).
Terms gauss_hermite_average(const CavityParams& params, double bandwidth, int n) {
  note_quadrature_pass();
  const auto& rule = gauss_hermite_rule(n);
  Terms sum{};
  const double scale = bandwidth / std::numbers::sqrt2;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const Terms f = integrand(params, scale * rule.nodes[i]);
    for (std::size_t k = 0; k < kTerms; ++k) sum[k] += rule.weights[i] * f[k];
  }
  for (auto& s : sum) s *= std::numbers::inv_sqrtpi;
  return sum;
}

double relative_gap(const Terms& a, const Terms& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < kTerms; ++k) {
    const double denom = std::max(std::abs(b[k]), 1e-6);
    worst = std::max(worst, std::abs(a[k] - b[k]) / denom);
  }
  return worst;
}

OverlapSet assemble(const Terms& s, double residual) {
  auto xi = [](double prob, double re, double im) {
    return prob > 0.0 ? cplx{re, im} / std::sqrt(prob) : cplx{0.0, 0.0};
  };
  OverlapSet ov;
  ov.t_h1 = s[0];
  ov.r_h0 = s[1];
  ov.xi_h1 = xi(s[0], s[2], s[3]);
  ov.xi_h0 = xi(s[1], s[4], s[5]);
  ov.t_v1 = s[6];
  ov.r_v0 = s[7];
  ov.xi_v1 = xi(s[6], s[8], s[9]);
  ov.xi_v0 = xi(s[7], s[10], s[11]);
  ov.residual = residual;
  return ov;
}

void check_probability(double value, const char* name) {
  if (!(value >= -kSlack && value <= 1.0 + kSlack)) {
    throw DomainError(std::string("overlap probability ") + name +
                      " outside [0, 1]: " + std::to_string(value));
  }
}

void check_overlap(cplx value, const char* name) {
  if (!(std::abs(value) <= 1.0 + kSlack)) {
    throw DomainError(std::string("mode overlap ") + name +
                      " has modulus above 1: " + std::to_string(std::abs(value)));
  }
}

}  // namespace

void PulseSpec::validate() const {
  if (!std::isfinite(bandwidth) || bandwidth <= 0.0) {
    throw DomainError("pulse bandwidth must be finite and positive");
  }
}

double PulseSpec::spectral_density(double omega) const {
  const double x = omega / bandwidth;
  return std::sqrt(2.0 / std::numbers::pi) / bandwidth * std::exp(-2.0 * x * x);
}

void QuadratureConfig::validate() const {
  if (method == QuadratureMethod::GaussHermite) {
    if (node_count < 8 || node_count > 256) {
      throw DomainError("Gauss-Hermite node count must be in [8, 256]");
    }
  } else if (!(tolerance > 0.0 && tolerance <= 1e-4)) {
    throw DomainError("adaptive Simpson tolerance must be in (0, 1e-4]");
  }
}

void OverlapSet::validate() const {
  check_probability(t_h1, "t_h1");
  check_probability(t_v1, "t_v1");
  check_probability(r_h0, "r_h0");
  check_probability(r_v0, "r_v0");
  check_overlap(xi_h1, "xi_h1");
  check_overlap(xi_v1, "xi_v1");
  check_overlap(xi_h0, "xi_h0");
  check_overlap(xi_v0, "xi_v0");
}

OverlapSet overlaps(const CavityParams& params, const PulseSpec& pulse,
                    const QuadratureConfig& quad) {
  params.validate();
  pulse.validate();
  quad.validate();

  if (quad.method == QuadratureMethod::GaussHermite) {
    const Terms coarse = gauss_hermite_average(params, pulse.bandwidth, quad.node_count);
    const Terms fine = gauss_hermite_average(params, pulse.bandwidth, 2 * quad.node_count);
    const double residual = relative_gap(coarse, fine);
    if (!(residual <= kOverlapAccuracy)) {
      throw NumericalError("Gauss-Hermite overlaps not converged with " +
                               std::to_string(quad.node_count) + " nodes",
                           residual);
    }
    return assemble(coarse, residual);
  }

  // The weight is below exp(-72) outside six bandwidths.
  const double half_width = 6.0 * pulse.bandwidth;
  auto weighted = [&](double omega) {
    Terms f = integrand(params, omega);
    const double w = pulse.spectral_density(omega);
    for (auto& v : f) v *= w;
    return f;
  };
  Terms scale;
  scale.fill(1.0);
  const auto result =
      adaptive_simpson<kTerms>(weighted, -half_width, half_width, quad.tolerance, scale);
  if (!result.converged || !(result.error_estimate <= kOverlapAccuracy)) {
    throw NumericalError("adaptive Simpson overlaps not converged",
                         result.error_estimate);
  }
  return assemble(result.value, result.error_estimate);
}

GateMetrics metrics(const OverlapSet& ov) {
  ov.validate();
  GateMetrics out;
  const double success = 0.5 * (ov.t_h1 * ov.t_v1 + ov.r_h0 * ov.r_v0);
  out.p = std::clamp(1.0 - success, 0.0, 1.0);
  out.F = std::clamp(std::norm(ov.xi_h0 * ov.xi_v0 + ov.xi_h1 * ov.xi_v1) / 4.0, 0.0, 1.0);
  return out;
}

std::vector<SweepRow> sweep(const CavityParams& base, std::vector<double> g_over_kappa,
                            std::vector<double> dw_over_kappa,
                            const QuadratureConfig& quad, unsigned workers) {
  const CavityParams unit = base.normalized();
  quad.validate();
  if (g_over_kappa.empty() || dw_over_kappa.empty()) {
    throw DomainError("sweep grids must be non-empty");
  }
  for (double v : g_over_kappa) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("g/kappa grid values must be finite, >= 0");
  }
  for (double v : dw_over_kappa) {
    if (!std::isfinite(v) || v <= 0.0) throw DomainError("bandwidth grid values must be finite, > 0");
  }
  std::sort(g_over_kappa.begin(), g_over_kappa.end());
  std::sort(dw_over_kappa.begin(), dw_over_kappa.end());

  std::vector<SweepRow> rows;
  rows.reserve(g_over_kappa.size() * dw_over_kappa.size());
  for (double g : g_over_kappa) {
    for (double dw : dw_over_kappa) rows.push_back(SweepRow{g, dw, 0.0, 0.0, 0.0, {}});
  }

  auto evaluate = [&](SweepRow& row) {
    CavityParams params = unit;
    params.g_h = row.g_over_kappa;
    params.g_v = row.g_over_kappa;
    try {
      const OverlapSet ov = overlaps(params, PulseSpec{row.dw_over_kappa}, quad);
      const GateMetrics m = metrics(ov);
      row.p = m.p;
      row.F = m.F;
      row.residual = ov.residual;
    } catch (const NumericalError& e) {
      row.p = std::numeric_limits<double>::quiet_NaN();
      row.F = std::numeric_limits<double>::quiet_NaN();
      row.residual = e.residual();
      row.error = e.what();
    }
  };

  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows.size())));
  if (workers == 1) {
    for (auto& row : rows) evaluate(row);
    return rows;
  }
  // Strided partition; each worker writes only its own rows.
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < rows.size(); i += workers) evaluate(rows[i]);
    });
  }
  pool.clear();
  return rows;
}

}  // namespace cswap
