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

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cswap {

// Nodes and weights of the n-point Gauss-Hermite rule for the weight
// exp(-x^2) on the real line.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached, thread-safe. Throws DomainError for n < 1 or n > 512.
const GaussHermiteRule& gauss_hermite_rule(int n);

// Number of quadrature passes performed in this process (rule applications
// plus adaptive integrations). Used to check that a code path does no
// numerical integration.
std::uint64_t quadrature_pass_count() noexcept;
void note_quadrature_pass() noexcept;

template <std::size_t N>
struct SimpsonResult {
  std::array<double, N> value{};
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

template <std::size_t N>
std::array<double, N> simpson_combine(const std::array<double, N>& fa,
                                      const std::array<double, N>& fm,
                                      const std::array<double, N>& fb,
                                      double width) {
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out[k] = width / 6.0 * (fa[k] + 4.0 * fm[k] + fb[k]);
  }
  return out;
}

template <std::size_t N, class F>
void simpson_step(const F& f, double a, double b, const std::array<double, N>& fa,
                  const std::array<double, N>& fm, const std::array<double, N>& fb,
                  const std::array<double, N>& whole, double tol,
                  const std::array<double, N>& scale, int depth,
                  SimpsonResult<N>& acc) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const auto flm = f(lm);
  const auto frm = f(rm);
  const auto left = simpson_combine<N>(fa, flm, fm, m - a);
  const auto right = simpson_combine<N>(fm, frm, fb, b - m);

  double err = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    err = std::max(err, std::abs(left[k] + right[k] - whole[k]) / scale[k]);
  }
  if (err <= 15.0 * tol || depth <= 0) {
    if (err > 15.0 * tol) acc.converged = false;
    for (std::size_t k = 0; k < N; ++k) {
      // Richardson correction
      acc.value[k] += left[k] + right[k] + (left[k] + right[k] - whole[k]) / 15.0;
    }
    acc.error_estimate += err / 15.0;
    return;
  }
  simpson_step<N>(f, a, m, fa, flm, fm, left, 0.5 * tol, scale, depth - 1, acc);
  simpson_step<N>(f, m, b, fm, frm, fb, right, 0.5 * tol, scale, depth - 1, acc);
}

}  // namespace detail

// Adaptive Simpson integration of a vector-valued integrand over [a, b].
// The error criterion is the largest component error relative to `scale`
// (pass the expected magnitude of each component, or ones for absolute
// errors).
template <std::size_t N, class F>
SimpsonResult<N> adaptive_simpson(const F& f, double a, double b, double tol,
                                  const std::array<double, N>& scale,
                                  int max_depth = 48) {
  note_quadrature_pass();
  SimpsonResult<N> acc;
  // Seed with a uniform split so narrow features are not missed by the
  // first three samples.
  constexpr int kSeedPanels = 16;
  const double h = (b - a) / kSeedPanels;
  for (int i = 0; i < kSeedPanels; ++i) {
    const double lo = a + i * h;
    const double hi = (i + 1 == kSeedPanels) ? b : lo + h;
    const auto flo = f(lo);
    const auto fmid = f(0.5 * (lo + hi));
    const auto fhi = f(hi);
    const auto whole = detail::simpson_combine<N>(flo, fmid, fhi, hi - lo);
    detail::simpson_step<N>(f, lo, hi, flo, fmid, fhi, whole, tol / kSeedPanels,
                            scale, max_depth, acc);
  }
  return acc;
}

}  // namespace cswap
