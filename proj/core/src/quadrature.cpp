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

#include "cswap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

std::atomic<std::uint64_t> g_pass_count{0};

// Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal Jacobi
// matrix (off-diagonal sqrt(k/2)). Each node is then polished by Newton steps
// on the orthonormal Hermite recurrence, whose derivative also gives the
// weight 2 / (sqrt(2n) p_{n-1})^2 without relying on eigenvector accuracy.
GaussHermiteRule build_rule(int n) {
  const double pim4 = std::pow(std::numbers::pi, -0.25);
  GaussHermiteRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = std::sqrt(std::numbers::pi);
    return rule;
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(0.5 * k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig;
  eig.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("Gauss-Hermite eigenvalue problem failed for n = " + std::to_string(n), 1.0);
  }

  for (int i = 0; i < n; ++i) {
    double z = eig.eigenvalues()(i);
    double dp = 0.0;
    for (int iter = 0; iter < 8; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      dp = std::sqrt(2.0 * n) * p2;
      const double step = p1 / dp;
      z -= step;
      if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = z;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / (dp * dp);
  }
  // Exact symmetry about zero.
  for (int i = 0; i < n / 2; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
    const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = rule.weights[hi] = w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return rule;
}

}  // namespace

const GaussHermiteRule& gauss_hermite_rule(int n) {
  if (n < 1 || n > 512) {
    throw DomainError("Gauss-Hermite node count must be in [1, 512], got " +
                      std::to_string(n));
  }
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussHermiteRule>(build_rule(n));
  return *slot;
}

std::uint64_t quadrature_pass_count() noexcept { return g_pass_count.load(); }

void note_quadrature_pass() noexcept { g_pass_count.fetch_add(1); }

}  // namespace cswap
