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

#include "cswap/channel.hpp"

#include <cmath>
#include <random>

#include "cswap/errors.hpp"
#include "gtest/gtest.h"

namespace cswap {
namespace {

using M = PhotonMode;

TEST(NoisyCswap, IdealModelGivesPerfectGate) {
  const auto rho = apply_noisy_cswap(typical_input(), NoisyGateModel::ideal());
  rho.validate();
  EXPECT_NEAR(loss_probability(rho), 0.0, 1e-15);
  EXPECT_NEAR(fidelity(rho), 1.0, 1e-14);
  EXPECT_NEAR(rho.sector_weight(M::Ideal, M::Ideal), 1.0, 1e-14);
}

TEST(NoisyCswap, MatchesClosedFormMetrics) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> gd(0.3, 10.0), kd(0.5, 2.0), gam(0.0, 2.0),
      bwd(0.02, 0.3);
  for (int draw = 0; draw < 50; ++draw) {
    const CavityParams p{gd(rng), gd(rng), kd(rng), kd(rng), gam(rng), gam(rng)};
    const PulseSpec pulse{bwd(rng)};
    const auto ov = overlaps(p, pulse);
    const auto want = metrics(ov);
    const auto rho = apply_noisy_cswap(typical_input(), NoisyGateModel::from_overlaps(ov));
    rho.validate();
    EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_NEAR(loss_probability(rho), want.p, 1e-12);
    EXPECT_NEAR(fidelity(rho), want.F, 1e-12);
  }
}

TEST(NoisyCswap, TraceAndPositivityForRandomInputs) {
  std::mt19937_64 rng(9);
  NoisyGateModel model;
  model.h = {0.9, 0.8, cplx{-0.95, 0.1}, cplx{0.7, -0.2}};
  model.v = {0.6, 0.99, cplx{-0.5, 0.0}, cplx{0.0, 0.99}};
  for (int draw = 0; draw < 50; ++draw) {
    const auto rho = apply_noisy_cswap(random_state(3, rng), model);
    EXPECT_NO_THROW(rho.validate());
    double sectors = 0.0;
    for (auto a : {M::Ideal, M::Distorted, M::Lost}) {
      for (auto b : {M::Ideal, M::Distorted, M::Lost}) sectors += rho.sector_weight(a, b);
    }
    EXPECT_NEAR(sectors, 1.0, 1e-12);
  }
}

TEST(NoisyCswap, LossSectorsFollowSurvivalProbabilities) {
  NoisyGateModel model = NoisyGateModel::ideal();
  model.h.survive_reflect = 0.64;
  model.v.survive_reflect = 0.81;
  // Atom |0>: both photons reflect.
  const auto rho = apply_noisy_cswap(PureState::from_string("0hv"), model);
  EXPECT_NEAR(rho.sector_weight(M::Lost, M::Lost), 0.36 * 0.19, 1e-14);
  EXPECT_NEAR(rho.sector_weight(M::Lost, M::Ideal), 0.36 * 0.81, 1e-14);
  EXPECT_NEAR(loss_probability(rho), 1.0 - 0.64 * 0.81, 1e-14);
}

TEST(NoisyCswap, DecoupledBranchExchangesPorts) {
  const auto rho = apply_noisy_cswap(PureState::from_string("1hv"), NoisyGateModel::ideal());
  const int idx = OutputDensity::index(1, 1, M::Ideal, 0, M::Ideal);
  EXPECT_NEAR(rho.matrix()(idx, idx).real(), 1.0, 1e-14);
}

TEST(NoisyCswap, FidelityGrowsWithOverlapModulus) {
  double last = -1.0;
  for (int i = 0; i <= 10; ++i) {
    const double a = 0.5 + 0.05 * i;
    NoisyGateModel model = NoisyGateModel::ideal();
    model.h.xi_reflect = model.v.xi_reflect = cplx{-a, 0.0};
    model.h.xi_transmit = model.v.xi_transmit = cplx{a, 0.0};
    const double f = fidelity(apply_noisy_cswap(typical_input(), model));
    EXPECT_GT(f, last);
    last = f;
  }
}

TEST(NoisyCswap, BuildModelFromCavity) {
  const auto params = CavityParams::symmetric(32.0, 4.2, 2.6);
  const auto model = build_model(params, PulseSpec{0.42});
  const auto rho = apply_noisy_cswap(typical_input(), model);
  EXPECT_NEAR(loss_probability(rho), 0.013003423, 1e-8);
  EXPECT_NEAR(fidelity(rho), 0.99751933, 1e-7);
}

TEST(NoisyCswap, RejectsInvalidInputs) {
  NoisyGateModel model = NoisyGateModel::ideal();
  model.h.survive_reflect = 1.5;
  EXPECT_THROW(model.validate(), DomainError);
  model = NoisyGateModel::ideal();
  model.v.xi_transmit = cplx{1.1, 0.0};
  EXPECT_THROW(model.validate(), DomainError);
  EXPECT_THROW(apply_noisy_cswap(PureState(2), NoisyGateModel::ideal()), DomainError);
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Zero(OutputDensity::kDim, OutputDensity::kDim);
  bad(0, 0) = 2.0;
  EXPECT_THROW(OutputDensity(bad).validate(), DomainError);
  EXPECT_THROW(OutputDensity(Eigen::MatrixXcd::Identity(3, 3)), DomainError);
}

}  // namespace
}  // namespace cswap
