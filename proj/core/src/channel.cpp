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

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

constexpr double kDensityTolerance = 1e-10;
constexpr double kSlack = 1e-12;

void check_channel(const NoisyGateModel::Channel& c, const char* pol) {
  auto prob_ok = [](double p) { return p >= -kSlack && p <= 1.0 + kSlack; };
  if (!prob_ok(c.survive_reflect) || !prob_ok(c.survive_transmit)) {
    throw DomainError(std::string("survival probability outside [0, 1] for ") + pol);
  }
  if (!(std::abs(c.xi_reflect) <= 1.0 + kSlack) || !(std::abs(c.xi_transmit) <= 1.0 + kSlack)) {
    throw DomainError(std::string("mode overlap with modulus above 1 for ") + pol);
  }
}

// Amplitudes of one scattered photon: ideal, distorted, lost.
std::array<cplx, 3> scatter(double survive, cplx xi) {
  survive = std::clamp(survive, 0.0, 1.0);
  const double keep = std::sqrt(survive);
  const double distorted = std::sqrt(std::max(0.0, 1.0 - std::norm(xi)));
  return {keep * xi, cplx{keep * distorted, 0.0}, cplx{std::sqrt(1.0 - survive), 0.0}};
}

}  // namespace

NoisyGateModel NoisyGateModel::ideal() { return NoisyGateModel{}; }

NoisyGateModel NoisyGateModel::from_overlaps(const OverlapSet& ov) {
  ov.validate();
  NoisyGateModel m;
  m.h = {ov.r_h0, ov.t_h1, ov.xi_h0, ov.xi_h1};
  m.v = {ov.r_v0, ov.t_v1, ov.xi_v0, ov.xi_v1};
  return m;
}

void NoisyGateModel::validate() const {
  check_channel(h, "h");
  check_channel(v, "v");
}

NoisyGateModel build_model(const CavityParams& params, const PulseSpec& pulse,
                           const QuadratureConfig& quad) {
  return NoisyGateModel::from_overlaps(overlaps(params, pulse, quad));
}

OutputDensity::OutputDensity(Eigen::MatrixXcd rho) : rho_(std::move(rho)) {
  if (rho_.rows() != kDim || rho_.cols() != kDim) {
    throw DomainError("output density must be " + std::to_string(kDim) + "x" + std::to_string(kDim));
  }
}

int OutputDensity::index(int atom, int pol_l, PhotonMode mode_l, int pol_r, PhotonMode mode_r) {
  return atom * kPortDim * kPortDim + (pol_l * 3 + static_cast<int>(mode_l)) * kPortDim +
         (pol_r * 3 + static_cast<int>(mode_r));
}

void OutputDensity::validate() const {
  const cplx trace = rho_.trace();
  if (std::abs(trace - 1.0) > kDensityTolerance) {
    throw DomainError("output density trace is " + std::to_string(trace.real()));
  }
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
    throw DomainError("output density is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(rho_, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kDensityTolerance) {
    throw DomainError("output density has a negative eigenvalue");
  }
}

double OutputDensity::sector_weight(PhotonMode mode_l, PhotonMode mode_r) const {
  double sum = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int pl = 0; pl < 2; ++pl) {
      for (int pr = 0; pr < 2; ++pr) {
        const int i = index(a, pl, mode_l, pr, mode_r);
        sum += rho_(i, i).real();
      }
    }
  }
  return sum;
}

OutputDensity apply_noisy_cswap(const PureState& input, const NoisyGateModel& model) {
  model.validate();
  if (input.num_wires() != 3) {
    throw DomainError("noisy CSWAP input must be (atom, photon l, photon r)");
  }
  // Environment record per port: 0 = nothing, otherwise 1 + (2 * atom + pol)
  // of the photon that was lost from that input port.
  std::map<std::pair<int, int>, Eigen::VectorXcd> branches;
  const auto amps = input.amplitudes();
  const std::array<Polarization, 2> pols{Polarization::H, Polarization::V};

  for (int a = 0; a < 2; ++a) {
    for (int mu_l = 0; mu_l < 2; ++mu_l) {
      for (int mu_r = 0; mu_r < 2; ++mu_r) {
        const cplx c = amps[static_cast<std::size_t>(4 * a + 2 * mu_l + mu_r)];
        if (c == cplx{}) continue;
        const auto& ch_l = model[pols[static_cast<std::size_t>(mu_l)]];
        const auto& ch_r = model[pols[static_cast<std::size_t>(mu_r)]];
        const auto from_l = a == 0 ? scatter(ch_l.survive_reflect, ch_l.xi_reflect)
                                   : scatter(ch_l.survive_transmit, ch_l.xi_transmit);
        const auto from_r = a == 0 ? scatter(ch_r.survive_reflect, ch_r.xi_reflect)
                                   : scatter(ch_r.survive_transmit, ch_r.xi_transmit);
        for (int fl = 0; fl < 3; ++fl) {
          for (int fr = 0; fr < 3; ++fr) {
            const cplx amp = c * from_l[static_cast<std::size_t>(fl)] * from_r[static_cast<std::size_t>(fr)];
            if (amp == cplx{}) continue;
            const bool lost_l = fl == 2;
            const bool lost_r = fr == 2;
            const std::pair<int, int> env{lost_l ? 1 + 2 * a + mu_l : 0, lost_r ? 1 + 2 * a + mu_r : 0};
            // Output ports: reflection keeps them, transmission exchanges them.
            int pol_l = a == 0 ? mu_l : mu_r;
            int pol_r = a == 0 ? mu_r : mu_l;
            auto mode_l = static_cast<PhotonMode>(a == 0 ? fl : fr);
            auto mode_r = static_cast<PhotonMode>(a == 0 ? fr : fl);
            if (mode_l == PhotonMode::Lost) pol_l = 0;
            if (mode_r == PhotonMode::Lost) pol_r = 0;
            auto& vec = branches[env];
            if (vec.size() == 0) vec = Eigen::VectorXcd::Zero(OutputDensity::kDim);
            vec(OutputDensity::index(a, pol_l, mode_l, pol_r, mode_r)) += amp;
          }
        }
      }
    }
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(OutputDensity::kDim, OutputDensity::kDim);
  for (const auto& [env, vec] : branches) rho += vec * vec.adjoint();
  OutputDensity out(std::move(rho));
  out.validate();
  return out;
}

PureState typical_input() { return PureState::from_string("+hv"); }

double loss_probability(const OutputDensity& rho) {
  rho.validate();
  double present = 0.0;
  for (auto ml : {PhotonMode::Ideal, PhotonMode::Distorted}) {
    for (auto mr : {PhotonMode::Ideal, PhotonMode::Distorted}) present += rho.sector_weight(ml, mr);
  }
  return std::clamp(1.0 - present, 0.0, 1.0);
}

double fidelity(const OutputDensity& rho) {
  rho.validate();
  const auto& m = rho.matrix();
  std::array<double, 2> present{0.0, 0.0};
  for (int a = 0; a < 2; ++a) {
    for (int pl = 0; pl < 2; ++pl) {
      for (int pr = 0; pr < 2; ++pr) {
        for (auto ml : {PhotonMode::Ideal, PhotonMode::Distorted}) {
          for (auto mr : {PhotonMode::Ideal, PhotonMode::Distorted}) {
            const int i = OutputDensity::index(a, pl, ml, pr, mr);
            present[static_cast<std::size_t>(a)] += m(i, i).real();
          }
        }
      }
    }
  }
  std::array<double, 2> weight{};
  for (int a = 0; a < 2; ++a) {
    const double p = present[static_cast<std::size_t>(a)];
    weight[static_cast<std::size_t>(a)] = p > 0.0 ? std::sqrt(0.5 / p) : 0.0;
  }
  // Psi_out = (|0,hv> + |1,vh>)/sqrt2 in the ideal-mode block.
  const std::array<int, 2> idx{OutputDensity::index(0, 0, PhotonMode::Ideal, 1, PhotonMode::Ideal),
                               OutputDensity::index(1, 1, PhotonMode::Ideal, 0, PhotonMode::Ideal)};
  cplx f{};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      f += 0.5 * weight[i] * weight[j] * m(idx[i], idx[j]);
    }
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace cswap
