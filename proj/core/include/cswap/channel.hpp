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

#include <array>

#include <Eigen/Dense>

#include "cswap/pulse.hpp"
#include "cswap/statevector.hpp"

namespace cswap {

// Per-polarization survival probabilities and mode overlaps of a photon that
// is reflected (atom coupled) or transmitted (atom decoupled).
struct NoisyGateModel {
  struct Channel {
    double survive_reflect = 1.0;
    double survive_transmit = 1.0;
    cplx xi_reflect{-1.0, 0.0};
    cplx xi_transmit{1.0, 0.0};
  };
  Channel h;
  Channel v;

  const Channel& operator[](Polarization pol) const { return pol == Polarization::H ? h : v; }

  static NoisyGateModel ideal();
  static NoisyGateModel from_overlaps(const OverlapSet& ov);

  void validate() const;
};

NoisyGateModel build_model(const CavityParams& params, const PulseSpec& pulse,
                           const QuadratureConfig& quad = {});

// Temporal-mode register carried with each output port's polarization qubit.
enum class PhotonMode { Ideal = 0, Distorted = 1, Lost = 2 };

// Density operator on atom (x) port l (x) port r, each port a polarization
// qubit times a PhotonMode. Basis index:
//   atom * 36 + (pol_l * 3 + mode_l) * 6 + (pol_r * 3 + mode_r)
// A lost photon is recorded with pol = h.
class OutputDensity {
 public:
  static constexpr int kPortDim = 6;
  static constexpr int kDim = 2 * kPortDim * kPortDim;

  explicit OutputDensity(Eigen::MatrixXcd rho);

  static int index(int atom, int pol_l, PhotonMode mode_l, int pol_r, PhotonMode mode_r);

  const Eigen::MatrixXcd& matrix() const noexcept { return rho_; }

  // Hermitian, unit trace, positive semidefinite, all within 1e-10.
  void validate() const;

  // Total weight of the (mode_l, mode_r) sector.
  double sector_weight(PhotonMode mode_l, PhotonMode mode_r) const;

 private:
  Eigen::MatrixXcd rho_;
};

// Scatters two single-photon pulses off the cavity. `input` holds (atom,
// photon at port l, photon at port r). Atom |0> reflects both photons, atom
// |1> exchanges them; a photon survives with the model's probability and
// keeps amplitude xi in the ideal mode, the rest going to the distorted
// mode. Each loss leaves a distinct environment record, so it erases the
// coherence of that branch.
OutputDensity apply_noisy_cswap(const PureState& input, const NoisyGateModel& model);

// The typical input (|0> + |1>)/sqrt2 (x) |h>_l |v>_r.
PureState typical_input();

// 1 - Pr[both photons present].
double loss_probability(const OutputDensity& rho);

// <Psi_out| rho' |Psi_out> with Psi_out = (|0,hv> + |1,vh>)/sqrt2 and rho'
// the both-present ideal-mode block, each atomic branch rescaled to weight
// 1/2 by its own both-present probability.
double fidelity(const OutputDensity& rho);

}  // namespace cswap
