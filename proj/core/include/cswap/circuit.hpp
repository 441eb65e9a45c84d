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
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "cswap/statevector.hpp"

namespace cswap {

// Projective measurement of one wire in the {|0>, |1>} basis. Each
// measurement appends one classical bit.
struct Measurement {
  int wire = 0;
};

// Gates applied only when classical bit `bit` equals `value`.
struct ClassicallyControlled {
  int bit = 0;
  int value = 1;
  std::vector<Gate> gates;
};

using Step = std::variant<Gate, Measurement, ClassicallyControlled>;

struct Circuit {
  std::vector<Step> steps;

  // Throws DomainError on invalid wires or a condition on a bit that no
  // earlier measurement produced.
  void validate(int num_wires) const;
  std::string to_string() const;
};

struct BranchOutcome {
  std::vector<int> bits;
  double probability = 0.0;
  PureState post_state{0};
};

// Exhaustive branch decomposition: every measurement outcome with nonzero
// probability is kept, with its normalized post-measurement state.
std::vector<BranchOutcome> run(const Circuit& circuit, const PureState& input);

// Both outcomes of a computational-basis measurement of `wire`
// (zero-probability outcomes omitted).
std::vector<BranchOutcome> measure(const PureState& state, int wire);

// Amplitudes of the remaining wires where `wire` equals `value`, renormalized.
PureState project_out(const PureState& state, int wire, int value);

// Matrix of a measurement-free gate list on `num_wires` wires.
Eigen::MatrixXcd circuit_matrix(const std::vector<Gate>& gates, int num_wires);

// true iff max_ij |u_ij - e^{i phi} v_ij| <= tol, with the phase taken from
// the entry pair of largest |u_ij| |v_ij|. A rounding allowance of 8 ulps
// of the largest entry is added to tol. Throws DomainError on a shape
// mismatch.
bool equivalent_up_to_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v,
                            double tol);

// Wires of the two-CSWAP feed-forward controlled-phase-flip construction.
inline constexpr int kAtomWire = 0;
inline constexpr int kPhoton1Wire = 1;
inline constexpr int kPhoton2Wire = 2;

// exp(i pi |hv><hv|) in the basis order hh, hv, vh, vv.
Eigen::Matrix4cd cpf_target();

// Z1 CSWAP Z1 CSWAP, Sdag1 S2, Sdag H on the atom, atom measurement, and a
// Z on each photon for outcome 1. The atom is prepared in |+> by the caller.
Circuit cpf_feedforward_circuit();

// Runs the construction on a two-photon input with the atom prepared in
// (|0> + |1>)/sqrt2. Post-states are on (atom, photon1, photon2).
std::vector<BranchOutcome> cpf_feedforward(const PureState& photons);

// Same, for a three-wire (atom, photon1, photon2) input. The atom is reset to
// |+>; throws DomainError if it is entangled with the photons.
std::vector<BranchOutcome> cpf_feedforward_register(const PureState& atom_and_photons);

// Photon map of each branch (outcome 0, outcome 1), as linear operators with
// the 1/sqrt2 branch amplitude removed.
std::array<Eigen::Matrix4cd, 2> cpf_feedforward_branch_maps();

}  // namespace cswap
