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
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cswap/cavity.hpp"

namespace cswap {

// Register size guard for dense state vectors.
inline constexpr int kMaxWires = 24;

// Dense pure state of a qubit register. Wire 0 is the most significant bit
// of the basis index. Photon wires use h -> 0, v -> 1.
class PureState {
 public:
  // |0...0> on `num_wires` wires.
  explicit PureState(int num_wires);

  // Throws DomainError unless the length is a power of two (at most
  // 2^kMaxWires) and the norm is 1 within 1e-12.
  static PureState from_amplitudes(std::vector<cplx> amplitudes);

  // Product state from one character per wire:
  //   0/h, 1/v, + (h+v)/sqrt2, - (h-v)/sqrt2, r (h+iv)/sqrt2, l (h-iv)/sqrt2
  static PureState from_string(std::string_view wires);

  static PureState plus();

  int num_wires() const noexcept { return num_wires_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  cplx amplitude(std::size_t index) const { return amplitudes_.at(index); }

  double norm() const;
  // <this|other>
  cplx inner(const PureState& other) const;
  // this (x) other, with this on the leading wires.
  PureState tensor(const PureState& other) const;

 private:
  PureState(int num_wires, std::vector<cplx> amplitudes);
  friend class StateBuilder;

  int num_wires_;
  std::vector<cplx> amplitudes_;
};

enum class GateKind { I, H, X, Z, S, Sdag, Phase, CSWAP };

std::string_view to_string(GateKind kind);
// Accepts I, H, X, Z, S, Sdag (case-insensitive). Throws DomainError.
GateKind parse_gate_kind(std::string_view name);

struct Gate {
  GateKind kind = GateKind::I;
  // One wire for single-qubit kinds; (control, target1, target2) for CSWAP.
  std::array<int, 3> wires{0, -1, -1};
  double theta = 0.0;  // Phase only

  static Gate single(GateKind kind, int wire);
  static Gate phase(int wire, double theta);
  static Gate cswap(int control, int target1, int target2);

  int arity() const { return kind == GateKind::CSWAP ? 3 : 1; }
  // Row-major 2x2 matrix of a single-qubit kind.
  std::array<cplx, 4> matrix() const;
  std::string to_string() const;
  // Throws DomainError on out-of-range or repeated wires.
  void validate(int num_wires) const;
};

PureState apply(const PureState& state, const Gate& gate);

// Pairwise CSWAP(control; a_i, b_i) over two equal-length registers.
PureState cswap_multi(const PureState& state, int control, std::span<const int> reg_a,
                      std::span<const int> reg_b);

// Probability of outcome "-" when a |+> control drives cswap_multi between
// psi and phi and is then measured in the {|+>, |->} basis.
double swap_test(const PureState& psi, const PureState& phi);

// Haar-distributed random state (normalized complex Gaussian vector).
PureState random_state(int num_wires, std::mt19937_64& rng);

// Number of "-" outcomes in `trials` independent Bernoulli(p_minus) draws from
// a generator seeded with `seed`.
std::uint64_t sample_minus_outcomes(double p_minus, std::uint64_t trials,
                                    std::uint64_t seed);

}  // namespace cswap
