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
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cswap/circuit.hpp"

namespace cswap {

// What a synthesized (atom, photon1, photon2) circuit must implement.
struct SynthesisTarget {
  enum class Kind {
    // Full 8x8 unitary on (atom, photon1, photon2), up to global phase.
    Unitary,
    // 4x4 photon map with the atom prepared in |+>. Without feed-forward the
    // atom must be returned to |+>; with feed-forward each measurement branch
    // must implement the map up to its own global phase.
    PhotonMap,
  };
  Kind kind = Kind::Unitary;
  Eigen::MatrixXcd matrix;
  std::string name;

  // Controlled-(Z x Z) with the atom as control.
  static SynthesisTarget czz();
  // exp(i pi |hv><hv|) on the photons.
  static SynthesisTarget cpf();
};

struct SynthesisOptions {
  int num_cswaps = 2;
  std::vector<GateKind> atom_gates{GateKind::I};
  std::vector<GateKind> photon_gates{GateKind::I, GateKind::Z};
  // Terminal atom measurement; on outcome 1 a diagonal correction from
  // photon_gates (plus I) is applied to each photon.
  bool allow_feedforward = false;
  double tolerance = 1e-9;
  std::uint64_t max_candidates = 100'000'000;
  std::optional<std::chrono::milliseconds> time_budget;
};

// One point of the search space: layer j is applied to (atom, photon1,
// photon2) before the j-th CSWAP(atom; photon1, photon2); the last layer
// follows the final CSWAP.
struct SynthesisCandidate {
  std::vector<std::array<GateKind, 3>> layers;
  std::optional<std::array<GateKind, 2>> correction;

  Circuit to_circuit() const;
  // e.g. "L0[I,Z,I] CSWAP L1[I,Z,I] CSWAP L2[I,I,I]" followed by
  // " M(a) if1[Z,Z]" for feed-forward candidates.
  std::string to_string() const;

  bool operator==(const SynthesisCandidate&) const = default;
};

struct SynthesisResult {
  std::vector<SynthesisCandidate> found;
  std::uint64_t search_space = 0;
  std::uint64_t evaluated = 0;
  bool truncated = false;
};

std::uint64_t search_space_size(const SynthesisOptions& options);

// Exhaustive search in a fixed lexicographic order (layer 0 first, atom gate
// outermost, then corrections). Throws ResourceError when the search space
// exceeds options.max_candidates; stops early with `truncated` set when the
// time budget runs out.
SynthesisResult synthesize(const SynthesisTarget& target, const SynthesisOptions& options);

}  // namespace cswap
