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

#include "cswap/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

constexpr double kNormTolerance = 1e-12;

std::size_t bit_of(int num_wires, int wire) {
  return std::size_t{1} << static_cast<unsigned>(num_wires - 1 - wire);
}

void check_wire_count(int n) {
  if (n < 0 || n > kMaxWires) {
    throw ResourceError("register of " + std::to_string(n) + " wires exceeds the " +
                            std::to_string(kMaxWires) + "-wire limit",
                        static_cast<std::uint64_t>(std::max(n, 0)));
  }
}

}  // namespace

class StateBuilder {
 public:
  static PureState make(int n, std::vector<cplx> amps) {
    return PureState(n, std::move(amps));
  }
};

PureState::PureState(int num_wires) : num_wires_(num_wires) {
  check_wire_count(num_wires);
  amplitudes_.assign(std::size_t{1} << static_cast<unsigned>(num_wires), cplx{});
  amplitudes_[0] = 1.0;
}

PureState::PureState(int num_wires, std::vector<cplx> amplitudes)
    : num_wires_(num_wires), amplitudes_(std::move(amplitudes)) {}

PureState PureState::from_amplitudes(std::vector<cplx> amplitudes) {
  const std::size_t dim = amplitudes.size();
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw DomainError("state vector length must be a power of two");
  }
  const int n = std::countr_zero(dim);
  check_wire_count(n);
  PureState state(n, std::move(amplitudes));
  const double norm = state.norm();
  if (!(std::abs(norm - 1.0) <= kNormTolerance)) {
    throw DomainError("state vector is not normalized: norm = " + std::to_string(norm));
  }
  return state;
}

PureState PureState::from_string(std::string_view wires) {
  check_wire_count(static_cast<int>(wires.size()));
  const double s = std::numbers::sqrt2 / 2.0;
  std::vector<cplx> amps{1.0};
  for (char c : wires) {
    std::array<cplx, 2> q;
    switch (std::tolower(static_cast<unsigned char>(c))) {
      case '0': case 'h': q = {1.0, 0.0}; break;
      case '1': case 'v': q = {0.0, 1.0}; break;
      case '+': q = {s, s}; break;
      case '-': q = {s, -s}; break;
      case 'r': q = {s, cplx{0.0, s}}; break;
      case 'l': q = {s, cplx{0.0, -s}}; break;
      default:
        throw DomainError(std::string("unknown single-wire state '") + c + "'");
    }
    std::vector<cplx> next(amps.size() * 2);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * q[0];
      next[2 * i + 1] = amps[i] * q[1];
    }
    amps = std::move(next);
  }
  return PureState(static_cast<int>(wires.size()), std::move(amps));
}

PureState PureState::plus() { return from_string("+"); }

double PureState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

cplx PureState::inner(const PureState& other) const {
  if (other.dimension() != dimension()) {
    throw DomainError("inner product of registers with different sizes");
  }
  cplx sum{};
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    sum += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return sum;
}

PureState PureState::tensor(const PureState& other) const {
  check_wire_count(num_wires_ + other.num_wires_);
  std::vector<cplx> out;
  out.reserve(dimension() * other.dimension());
  for (const auto& a : amplitudes_) {
    for (const auto& b : other.amplitudes_) out.push_back(a * b);
  }
  return PureState(num_wires_ + other.num_wires_, std::move(out));
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::I: return "I";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::S: return "S";
    case GateKind::Sdag: return "Sdag";
    case GateKind::Phase: return "Phase";
    case GateKind::CSWAP: return "CSWAP";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "i" || lower == "id") return GateKind::I;
  if (lower == "h") return GateKind::H;
  if (lower == "x") return GateKind::X;
  if (lower == "z") return GateKind::Z;
  if (lower == "s") return GateKind::S;
  if (lower == "sdag" || lower == "sdg") return GateKind::Sdag;
  throw DomainError("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::single(GateKind kind, int wire) {
  if (kind == GateKind::CSWAP) throw DomainError("CSWAP is not a single-qubit gate");
  return Gate{kind, {wire, -1, -1}, 0.0};
}

Gate Gate::phase(int wire, double theta) { return Gate{GateKind::Phase, {wire, -1, -1}, theta}; }

Gate Gate::cswap(int control, int target1, int target2) {
  return Gate{GateKind::CSWAP, {control, target1, target2}, 0.0};
}

std::array<cplx, 4> Gate::matrix() const {
  const double s = std::numbers::sqrt2 / 2.0;
  const cplx i{0.0, 1.0};
  switch (kind) {
    case GateKind::I: return {1.0, 0.0, 0.0, 1.0};
    case GateKind::H: return {s, s, s, -s};
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::S: return {1.0, 0.0, 0.0, i};
    case GateKind::Sdag: return {1.0, 0.0, 0.0, -i};
    case GateKind::Phase: return {1.0, 0.0, 0.0, std::polar(1.0, theta)};
    case GateKind::CSWAP: break;
  }
  throw DomainError("CSWAP has no 2x2 matrix");
}

std::string Gate::to_string() const {
  std::string out(cswap::to_string(kind));
  if (kind == GateKind::Phase) out += "(" + std::to_string(theta) + ")";
  out += "(";
  for (int k = 0; k < arity(); ++k) {
    if (k == 1) out += ";";
    if (k == 2) out += ",";
    out += std::to_string(wires[static_cast<std::size_t>(k)]);
  }
  return out + ")";
}

void Gate::validate(int num_wires) const {
  for (int k = 0; k < arity(); ++k) {
    const int w = wires[static_cast<std::size_t>(k)];
    if (w < 0 || w >= num_wires) {
      throw DomainError("gate " + to_string() + " addresses a wire outside [0, " +
                        std::to_string(num_wires) + ")");
    }
    for (int j = 0; j < k; ++j) {
      if (wires[static_cast<std::size_t>(j)] == w) {
        throw DomainError("gate " + to_string() + " repeats a wire");
      }
    }
  }
}

PureState apply(const PureState& state, const Gate& gate) {
  const int n = state.num_wires();
  gate.validate(n);
  std::vector<cplx> amps(state.amplitudes().begin(), state.amplitudes().end());

  if (gate.kind == GateKind::CSWAP) {
    const std::size_t c = bit_of(n, gate.wires[0]);
    const std::size_t a = bit_of(n, gate.wires[1]);
    const std::size_t b = bit_of(n, gate.wires[2]);
    // Visit each swapped pair once, from the member with a = 1, b = 0.
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if ((idx & c) && (idx & a) && !(idx & b)) std::swap(amps[idx], amps[idx ^ a ^ b]);
    }
  } else {
    const auto m = gate.matrix();
    const std::size_t bit = bit_of(n, gate.wires[0]);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if (idx & bit) continue;
      const cplx lo = amps[idx];
      const cplx hi = amps[idx | bit];
      amps[idx] = m[0] * lo + m[1] * hi;
      amps[idx | bit] = m[2] * lo + m[3] * hi;
    }
  }
  return StateBuilder::make(n, std::move(amps));
}

PureState cswap_multi(const PureState& state, int control, std::span<const int> reg_a,
                      std::span<const int> reg_b) {
  if (reg_a.size() != reg_b.size()) {
    throw DomainError("cswap_multi registers differ in length");
  }
  std::vector<int> seen{control};
  for (int w : reg_a) seen.push_back(w);
  for (int w : reg_b) seen.push_back(w);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw DomainError("cswap_multi registers overlap each other or the control");
  }
  PureState out = state;
  for (std::size_t i = 0; i < reg_a.size(); ++i) {
    out = apply(out, Gate::cswap(control, reg_a[i], reg_b[i]));
  }
  return out;
}

double swap_test(const PureState& psi, const PureState& phi) {
  if (psi.num_wires() != phi.num_wires()) {
    throw DomainError("swap_test registers differ in size");
  }
  const int n = psi.num_wires();
  check_wire_count(2 * n + 1);
  PureState state = PureState::plus().tensor(psi).tensor(phi);
  std::vector<int> reg_a(static_cast<std::size_t>(n));
  std::vector<int> reg_b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    reg_a[static_cast<std::size_t>(i)] = 1 + i;
    reg_b[static_cast<std::size_t>(i)] = 1 + n + i;
  }
  state = cswap_multi(state, 0, reg_a, reg_b);
  // H maps |-> onto |1>, so P(-) is the weight of the control's 1 half.
  state = apply(state, Gate::single(GateKind::H, 0));
  const auto amps = state.amplitudes();
  double p_minus = 0.0;
  for (std::size_t idx = amps.size() / 2; idx < amps.size(); ++idx) p_minus += std::norm(amps[idx]);
  return p_minus;
}

PureState random_state(int num_wires, std::mt19937_64& rng) {
  check_wire_count(num_wires);
  std::normal_distribution<double> normal;
  std::vector<cplx> amps(std::size_t{1} << static_cast<unsigned>(num_wires));
  double sum = 0.0;
  for (auto& a : amps) {
    const double re = normal(rng);
    const double im = normal(rng);
    a = {re, im};
    sum += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amps) a *= scale;
  return StateBuilder::make(num_wires, std::move(amps));
}

std::uint64_t sample_minus_outcomes(double p_minus, std::uint64_t trials, std::uint64_t seed) {
  if (!(p_minus >= 0.0 && p_minus <= 1.0)) {
    throw DomainError("outcome probability must be in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  // Drawn as uniform doubles so the stream is identical across standard libraries.
  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    if (u < p_minus) ++hits;
  }
  return hits;
}

}  // namespace cswap
