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

#include "cswap/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

constexpr double kProbabilityFloor = 1e-300;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

void Circuit::validate(int num_wires) const {
  int bits = 0;
  for (const auto& step : steps) {
    std::visit(Overloaded{
                   [&](const Gate& g) { g.validate(num_wires); },
                   [&](const Measurement& m) {
                     if (m.wire < 0 || m.wire >= num_wires) {
                       throw DomainError("measurement of a wire outside the register");
                     }
                     ++bits;
                   },
                   [&](const ClassicallyControlled& cc) {
                     if (cc.bit < 0 || cc.bit >= bits) {
                       throw DomainError("classical condition on bit " +
                                         std::to_string(cc.bit) +
                                         " before it is measured");
                     }
                     if (cc.value != 0 && cc.value != 1) {
                       throw DomainError("classical condition value must be 0 or 1");
                     }
                     for (const auto& g : cc.gates) g.validate(num_wires);
                   },
               },
               step);
  }
}

std::string Circuit::to_string() const {
  std::string out;
  for (const auto& step : steps) {
    if (!out.empty()) out += " ";
    std::visit(Overloaded{
                   [&](const Gate& g) { out += g.to_string(); },
                   [&](const Measurement& m) { out += "M(" + std::to_string(m.wire) + ")"; },
                   [&](const ClassicallyControlled& cc) {
                     out += "if(c" + std::to_string(cc.bit) + "==" +
                            std::to_string(cc.value) + "){";
                     for (std::size_t i = 0; i < cc.gates.size(); ++i) {
                       if (i) out += " ";
                       out += cc.gates[i].to_string();
                     }
                     out += "}";
                   },
               },
               step);
  }
  return out;
}

std::vector<BranchOutcome> measure(const PureState& state, int wire) {
  const int n = state.num_wires();
  if (wire < 0 || wire >= n) throw DomainError("measurement of a wire outside the register");
  const std::size_t bit = std::size_t{1} << static_cast<unsigned>(n - 1 - wire);
  const auto amps = state.amplitudes();

  std::array<double, 2> prob{0.0, 0.0};
  for (std::size_t idx = 0; idx < amps.size(); ++idx) prob[(idx & bit) ? 1 : 0] += std::norm(amps[idx]);

  std::vector<BranchOutcome> out;
  for (int outcome = 0; outcome < 2; ++outcome) {
    const double p = prob[static_cast<std::size_t>(outcome)];
    if (p <= kProbabilityFloor) continue;
    std::vector<cplx> post(amps.size());
    const double scale = 1.0 / std::sqrt(p);
    for (std::size_t idx = 0; idx < amps.size(); ++idx) {
      if (((idx & bit) != 0) == (outcome == 1)) post[idx] = amps[idx] * scale;
    }
    out.push_back({{outcome}, p, PureState::from_amplitudes(std::move(post))});
  }
  return out;
}

std::vector<BranchOutcome> run(const Circuit& circuit, const PureState& input) {
  circuit.validate(input.num_wires());
  std::vector<BranchOutcome> branches{{{}, 1.0, input}};
  for (const auto& step : circuit.steps) {
    std::vector<BranchOutcome> next;
    for (auto& br : branches) {
      std::visit(Overloaded{
                     [&](const Gate& g) {
                       br.post_state = apply(br.post_state, g);
                       next.push_back(std::move(br));
                     },
                     [&](const Measurement& m) {
                       for (auto& child : measure(br.post_state, m.wire)) {
                         auto bits = br.bits;
                         bits.push_back(child.bits.front());
                         next.push_back({std::move(bits), br.probability * child.probability,
                                         std::move(child.post_state)});
                       }
                     },
                     [&](const ClassicallyControlled& cc) {
                       if (br.bits[static_cast<std::size_t>(cc.bit)] == cc.value) {
                         for (const auto& g : cc.gates) br.post_state = apply(br.post_state, g);
                       }
                       next.push_back(std::move(br));
                     },
                 },
                 step);
    }
    branches = std::move(next);
  }
  return branches;
}

PureState project_out(const PureState& state, int wire, int value) {
  const int n = state.num_wires();
  if (wire < 0 || wire >= n || n < 1) throw DomainError("projected wire outside the register");
  const auto amps = state.amplitudes();
  std::vector<cplx> out;
  out.reserve(amps.size() / 2);
  const unsigned shift = static_cast<unsigned>(n - 1 - wire);
  double sum = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if (static_cast<int>((idx >> shift) & 1u) != value) continue;
    out.push_back(amps[idx]);
    sum += std::norm(amps[idx]);
  }
  if (sum <= kProbabilityFloor) throw DomainError("projection onto a zero-weight outcome");
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& a : out) a *= scale;
  return PureState::from_amplitudes(std::move(out));
}

Eigen::MatrixXcd circuit_matrix(const std::vector<Gate>& gates, int num_wires) {
  if (num_wires > 12) throw ResourceError("circuit_matrix limited to 12 wires", num_wires);
  const auto dim = std::size_t{1} << static_cast<unsigned>(num_wires);
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    std::vector<cplx> basis(dim);
    basis[col] = 1.0;
    PureState s = PureState::from_amplitudes(std::move(basis));
    for (const auto& g : gates) s = apply(s, g);
    for (std::size_t row = 0; row < dim; ++row) {
      m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amplitude(row);
    }
  }
  return m;
}

bool equivalent_up_to_phase(const Eigen::MatrixXcd& u, const Eigen::MatrixXcd& v, double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw DomainError("equivalent_up_to_phase: shape mismatch");
  }
  if (!(tol >= 0.0)) throw DomainError("equivalent_up_to_phase: negative tolerance");
  Eigen::Index best_r = 0;
  Eigen::Index best_c = 0;
  double best = -1.0;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      const double w = std::abs(u(r, c)) * std::abs(v(r, c));
      if (w > best) {
        best = w;
        best_r = r;
        best_c = c;
      }
    }
  }
  cplx phase{1.0, 0.0};
  if (best > 0.0) {
    const cplx a = u(best_r, best_c);
    const cplx b = v(best_r, best_c);
    phase = (a / std::abs(a)) * std::conj(b / std::abs(b));
  }
  double worst = 0.0;
  double scale = 0.0;
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
      worst = std::max(worst, std::abs(u(r, c) - phase * v(r, c)));
      scale = std::max({scale, std::abs(u(r, c)), std::abs(v(r, c))});
    }
  }
  // The phase estimate itself carries rounding; allow a few ulps so exact
  // inputs still compare equal at tol = 0.
  return worst <= tol + 8.0 * std::numeric_limits<double>::epsilon() * scale;
}

Eigen::Matrix4cd cpf_target() {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
  m(1, 1) = -1.0;
  return m;
}

Circuit cpf_feedforward_circuit() {
  Circuit c;
  c.steps = {
      Gate::single(GateKind::Z, kPhoton1Wire),
      Gate::cswap(kAtomWire, kPhoton1Wire, kPhoton2Wire),
      Gate::single(GateKind::Z, kPhoton1Wire),
      Gate::cswap(kAtomWire, kPhoton1Wire, kPhoton2Wire),
      Gate::single(GateKind::Sdag, kPhoton1Wire),
      Gate::single(GateKind::S, kPhoton2Wire),
      Gate::single(GateKind::Sdag, kAtomWire),
      Gate::single(GateKind::H, kAtomWire),
      Measurement{kAtomWire},
      ClassicallyControlled{0, 1,
                            {Gate::single(GateKind::Z, kPhoton1Wire),
                             Gate::single(GateKind::Z, kPhoton2Wire)}},
  };
  return c;
}

std::vector<BranchOutcome> cpf_feedforward(const PureState& photons) {
  if (photons.num_wires() != 2) throw DomainError("cpf_feedforward expects two photon wires");
  return run(cpf_feedforward_circuit(), PureState::plus().tensor(photons));
}

std::vector<BranchOutcome> cpf_feedforward_register(const PureState& atom_and_photons) {
  if (atom_and_photons.num_wires() != 3) {
    throw DomainError("cpf_feedforward expects (atom, photon1, photon2)");
  }
  // Rows are the atom's 0 and 1 halves; a product state has rank-1 rows.
  const auto amps = atom_and_photons.amplitudes();
  Eigen::Matrix<cplx, 2, 4> rows;
  for (int a = 0; a < 2; ++a) {
    for (int k = 0; k < 4; ++k) rows(a, k) = amps[static_cast<std::size_t>(4 * a + k)];
  }
  const Eigen::Matrix2cd gram = rows * rows.adjoint();
  const double purity = std::norm(gram(0, 0)) + std::norm(gram(1, 1)) + 2.0 * std::norm(gram(0, 1));
  if (std::abs(purity - 1.0) > 1e-10) {
    throw DomainError("atom is entangled with the photons at entry (purity " +
                      std::to_string(purity) + ")");
  }
  const int dominant = rows.row(0).squaredNorm() >= rows.row(1).squaredNorm() ? 0 : 1;
  const Eigen::Matrix<cplx, 1, 4> photon = rows.row(dominant).normalized();
  return cpf_feedforward(PureState::from_amplitudes({photon(0), photon(1), photon(2), photon(3)}));
}

std::array<Eigen::Matrix4cd, 2> cpf_feedforward_branch_maps() {
  std::array<Eigen::Matrix4cd, 2> maps{Eigen::Matrix4cd::Zero(), Eigen::Matrix4cd::Zero()};
  for (int col = 0; col < 4; ++col) {
    std::vector<cplx> basis(4);
    basis[static_cast<std::size_t>(col)] = 1.0;
    for (const auto& br : cpf_feedforward(PureState::from_amplitudes(std::move(basis)))) {
      const int outcome = br.bits.front();
      // Post-state is normalized, so it is the branch map applied to the
      // input with the sqrt(probability) factor divided out.
      const auto amps = br.post_state.amplitudes();
      for (int row = 0; row < 4; ++row) {
        maps[static_cast<std::size_t>(outcome)](row, col) =
            amps[static_cast<std::size_t>(4 * outcome + row)];
      }
    }
  }
  return maps;
}

}  // namespace cswap
