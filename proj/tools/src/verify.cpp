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

#include "cswap_cli/verify.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cswap/channel.hpp"
#include "cswap/circuit.hpp"
#include "cswap/errors.hpp"
#include "cswap/pulse.hpp"
#include "cswap/statevector.hpp"
#include "cswap_cli/presets.hpp"

namespace cswap::cli {

namespace {

struct Check {
  const char* name;
  std::function<std::string(std::mt19937_64&)> body;  // empty string = pass
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::vector<int> basis_bits(std::size_t index, int n) {
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) bits[static_cast<std::size_t>(w)] = static_cast<int>((index >> (n - 1 - w)) & 1u);
  return bits;
}

PureState basis_state(std::size_t index, int n) {
  std::vector<cplx> amps(std::size_t{1} << n);
  amps[index] = 1.0;
  return PureState::from_amplitudes(std::move(amps));
}

// ---- circuits ---------------------------------------------------------------

std::string check_gate_norm(std::mt19937_64& rng) {
  const std::vector<Gate> gates{
      Gate::single(GateKind::H, 0), Gate::single(GateKind::X, 1),  Gate::single(GateKind::Z, 2),
      Gate::single(GateKind::S, 3), Gate::single(GateKind::Sdag, 0), Gate::phase(2, 0.7),
      Gate::cswap(0, 1, 3),         Gate::cswap(3, 2, 0)};
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    PureState s = random_state(4, rng);
    for (const auto& g : gates) {
      s = apply(s, g);
      worst = std::max(worst, std::abs(s.norm() - 1.0));
    }
  }
  return worst <= 1e-12 ? "" : "norm drift " + fmt(worst);
}

std::string check_cswap_involution(std::mt19937_64&) {
  for (std::size_t i = 0; i < 8; ++i) {
    const PureState s = basis_state(i, 3);
    const PureState twice = apply(apply(s, Gate::cswap(0, 1, 2)), Gate::cswap(0, 1, 2));
    if (std::abs(std::abs(twice.inner(s)) - 1.0) > 1e-15) return "basis state " + std::to_string(i);
  }
  return "";
}

std::string check_cswap_multi_permutation(std::mt19937_64&) {
  for (int n = 1; n <= 4; ++n) {
    const int wires = 2 * n + 1;
    std::vector<int> a(static_cast<std::size_t>(n));
    std::vector<int> b(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      a[static_cast<std::size_t>(i)] = 1 + i;
      b[static_cast<std::size_t>(i)] = 1 + n + i;
    }
    for (std::size_t idx = 0; idx < (std::size_t{1} << wires); ++idx) {
      auto bits = basis_bits(idx, wires);
      if (bits[0] == 1) {
        for (int i = 0; i < n; ++i) std::swap(bits[static_cast<std::size_t>(1 + i)], bits[static_cast<std::size_t>(1 + n + i)]);
      }
      std::size_t expect = 0;
      for (int bit : bits) expect = (expect << 1) | static_cast<std::size_t>(bit);
      const PureState out = cswap_multi(basis_state(idx, wires), 0, a, b);
      if (std::abs(out.amplitude(expect) - cplx{1.0, 0.0}) > 0.0) {
        return "n=" + std::to_string(n) + " basis " + std::to_string(idx);
      }
    }
  }
  return "";
}

std::string check_swap_test(std::mt19937_64& rng) {
  double worst = 0.0;
  std::uniform_int_distribution<int> size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    const PureState psi = random_state(n, rng);
    const PureState phi = random_state(n, rng);
    const double expect = 0.5 * (1.0 - std::norm(psi.inner(phi)));
    worst = std::max(worst, std::abs(swap_test(psi, phi) - expect));
  }
  return worst <= 1e-12 ? "" : "max deviation " + fmt(worst);
}

std::string check_swap_test_phase(std::mt19937_64& rng) {
  const PureState psi = random_state(3, rng);
  const PureState phi = random_state(3, rng);
  auto rotate = [](const PureState& s, double angle) {
    std::vector<cplx> amps(s.amplitudes().begin(), s.amplitudes().end());
    for (auto& a : amps) a *= std::polar(1.0, angle);
    return PureState::from_amplitudes(std::move(amps));
  };
  const double base = swap_test(psi, phi);
  const double moved = swap_test(rotate(psi, 0.9), rotate(phi, -2.1));
  return std::abs(base - moved) <= 1e-12 ? "" : "deviation " + fmt(std::abs(base - moved));
}

std::string check_cpf(std::mt19937_64& rng) {
  const auto maps = cpf_feedforward_branch_maps();
  for (int b = 0; b < 2; ++b) {
    if (!equivalent_up_to_phase(maps[static_cast<std::size_t>(b)], cpf_target(), 1e-12)) {
      return "branch " + std::to_string(b) + " is not the controlled phase flip";
    }
  }
  for (int trial = 0; trial < 100; ++trial) {
    for (const auto& br : cpf_feedforward(random_state(2, rng))) {
      if (std::abs(br.probability - 0.5) > 1e-12) return "branch probability " + fmt(br.probability);
    }
  }
  return "";
}

std::string check_cpf_twice(std::mt19937_64&) {
  const auto maps = cpf_feedforward_branch_maps();
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  for (const auto& m1 : maps) {
    for (const auto& m2 : maps) {
      if (!equivalent_up_to_phase(m2 * m1, id, 1e-12)) return "composition is not the identity";
    }
  }
  return "";
}

std::string check_equivalence_relation(std::mt19937_64&) {
  const cplx i{0.0, 1.0};
  Eigen::Matrix2cd a;
  a << 1.0, i, -i, 0.0;
  const Eigen::Matrix2cd b = i * a;
  const Eigen::Matrix2cd c = -1.0 * a;
  if (!equivalent_up_to_phase(a, a, 0.0)) return "not reflexive";
  if (!equivalent_up_to_phase(a, b, 0.0) || !equivalent_up_to_phase(b, a, 0.0)) return "not symmetric";
  if (!equivalent_up_to_phase(b, c, 0.0) || !equivalent_up_to_phase(a, c, 0.0)) return "not transitive";
  Eigen::Matrix2cd d = a;
  d(1, 0) = i;
  if (equivalent_up_to_phase(a, d, 1e-9)) return "distinct matrices reported equivalent";
  return "";
}

std::string check_branch_sum(std::mt19937_64& rng) {
  Circuit c;
  c.steps = {Gate::single(GateKind::H, 0), Gate::cswap(0, 1, 2), Measurement{0},
             Gate::single(GateKind::H, 1), Measurement{1},
             ClassicallyControlled{1, 1, {Gate::single(GateKind::X, 2)}}, Measurement{2}};
  const auto branches = run(c, random_state(3, rng));
  double total = 0.0;
  for (const auto& br : branches) total += br.probability;
  return std::abs(total - 1.0) <= 1e-12 ? "" : "branch probabilities sum to " + fmt(total);
}

// ---- physics ----------------------------------------------------------------

CavityParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> g(0.0, 12.0);
  std::uniform_real_distribution<double> k(0.2, 3.0);
  std::uniform_real_distribution<double> gm(0.0, 2.0);
  CavityParams p{g(rng), g(rng), 1.0, k(rng), gm(rng), gm(rng)};
  if (rng() % 4 == 0) p.gamma_h = 0.0;
  return p;
}

std::string check_flux(std::mt19937_64& rng, const ResponseFn& response) {
  double worst = 0.0;
  for (int set = 0; set < 20; ++set) {
    const CavityParams p = random_params(rng);
    for (int i = 0; i < 250; ++i) {
      const double omega = -5.0 + 10.0 * i / 249.0;
      for (auto pol : {Polarization::H, Polarization::V}) {
        for (auto br : {AtomBranch::Coupled, AtomBranch::Decoupled}) {
          worst = std::max(worst, std::abs(response(p, pol, br, omega).unitarity_residual()));
        }
      }
    }
  }
  return worst <= 1e-12 ? "" : "max | |R|^2+|T|^2+|m|^2-1 | = " + fmt(worst);
}

std::string check_decoupled(std::mt19937_64& rng, const ResponseFn& response) {
  for (int set = 0; set < 10; ++set) {
    const CavityParams p = random_params(rng);
    for (int i = 0; i < 41; ++i) {
      const double omega = -4.0 + 0.2 * i;
      const cplx iw{0.0, omega};
      const auto s = response(p, Polarization::V, AtomBranch::Decoupled, omega);
      const double dev = std::max({std::abs(s.r - iw / (p.kappa_v - iw)),
                                   std::abs(s.t - p.kappa_v / (p.kappa_v - iw)), std::abs(s.m)});
      if (dev > 1e-14) return "deviation " + fmt(dev) + " at omega " + fmt(omega);
    }
  }
  return "";
}

// R and T are real rational functions of i*omega; m carries an extra factor
// of i, so m(-omega) = -conj(m(omega)).
std::string check_conjugate(std::mt19937_64& rng, const ResponseFn& response) {
  for (int set = 0; set < 10; ++set) {
    const CavityParams p = random_params(rng);
    for (double omega : {0.01, 0.3, 1.7, 4.0}) {
      for (auto br : {AtomBranch::Coupled, AtomBranch::Decoupled}) {
        const auto plus = response(p, Polarization::H, br, omega);
        const auto minus = response(p, Polarization::H, br, -omega);
        const double dev = std::max({std::abs(minus.r - std::conj(plus.r)),
                                     std::abs(minus.t - std::conj(plus.t)),
                                     std::abs(minus.m + std::conj(plus.m))});
        if (dev > 1e-13) return "deviation " + fmt(dev);
      }
    }
  }
  return "";
}

std::string check_narrowband(std::mt19937_64&, const ResponseFn& response) {
  const CavityParams p = CavityParams::symmetric(3.0, 1.0, 0.0);
  const double r_dev = std::abs(response(p, Polarization::H, AtomBranch::Coupled, 1e-6).r + 1.0);
  const double t_dev = std::abs(response(p, Polarization::H, AtomBranch::Decoupled, 1e-6).t - 1.0);
  if (r_dev > 1e-6 || t_dev > 1e-6) return "limits off by " + fmt(std::max(r_dev, t_dev));
  return "";
}

std::string check_quadrature_convergence(std::mt19937_64&) {
  double worst = 0.0;
  for (const auto& preset : builtin_presets()) {
    const auto op = resolve(preset.rates, preset.bandwidth_rule);
    const auto a = metrics(overlaps(op.params, op.pulse, {QuadratureMethod::GaussHermite, 64}));
    const auto b = metrics(overlaps(op.params, op.pulse, {QuadratureMethod::GaussHermite, 128}));
    worst = std::max({worst, std::abs(a.p - b.p), std::abs(a.F - b.F)});
  }
  return worst < 1e-10 ? "" : "doubling nodes moves (p, F) by " + fmt(worst);
}

std::string check_simpson_cross(std::mt19937_64&) {
  double worst = 0.0;
  for (const auto& preset : builtin_presets()) {
    const auto op = resolve(preset.rates, preset.bandwidth_rule);
    const auto a = metrics(overlaps(op.params, op.pulse));
    const auto b = metrics(overlaps(op.params, op.pulse, {QuadratureMethod::AdaptiveSimpson, 64, 1e-11}));
    worst = std::max({worst, std::abs(a.p - b.p), std::abs(a.F - b.F)});
  }
  return worst < 1e-9 ? "" : "Gauss-Hermite and Simpson differ by " + fmt(worst);
}

std::string check_hv_symmetry(std::mt19937_64&) {
  const auto ov = overlaps(CavityParams::symmetric(4.0, 1.0, 0.7), PulseSpec{0.15});
  const double dev = std::max({std::abs(ov.t_h1 - ov.t_v1), std::abs(ov.r_h0 - ov.r_v0),
                               std::abs(ov.xi_h0 - ov.xi_v0), std::abs(ov.xi_h1 - ov.xi_v1)});
  return dev == 0.0 ? "" : "h/v entries differ by " + fmt(dev);
}

std::string check_channel(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> g(0.5, 12.0);
  std::uniform_real_distribution<double> gm(0.0, 2.0);
  std::uniform_real_distribution<double> dw(0.005, 0.3);
  double worst = 0.0;
  for (int draw = 0; draw < 10; ++draw) {
    const auto ov = overlaps(CavityParams::symmetric(g(rng), 1.0, gm(rng)), PulseSpec{dw(rng)});
    const auto closed = metrics(ov);
    const auto rho = apply_noisy_cswap(typical_input(), NoisyGateModel::from_overlaps(ov));
    worst = std::max({worst, std::abs(rho.matrix().trace().real() - 1.0),
                      std::abs(loss_probability(rho) - closed.p),
                      std::abs(fidelity(rho) - closed.F)});
  }
  return worst <= 1e-9 ? "" : "channel and closed form differ by " + fmt(worst);
}

}  // namespace

VerifySuite parse_suite(std::string_view name) {
  if (name == "circuits") return VerifySuite::Circuits;
  if (name == "physics") return VerifySuite::Physics;
  if (name == "all") return VerifySuite::All;
  throw DomainError("unknown verify suite '" + std::string(name) + "'");
}

std::vector<InvariantResult> run_verify(VerifySuite suite, const VerifyOptions& options) {
  std::vector<std::pair<std::string, Check>> checks;
  if (suite != VerifySuite::Physics) {
    for (Check c : {Check{"gate-norm-preservation", check_gate_norm},
                    Check{"cswap-involution", check_cswap_involution},
                    Check{"cswap-multi-permutation", check_cswap_multi_permutation},
                    Check{"swap-test-overlap", check_swap_test},
                    Check{"swap-test-phase-invariance", check_swap_test_phase},
                    Check{"cpf-feedforward-branches", check_cpf},
                    Check{"cpf-feedforward-composition", check_cpf_twice},
                    Check{"phase-equivalence-relation", check_equivalence_relation},
                    Check{"branch-probability-sum", check_branch_sum}}) {
      checks.emplace_back("circuits", c);
    }
  }
  if (suite != VerifySuite::Circuits) {
    const ResponseFn& resp = options.response;
    auto with = [&](auto fn) {
      return [fn, resp](std::mt19937_64& rng) { return fn(rng, resp); };
    };
    for (Check c : {Check{"unitarity-flux-conservation", with(check_flux)},
                    Check{"decoupled-closed-form", with(check_decoupled)},
                    Check{"conjugate-symmetry", with(check_conjugate)},
                    Check{"narrowband-limits", with(check_narrowband)},
                    Check{"quadrature-convergence", check_quadrature_convergence},
                    Check{"quadrature-cross-check", check_simpson_cross},
                    Check{"hv-symmetry", check_hv_symmetry},
                    Check{"channel-closed-form-identity", check_channel}}) {
      checks.emplace_back("physics", c);
    }
  }

  std::vector<InvariantResult> results;
  for (auto& [suite_name, check] : checks) {
    std::mt19937_64 rng(options.seed);
    InvariantResult r{suite_name, check.name, false, {}};
    try {
      r.detail = check.body(rng);
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace cswap::cli
