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

#include "cswap/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cswap/errors.hpp"

namespace cswap {

namespace {

using Mat8 = Eigen::Matrix<cplx, 8, 8>;
using Mat2 = Eigen::Matrix2cd;
using Clock = std::chrono::steady_clock;

Mat2 single_matrix(GateKind kind) {
  const auto m = Gate::single(kind, 0).matrix();
  Mat2 out;
  out << m[0], m[1], m[2], m[3];
  return out;
}

bool is_diagonal(GateKind kind) {
  return kind == GateKind::I || kind == GateKind::Z || kind == GateKind::S ||
         kind == GateKind::Sdag;
}

void check_gate_set(const std::vector<GateKind>& set, const char* what) {
  if (set.empty()) throw DomainError(std::string(what) + " gate set is empty");
  for (auto k : set) {
    if (k == GateKind::CSWAP || k == GateKind::Phase) {
      throw DomainError(std::string(what) + " gate set may only hold I, H, X, Z, S, Sdag");
    }
  }
}

std::vector<GateKind> correction_set(const std::vector<GateKind>& photon_gates) {
  std::vector<GateKind> out{GateKind::I};
  for (auto k : photon_gates) {
    if (is_diagonal(k) && std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  }
  return out;
}

Mat8 cswap_matrix() {
  Mat8 m = Mat8::Zero();
  for (int idx = 0; idx < 8; ++idx) {
    int out = idx;
    if ((idx & 4) && (((idx >> 1) & 1) != (idx & 1))) out = idx ^ 3;
    m(out, idx) = 1.0;
  }
  return m;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

class Search {
 public:
  Search(const SynthesisTarget& target, const SynthesisOptions& options)
      : target_(target),
        options_(options),
        corrections_(correction_set(options.photon_gates)),
        cswap_(cswap_matrix()) {
    for (auto a : options.atom_gates) {
      for (auto p1 : options.photon_gates) {
        for (auto p2 : options.photon_gates) {
          layer_kinds_.push_back({a, p1, p2});
          Mat8 m;
          const Mat2 ma = single_matrix(a);
          const Mat2 m1 = single_matrix(p1);
          const Mat2 m2 = single_matrix(p2);
          for (int r = 0; r < 8; ++r) {
            for (int c = 0; c < 8; ++c) {
              m(r, c) = ma(r >> 2, c >> 2) * m1((r >> 1) & 1, (c >> 1) & 1) * m2(r & 1, c & 1);
            }
          }
          layer_mats_.push_back(m);
        }
      }
    }
    for (auto c1 : corrections_) {
      for (auto c2 : corrections_) {
        correction_mats_.push_back(kron(single_matrix(c1), single_matrix(c2)));
        correction_kinds_.push_back({c1, c2});
      }
    }
    if (target.kind == SynthesisTarget::Kind::Unitary) {
      input_ = Eigen::MatrixXcd::Identity(8, 8);
    } else {
      // |+> on the atom, identity on the photons.
      input_ = Eigen::MatrixXcd::Zero(8, 4);
      const double s = std::numbers::sqrt2 / 2.0;
      for (int k = 0; k < 4; ++k) {
        input_(k, k) = s;
        input_(4 + k, k) = s;
      }
    }
    if (options.time_budget) deadline_ = Clock::now() + *options.time_budget;
  }

  SynthesisResult run() {
    result_.search_space = search_space_size(options_);
    layers_.clear();
    descend(input_);
    return std::move(result_);
  }

 private:
  static Eigen::Matrix4cd kron(const Mat2& a, const Mat2& b) {
    Eigen::Matrix4cd out;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) out(r, c) = a(r >> 1, c >> 1) * b(r & 1, c & 1);
    }
    return out;
  }

  bool out_of_time() {
    if (!deadline_) return false;
    if ((++ticks_ & 0xfff) != 0) return false;
    if (Clock::now() > *deadline_) result_.truncated = true;
    return result_.truncated;
  }

  // Rescales a branch operator to unit singular values if it is proportional
  // to a unitary; the equivalence check then decides.
  bool matches(const Eigen::Matrix4cd& branch, const Eigen::Matrix4cd* correction) const {
    const double scale = std::sqrt(branch.squaredNorm() / 4.0);
    if (scale < 1e-9) return false;
    Eigen::Matrix4cd k = branch / scale;
    if (correction) k = (*correction) * k;
    return equivalent_up_to_phase(k, target_.matrix, options_.tolerance);
  }

  void evaluate(const Eigen::MatrixXcd& total) {
    if (target_.kind == SynthesisTarget::Kind::Unitary) {
      ++result_.evaluated;
      if (equivalent_up_to_phase(total, target_.matrix, options_.tolerance)) {
        result_.found.push_back({layers_, std::nullopt});
      }
      return;
    }
    if (!options_.allow_feedforward) {
      ++result_.evaluated;
      const double s = std::numbers::sqrt2 / 2.0;
      const Eigen::Matrix4cd k = s * (total.topRows(4) + total.bottomRows(4));
      if (equivalent_up_to_phase(k, target_.matrix, options_.tolerance)) {
        result_.found.push_back({layers_, std::nullopt});
      }
      return;
    }
    const Eigen::Matrix4cd k0 = total.topRows(4);
    const Eigen::Matrix4cd k1 = total.bottomRows(4);
    result_.evaluated += correction_mats_.size();
    if (!matches(k0, nullptr)) return;
    for (std::size_t i = 0; i < correction_mats_.size(); ++i) {
      if (matches(k1, &correction_mats_[i])) {
        result_.found.push_back({layers_, correction_kinds_[i]});
      }
    }
  }

  void descend(const Eigen::MatrixXcd& partial) {
    const int depth = static_cast<int>(layers_.size());
    for (std::size_t i = 0; i < layer_mats_.size(); ++i) {
      if (result_.truncated || out_of_time()) return;
      Eigen::MatrixXcd next = layer_mats_[i] * partial;
      layers_.push_back(layer_kinds_[i]);
      if (depth == options_.num_cswaps) {
        evaluate(next);
      } else {
        next = cswap_ * next;
        descend(next);
      }
      layers_.pop_back();
    }
  }

  const SynthesisTarget& target_;
  const SynthesisOptions& options_;
  std::vector<GateKind> corrections_;
  Mat8 cswap_;
  std::vector<std::array<GateKind, 3>> layer_kinds_;
  std::vector<Mat8> layer_mats_;
  std::vector<Eigen::Matrix4cd> correction_mats_;
  std::vector<std::array<GateKind, 2>> correction_kinds_;
  Eigen::MatrixXcd input_;
  std::vector<std::array<GateKind, 3>> layers_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t ticks_ = 0;
  SynthesisResult result_;
};

}  // namespace

SynthesisTarget SynthesisTarget::czz() {
  SynthesisTarget t;
  t.kind = Kind::Unitary;
  t.name = "czz";
  t.matrix = Eigen::MatrixXcd::Identity(8, 8);
  // Atom in |1>: Z x Z on the photons, i.e. -1 on |1 hv> and |1 vh>.
  t.matrix(5, 5) = -1.0;
  t.matrix(6, 6) = -1.0;
  return t;
}

SynthesisTarget SynthesisTarget::cpf() {
  SynthesisTarget t;
  t.kind = Kind::PhotonMap;
  t.name = "cpf";
  t.matrix = cpf_target();
  return t;
}

Circuit SynthesisCandidate::to_circuit() const {
  Circuit c;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    for (int w = 0; w < 3; ++w) {
      const GateKind k = layers[j][static_cast<std::size_t>(w)];
      if (k != GateKind::I) c.steps.emplace_back(Gate::single(k, w));
    }
    if (j + 1 < layers.size()) {
      c.steps.emplace_back(Gate::cswap(kAtomWire, kPhoton1Wire, kPhoton2Wire));
    }
  }
  if (correction) {
    c.steps.emplace_back(Measurement{kAtomWire});
    ClassicallyControlled fix{0, 1, {}};
    if ((*correction)[0] != GateKind::I) fix.gates.push_back(Gate::single((*correction)[0], kPhoton1Wire));
    if ((*correction)[1] != GateKind::I) fix.gates.push_back(Gate::single((*correction)[1], kPhoton2Wire));
    c.steps.emplace_back(std::move(fix));
  }
  return c;
}

std::string SynthesisCandidate::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    if (j) out += " CSWAP ";
    out += "L" + std::to_string(j) + "[";
    for (std::size_t w = 0; w < 3; ++w) {
      if (w) out += ",";
      out += cswap::to_string(layers[j][w]);
    }
    out += "]";
  }
  if (correction) {
    out += " M(a) if1[" + std::string(cswap::to_string((*correction)[0])) + "," +
           std::string(cswap::to_string((*correction)[1])) + "]";
  }
  return out;
}

std::uint64_t search_space_size(const SynthesisOptions& options) {
  const std::uint64_t per_layer = checked_mul(
      options.atom_gates.size(), checked_mul(options.photon_gates.size(), options.photon_gates.size()));
  std::uint64_t total = 1;
  for (int j = 0; j <= options.num_cswaps; ++j) total = checked_mul(total, per_layer);
  if (options.allow_feedforward) {
    const std::uint64_t c = correction_set(options.photon_gates).size();
    total = checked_mul(total, c * c);
  }
  return total;
}

SynthesisResult synthesize(const SynthesisTarget& target, const SynthesisOptions& options) {
  if (options.num_cswaps < 0 || options.num_cswaps > 4) {
    throw DomainError("number of CSWAPs must be in [0, 4]");
  }
  check_gate_set(options.atom_gates, "atom");
  check_gate_set(options.photon_gates, "photon");
  const Eigen::Index want = target.kind == SynthesisTarget::Kind::Unitary ? 8 : 4;
  if (target.matrix.rows() != want || target.matrix.cols() != want) {
    throw DomainError("synthesis target has the wrong dimension");
  }
  if (options.allow_feedforward && target.kind != SynthesisTarget::Kind::PhotonMap) {
    throw DomainError("feed-forward synthesis needs a photon-map target");
  }
  const std::uint64_t size = search_space_size(options);
  if (size > options.max_candidates) {
    throw ResourceError("synthesis search space of " + std::to_string(size) +
                            " candidates exceeds the guard of " +
                            std::to_string(options.max_candidates),
                        size);
  }
  return Search(target, options).run();
}

}  // namespace cswap
