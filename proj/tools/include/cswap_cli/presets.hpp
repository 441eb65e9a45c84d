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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cswap/cavity.hpp"
#include "cswap/pulse.hpp"

namespace cswap::cli {

// Pulse bandwidth as given on the command line or in a preset file:
//   "0.42"       absolute, in the parameters' own unit
//   "0.1kappa"   fraction of kappa_h
//   "0.1g2k"     fraction of g_h^2 / kappa_h
struct BandwidthRule {
  enum class Kind { Absolute, KappaFraction, G2KFraction };
  Kind kind = Kind::KappaFraction;
  double value = 0.1;

  static BandwidthRule parse(std::string_view text);
  std::string to_string() const;
  // Bandwidth in the unit of `params` (not normalized).
  double resolve(const CavityParams& params) const;
};

struct Preset {
  std::string name;
  // Rates as quoted, i.e. rate / 2pi in `unit`.
  CavityParams rates;
  std::string unit;
  BandwidthRule bandwidth_rule;
};

// Parameters and pulse in units of kappa_h.
struct OperatingPoint {
  CavityParams params;
  PulseSpec pulse;
};

OperatingPoint resolve(const CavityParams& rates, const BandwidthRule& rule);

const std::vector<Preset>& builtin_presets();
// Throws DomainError for an unknown name.
const Preset& find_preset(std::string_view name);
// JSON object {name, g, kappa, gamma, unit, bandwidth_rule}; each rate is a
// number or {"h": .., "v": ..}.
Preset load_preset(const std::filesystem::path& path);

}  // namespace cswap::cli
