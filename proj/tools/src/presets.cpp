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

#include "cswap_cli/presets.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cswap/errors.hpp"

namespace cswap::cli {

namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

void read_rate(const nlohmann::json& node, const char* key, double& h, double& v) {
  if (!node.contains(key)) throw DomainError(std::string("preset is missing '") + key + "'");
  const auto& value = node.at(key);
  if (value.is_number()) {
    h = v = value.get<double>();
  } else if (value.is_object()) {
    h = value.at("h").get<double>();
    v = value.at("v").get<double>();
  } else {
    throw DomainError(std::string("preset field '") + key + "' must be a number or {h, v}");
  }
}

}  // namespace

BandwidthRule BandwidthRule::parse(std::string_view text) {
  auto ends_with = [&](std::string_view suffix) {
    return text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
  };
  BandwidthRule rule;
  if (ends_with("kappa")) {
    rule.kind = Kind::KappaFraction;
    rule.value = parse_number(text.substr(0, text.size() - 5));
  } else if (ends_with("g2k")) {
    rule.kind = Kind::G2KFraction;
    rule.value = parse_number(text.substr(0, text.size() - 3));
  } else {
    rule.kind = Kind::Absolute;
    rule.value = parse_number(text);
  }
  if (!(rule.value > 0.0)) throw DomainError("bandwidth must be positive");
  return rule;
}

std::string BandwidthRule::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  switch (kind) {
    case Kind::Absolute: return buf;
    case Kind::KappaFraction: return std::string(buf) + "kappa";
    case Kind::G2KFraction: return std::string(buf) + "g2k";
  }
  return buf;
}

double BandwidthRule::resolve(const CavityParams& params) const {
  switch (kind) {
    case Kind::Absolute: return value;
    case Kind::KappaFraction: return value * params.kappa_h;
    case Kind::G2KFraction: return value * params.g_h * params.g_h / params.kappa_h;
  }
  return value;
}

OperatingPoint resolve(const CavityParams& rates, const BandwidthRule& rule) {
  const CavityParams unit = rates.normalized();
  const double bandwidth = rule.resolve(rates) / rates.kappa_h;
  PulseSpec pulse{bandwidth};
  pulse.validate();
  return {unit, pulse};
}

const std::vector<Preset>& builtin_presets() {
  static const std::vector<Preset> presets{
      {"atomic", CavityParams::symmetric(32.0, 4.2, 2.6), "2pi*MHz",
       {BandwidthRule::Kind::KappaFraction, 0.1}},
      {"solid-state", CavityParams::symmetric(0.66, 6.0, 0.001), "2pi*THz",
       {BandwidthRule::Kind::G2KFraction, 0.1}},
  };
  return presets;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  throw DomainError("unknown preset '" + std::string(name) + "' (known: atomic, solid-state)");
}

Preset load_preset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open preset file " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("malformed preset file " + path.string() + ": " + e.what());
  }
  Preset p;
  try {
    p.name = doc.value("name", path.stem().string());
    read_rate(doc, "g", p.rates.g_h, p.rates.g_v);
    read_rate(doc, "kappa", p.rates.kappa_h, p.rates.kappa_v);
    read_rate(doc, "gamma", p.rates.gamma_h, p.rates.gamma_v);
    p.unit = doc.value("unit", "");
    p.bandwidth_rule = BandwidthRule::parse(doc.value("bandwidth_rule", "0.1kappa"));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("invalid preset file " + path.string() + ": " + e.what());
  }
  p.rates.validate();
  return p;
}

}  // namespace cswap::cli
