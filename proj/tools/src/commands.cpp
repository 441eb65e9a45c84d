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

#include "cswap_cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cswap/errors.hpp"
#include "cswap/pulse.hpp"
#include "cswap/statevector.hpp"
#include "cswap/synthesis.hpp"
#include "cswap_cli/presets.hpp"

namespace cswap::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_e12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12e", v);
  return buf;
}

std::string format_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void report_elapsed(std::ostream& err, const char* what, Clock::time_point start) {
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  err << what << " elapsed " << format_g(s) << " s\n";
}

// Shared --preset / --preset-file / --g / --kappa / --gamma options.
struct ParamOptions {
  std::string preset;
  std::string preset_file;
  std::optional<double> g;
  std::optional<double> kappa;
  std::optional<double> gamma;

  void add_to(CLI::App& app) {
    app.add_option("--preset", preset, "Built-in preset: atomic, solid-state");
    app.add_option("--preset-file", preset_file, "JSON preset file");
    app.add_option("--g", g, "Atom-cavity coupling (both polarizations)");
    app.add_option("--kappa", kappa, "Per-mirror cavity decay rate (both polarizations)");
    app.add_option("--gamma", gamma, "Spontaneous emission rate (both polarizations)");
  }

  struct Resolved {
    std::string name;
    std::string unit;
    CavityParams rates;
    BandwidthRule rule;
  };

  Resolved resolve() const {
    Resolved r{"custom", "", CavityParams::symmetric(0.0, 1.0, 0.0), {}};
    if (!preset.empty() && !preset_file.empty()) throw UsageError("give --preset or --preset-file, not both");
    if (!preset.empty()) {
      try {
        const Preset& p = find_preset(preset);
        r = {p.name, p.unit, p.rates, p.bandwidth_rule};
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
    } else if (!preset_file.empty()) {
      if (!std::ifstream(preset_file)) throw IoError("cannot read preset file " + preset_file);
      const Preset p = load_preset(preset_file);
      r = {p.name, p.unit, p.rates, p.bandwidth_rule};
    } else if (!g) {
      throw UsageError("give --preset, --preset-file or --g");
    }
    if (g) r.rates.g_h = r.rates.g_v = *g;
    if (kappa) r.rates.kappa_h = r.rates.kappa_v = *kappa;
    if (gamma) r.rates.gamma_h = r.rates.gamma_v = *gamma;
    r.rates.validate();
    return r;
  }
};

json rates_json(const CavityParams& p) {
  return json{{"g_h", p.g_h},         {"g_v", p.g_v},         {"kappa_h", p.kappa_h},
              {"kappa_v", p.kappa_v}, {"gamma_h", p.gamma_h}, {"gamma_v", p.gamma_v}};
}

QuadratureConfig make_quadrature(const std::string& method, int nodes, double tolerance) {
  QuadratureConfig q;
  if (method == "gauss-hermite" || method == "gh") {
    q.method = QuadratureMethod::GaussHermite;
  } else if (method == "adaptive-simpson" || method == "simpson") {
    q.method = QuadratureMethod::AdaptiveSimpson;
  } else {
    throw UsageError("unknown quadrature method '" + method + "'");
  }
  q.node_count = nodes;
  q.tolerance = tolerance;
  try {
    q.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return q;
}

json quadrature_json(const QuadratureConfig& q) {
  if (q.method == QuadratureMethod::GaussHermite) {
    return json{{"method", "gauss-hermite"}, {"nodes", q.node_count}};
  }
  return json{{"method", "adaptive-simpson"}, {"tolerance", q.tolerance}};
}

// Opens `path` for writing, or returns `fallback` for "-" / empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::out | std::ios::trunc);
    if (!file_) throw IoError("cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }
  void close(const std::string& path) {
    if (file_.is_open()) {
      file_.close();
      if (file_.fail()) throw IoError("error writing " + path);
    }
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

unsigned worker_count() {
  if (const char* env = std::getenv("CSWAP_WORKERS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// ---- coeffs -----------------------------------------------------------------

struct CoeffsArgs {
  ParamOptions params;
  std::string pol = "h";
  std::string branch = "coupled";
  double from = -1.0;
  double to = 1.0;
  double step = 0.01;
  std::string out;
};

int do_coeffs(const CoeffsArgs& a, std::ostream& out) {
  const auto resolved = a.params.resolve();
  const CavityParams unit = resolved.rates.normalized();
  Polarization pol;
  if (a.pol == "h") pol = Polarization::H;
  else if (a.pol == "v") pol = Polarization::V;
  else throw UsageError("--pol must be h or v");
  AtomBranch branch;
  if (a.branch == "coupled") branch = AtomBranch::Coupled;
  else if (a.branch == "decoupled") branch = AtomBranch::Decoupled;
  else throw UsageError("--branch must be coupled or decoupled");
  if (!(std::isfinite(a.from) && std::isfinite(a.to) && a.from < a.to && a.step > 0.0)) {
    throw UsageError("detuning range needs --from < --to and --step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((a.to - a.from) / a.step + 1e-9)) + 1;
  if (count > 10'000'000) throw UsageError("detuning grid larger than 1e7 points");

  std::vector<std::vector<double>> rows;
  rows.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double omega = a.from + static_cast<double>(i) * a.step;
    const auto s = response(unit, pol, branch, omega);
    rows.push_back({omega, s.r.real(), s.r.imag(), s.t.real(), s.t.imag(), s.m.real(),
                    s.m.imag(), s.unitarity_residual()});
  }
  Sink sink(a.out, out);
  write_csv(sink.stream(),
            {"omega", "re_R", "im_R", "re_T", "im_T", "re_m", "im_m", "unitarity_residual"}, rows);
  sink.close(a.out);
  return kExitOk;
}

// ---- metrics ----------------------------------------------------------------

struct MetricsArgs {
  ParamOptions params;
  std::string bandwidth;
  std::string format = "plain";
  std::string method = "gauss-hermite";
  int nodes = 64;
  double tolerance = 1e-11;
};

int do_metrics(const MetricsArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  const auto resolved = a.params.resolve();
  BandwidthRule rule = resolved.rule;
  if (!a.bandwidth.empty()) {
    try {
      rule = BandwidthRule::parse(a.bandwidth);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (a.format != "plain" && a.format != "json") throw UsageError("--format must be plain or json");
  const QuadratureConfig quad = make_quadrature(a.method, a.nodes, a.tolerance);
  const OperatingPoint op = resolve(resolved.rates, rule);
  const OverlapSet ov = overlaps(op.params, op.pulse, quad);
  const GateMetrics m = metrics(ov);

  if (a.format == "json") {
    json report{
        {"command", "metrics"},
        {"inputs",
         {{"preset", resolved.name},
          {"unit", resolved.unit},
          {"rates", rates_json(resolved.rates)},
          {"bandwidth_rule", rule.to_string()},
          {"bandwidth_over_kappa", op.pulse.bandwidth},
          {"quadrature", quadrature_json(quad)}}},
        {"outputs", {{"p", m.p}, {"F", m.F}}},
        {"quadrature_residual", ov.residual},
        {"seed", nullptr},
    };
    out << report.dump(2) << "\n";
  } else {
    out << "preset                " << resolved.name << "\n"
        << "bandwidth/kappa       " << format_g(op.pulse.bandwidth) << "\n"
        << "p                     " << format_g(m.p) << "\n"
        << "F                     " << format_g(m.F) << "\n"
        << "quadrature_residual   " << format_e12(ov.residual) << "\n";
  }
  report_elapsed(err, "metrics", start);
  return kExitOk;
}

// ---- sweep ------------------------------------------------------------------

struct SweepArgs {
  std::string axis;
  std::string values;
  std::string fixed;
  std::string figure;
  double gamma = 1.0;
  std::string out;
  std::string method = "gauss-hermite";
  int nodes = 64;
};

std::string plot_script(const std::string& csv_name, bool bandwidth_axis) {
  const std::string x = bandwidth_axis ? "dw_over_kappa" : "g_over_kappa";
  const std::string group = bandwidth_axis ? "g_over_kappa" : "dw_over_kappa";
  const std::string xlabel = bandwidth_axis ? "bandwidth / kappa" : "g / kappa";
  const std::string glabel = bandwidth_axis ? "g/kappa" : "bandwidth/kappa";
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
     << "# Generated by cswapsim sweep. Renders p and F from the sweep table.\n"
     << "import csv, os, sys\n"
     << "import matplotlib\n"
     << "matplotlib.use('Agg')\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "here = os.path.dirname(os.path.abspath(__file__))\n"
     << "path = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, '" << csv_name << "')\n"
     << "series = {}\n"
     << "with open(path) as f:\n"
     << "    for row in csv.DictReader(f):\n"
     << "        series.setdefault(float(row['" << group << "']), []).append(\n"
     << "            (float(row['" << x << "']), float(row['p']), float(row['F'])))\n"
     << "fig, (ax_p, ax_f) = plt.subplots(2, 1, sharex=True, figsize=(5, 6))\n"
     << "for key, pts in sorted(series.items()):\n"
     << "    pts.sort()\n"
     << "    xs = [q[0] for q in pts]\n"
     << "    ax_p.plot(xs, [q[1] for q in pts], label='" << glabel << " = %g' % key)\n"
     << "    ax_f.plot(xs, [q[2] for q in pts], label='" << glabel << " = %g' % key)\n"
     << "ax_p.set_ylabel('loss p')\n"
     << "ax_f.set_ylabel('fidelity F')\n"
     << "ax_f.set_xlabel('" << xlabel << "')\n"
     << "ax_p.legend()\n"
     << "fig.tight_layout()\n"
     << "stem = os.path.splitext(path)[0]\n"
     << "fig.savefig(stem + '.png', dpi=150)\n"
     << "fig.savefig(stem + '.pdf')\n";
  return os.str();
}

int do_sweep(SweepArgs a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  if (!a.figure.empty()) {
    if (a.figure == "left") {
      a.axis = "bandwidth";
      if (a.values.empty()) a.values = "0.01:0.3:0.01";
      if (a.fixed.empty()) a.fixed = "3,6,10";
    } else if (a.figure == "right") {
      a.axis = "coupling";
      if (a.values.empty()) a.values = "0.5:10:0.25";
      if (a.fixed.empty()) a.fixed = "0.05,0.1";
    } else {
      throw UsageError("--figure must be left or right");
    }
  }
  if (a.axis != "bandwidth" && a.axis != "coupling") throw UsageError("--axis must be bandwidth or coupling");
  if (a.values.empty() || a.fixed.empty()) throw UsageError("sweep needs --values and --fixed");
  if (a.out.empty()) throw UsageError("sweep needs --out");
  const bool bandwidth_axis = a.axis == "bandwidth";
  const std::vector<double> values = parse_values(a.values);
  const std::vector<double> fixed = parse_values(a.fixed);
  for (double v : values) {
    if (!(v > 0.0)) throw UsageError("sweep axis values must be positive");
  }
  for (double v : fixed) {
    if (!(v > 0.0)) throw UsageError("sweep fixed values must be positive");
  }
  if (!(a.gamma >= 0.0) || !std::isfinite(a.gamma)) throw UsageError("--gamma must be finite and >= 0");

  const QuadratureConfig quad = make_quadrature(a.method, a.nodes, 1e-11);
  const CavityParams base = CavityParams::symmetric(0.0, 1.0, a.gamma);
  const auto rows = bandwidth_axis ? sweep(base, fixed, values, quad, worker_count())
                                   : sweep(base, values, fixed, quad, worker_count());

  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  std::size_t failed = 0;
  for (const auto& r : rows) {
    table.push_back({r.g_over_kappa, r.dw_over_kappa, r.p, r.F});
    if (r.error) {
      ++failed;
      err << "sweep point g/kappa=" << format_g(r.g_over_kappa)
          << " dw/kappa=" << format_g(r.dw_over_kappa) << " failed: " << *r.error << "\n";
    }
  }
  Sink sink(a.out, out);
  write_csv(sink.stream(), {"g_over_kappa", "dw_over_kappa", "p", "F"}, table);
  sink.close(a.out);

  const std::filesystem::path csv_path(a.out);
  std::filesystem::path script_path = csv_path;
  script_path.replace_extension(".plot.py");
  {
    std::ofstream script(script_path);
    if (!script) throw IoError("cannot write " + script_path.string());
    script << plot_script(csv_path.filename().string(), bandwidth_axis);
    if (!script) throw IoError("error writing " + script_path.string());
  }
  out << "rows " << rows.size() << "\n"
      << "failed " << failed << "\n"
      << "csv " << a.out << "\n"
      << "plot_script " << script_path.string() << "\n";
  report_elapsed(err, "sweep", start);
  return kExitOk;
}

// ---- fingerprint ------------------------------------------------------------

struct FingerprintArgs {
  int n = 2;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
  std::string psi;
  std::string phi;
  bool identical = false;
  std::string format = "plain";
};

int do_fingerprint(const FingerprintArgs& a, std::ostream& out) {
  if (a.n < 1) throw UsageError("--n must be at least 1");
  if (a.n > 8) throw ResourceError("fingerprint registers are limited to n <= 8", static_cast<std::uint64_t>(a.n));
  if (a.trials < 1) throw UsageError("--trials must be at least 1");
  if (a.format != "plain" && a.format != "json") throw UsageError("--format must be plain or json");

  std::mt19937_64 rng(a.seed);
  auto make = [&](const std::string& spec, const char* which) {
    if (spec.empty() || spec == "random") return random_state(a.n, rng);
    if (static_cast<int>(spec.size()) != a.n) {
      throw UsageError(std::string("--") + which + " must have exactly n = " + std::to_string(a.n) + " characters");
    }
    try {
      return PureState::from_string(spec);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  };
  const PureState psi = make(a.psi, "psi");
  const PureState phi = a.identical ? psi : make(a.phi, "phi");

  const double p_minus = swap_test(psi, phi);
  const std::uint64_t hits = sample_minus_outcomes(p_minus, a.trials, a.seed ^ 0x9e3779b97f4a7c15ULL);
  const double empirical = static_cast<double>(hits) / static_cast<double>(a.trials);
  const double overlap = std::abs(psi.inner(phi));
  const double recovered = std::sqrt(std::max(0.0, 1.0 - 2.0 * p_minus));
  const double stderr_ = std::sqrt(p_minus * (1.0 - p_minus) / static_cast<double>(a.trials));
  const bool within = std::abs(empirical - p_minus) <= 3.0 * stderr_;

  if (a.format == "json") {
    json report{
        {"command", "fingerprint"},
        {"inputs", {{"n", a.n}, {"trials", a.trials}, {"psi", a.psi.empty() ? "random" : a.psi},
                    {"phi", a.identical ? "identical" : (a.phi.empty() ? "random" : a.phi)}}},
        {"outputs",
         {{"p_minus_exact", p_minus},
          {"minus_count", hits},
          {"p_minus_empirical", empirical},
          {"standard_error", stderr_},
          {"within_3_sigma", within},
          {"overlap_exact", overlap},
          {"overlap_recovered", recovered}}},
        {"seed", a.seed},
    };
    out << report.dump(2) << "\n";
  } else {
    out << "p_minus_exact       " << format_e12(p_minus) << "\n"
        << "p_minus_empirical   " << format_e12(empirical) << "  (" << hits << "/" << a.trials << ")\n"
        << "standard_error      " << format_e12(stderr_) << "\n"
        << "within_3_sigma      " << (within ? "yes" : "no") << "\n"
        << "overlap_exact       " << format_e12(overlap) << "\n"
        << "overlap_recovered   " << format_e12(recovered) << "\n"
        << "seed                " << a.seed << "\n";
  }
  return kExitOk;
}

// ---- synthesize -------------------------------------------------------------

struct SynthesizeArgs {
  std::string target = "cpf";
  int cswaps = 2;
  std::string gates = "I,Z";
  std::string atom_gates;
  bool feedforward = false;
  double budget = 60.0;
  std::string format = "plain";
};

std::vector<GateKind> parse_gate_list(const std::string& text) {
  std::vector<GateKind> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const GateKind k = parse_gate_kind(item);
      if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("empty gate list");
  return out;
}

int do_synthesize(const SynthesizeArgs& a, std::ostream& out, std::ostream& err) {
  const auto start = Clock::now();
  SynthesisTarget target;
  if (a.target == "cpf") target = SynthesisTarget::cpf();
  else if (a.target == "czz") target = SynthesisTarget::czz();
  else throw UsageError("--target must be cpf or czz");
  if (a.format != "plain" && a.format != "json") throw UsageError("--format must be plain or json");
  if (!(a.budget > 0.0)) throw UsageError("--budget must be positive");

  SynthesisOptions opt;
  opt.num_cswaps = a.cswaps;
  opt.photon_gates = parse_gate_list(a.gates);
  opt.atom_gates = a.atom_gates.empty() ? opt.photon_gates : parse_gate_list(a.atom_gates);
  opt.allow_feedforward = a.feedforward;
  opt.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(a.budget * 1000.0));
  SynthesisResult result;
  try {
    result = synthesize(target, opt);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  if (a.format == "json") {
    json found = json::array();
    for (const auto& c : result.found) found.push_back(c.to_string());
    json report{
        {"command", "synthesize"},
        {"inputs", {{"target", target.name}, {"cswaps", a.cswaps}, {"gates", a.gates},
                    {"atom_gates", a.atom_gates.empty() ? a.gates : a.atom_gates},
                    {"feedforward", a.feedforward}}},
        {"outputs", {{"search_space", result.search_space}, {"evaluated", result.evaluated},
                     {"truncated", result.truncated}, {"found", found}}},
        {"seed", nullptr},
    };
    out << report.dump(2) << "\n";
  } else {
    out << "target         " << target.name << "\n"
        << "search_space   " << result.search_space << "\n"
        << "evaluated      " << result.evaluated << "\n"
        << "found          " << result.found.size() << "\n";
    for (const auto& c : result.found) out << c.to_string() << "\n";
    if (result.truncated) out << "TRUNCATED (time budget exhausted)\n";
  }
  report_elapsed(err, "synthesize", start);
  return result.truncated ? kExitTruncated : kExitOk;
}

}  // namespace

std::vector<double> parse_values(const std::string& text) {
  auto number = [](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("not a number: '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw UsageError("not a number: '" + s + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("range must be start:stop:step");
    const double lo = number(parts[0]);
    const double hi = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step > 0.0) || hi < lo) throw UsageError("range needs start <= stop and step > 0");
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 1'000'000) throw UsageError("range longer than 1e6 values");
    for (std::size_t i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(number(item));
    }
  }
  if (out.empty()) throw UsageError("empty value list");
  return out;
}

void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_e12(row[i]);
    os << "\n";
  }
}

CsvTable read_csv(std::istream& is) {
  CsvTable table;
  std::string line;
  if (!std::getline(is, line)) return table;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
    table.rows.push_back(std::move(row));
  }
  return table;
}

int cmd_verify(VerifySuite suite, const VerifyOptions& options, std::ostream& out) {
  const auto results = run_verify(suite, options);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
    if (!r.passed) {
      out << ": " << r.detail;
      ++failed;
    }
    out << "\n";
  }
  out << (failed ? "verification failed: " + std::to_string(failed) + " invariant(s)"
                 : "all " + std::to_string(results.size()) + " invariants hold")
      << "\n";
  return failed ? kExitVerification : kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cavity-mediated controlled-SWAP gate simulator and circuit verifier", "cswapsim"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto* c_coeffs = app.add_subcommand("coeffs", "Reflection/transmission/noise coefficients to CSV");
  coeffs.params.add_to(*c_coeffs);
  c_coeffs->add_option("--pol", coeffs.pol, "Polarization mode: h or v");
  c_coeffs->add_option("--branch", coeffs.branch, "Atomic branch: coupled or decoupled");
  c_coeffs->add_option("--from", coeffs.from, "First detuning, units of kappa_h");
  c_coeffs->add_option("--to", coeffs.to, "Last detuning, units of kappa_h");
  c_coeffs->add_option("--step", coeffs.step, "Detuning step, units of kappa_h");
  c_coeffs->add_option("--out", coeffs.out, "Output CSV path (default stdout)");

  MetricsArgs met;
  auto* c_metrics = app.add_subcommand("metrics", "Loss probability p and fidelity F at one operating point");
  met.params.add_to(*c_metrics);
  c_metrics->add_option("--bandwidth", met.bandwidth, "Pulse bandwidth: 0.1kappa, 0.1g2k or absolute");
  c_metrics->add_option("--format", met.format, "plain or json");
  c_metrics->add_option("--method", met.method, "gauss-hermite or adaptive-simpson");
  c_metrics->add_option("--nodes", met.nodes, "Gauss-Hermite node count");
  c_metrics->add_option("--tolerance", met.tolerance, "Adaptive Simpson tolerance");

  SweepArgs sw;
  auto* c_sweep = app.add_subcommand("sweep", "Grid of (p, F) over g/kappa and bandwidth/kappa");
  c_sweep->add_option("--axis", sw.axis, "bandwidth or coupling");
  c_sweep->add_option("--values", sw.values, "Axis values: list or start:stop:step (units of kappa)");
  c_sweep->add_option("--fixed", sw.fixed, "Values of the other parameter (units of kappa)");
  c_sweep->add_option("--figure", sw.figure, "Preset grids: left (bandwidth axis) or right (coupling axis)");
  c_sweep->add_option("--gamma", sw.gamma, "gamma/kappa (default 1)");
  c_sweep->add_option("--method", sw.method, "gauss-hermite or adaptive-simpson");
  c_sweep->add_option("--nodes", sw.nodes, "Gauss-Hermite node count");
  c_sweep->add_option("--out", sw.out, "Output CSV path");

  std::string suite_name = "all";
  auto* c_verify = app.add_subcommand("verify", "Run invariant suites");
  c_verify->add_option("suite", suite_name, "circuits, physics or all");
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  c_verify->add_option("--seed", verify_seed, "Seed for randomized invariants");

  FingerprintArgs fp;
  auto* c_fp = app.add_subcommand("fingerprint", "SWAP-test overlap estimate for two n-qubit registers");
  c_fp->add_option("--n", fp.n, "Qubits per register (<= 8)");
  c_fp->add_option("--trials", fp.trials, "Sampled measurement repetitions");
  c_fp->add_option("--seed", fp.seed, "Seed for random states and sampling");
  c_fp->add_option("--psi", fp.psi, "State string (h v + - r l per qubit) or 'random'");
  c_fp->add_option("--phi", fp.phi, "State string or 'random'");
  c_fp->add_flag("--identical", fp.identical, "Use phi = psi");
  c_fp->add_option("--format", fp.format, "plain or json");

  SynthesizeArgs sy;
  auto* c_syn = app.add_subcommand("synthesize", "Exhaustive CSWAP circuit search");
  c_syn->add_option("--target", sy.target, "cpf or czz");
  c_syn->add_option("--cswaps", sy.cswaps, "Number of CSWAP gates (0-4)");
  c_syn->add_option("--gates", sy.gates, "Single-qubit gate set, e.g. I,Z,S,Sdag,H");
  c_syn->add_option("--atom-gates", sy.atom_gates, "Gate set for the atom wire (default --gates)");
  c_syn->add_flag("--feedforward", sy.feedforward, "Allow terminal atom measurement with corrections");
  c_syn->add_option("--budget", sy.budget, "Time budget in seconds");
  c_syn->add_option("--format", sy.format, "plain or json");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*c_coeffs) return do_coeffs(coeffs, out);
    if (*c_metrics) return do_metrics(met, out, err);
    if (*c_sweep) return do_sweep(sw, out, err);
    if (*c_verify) {
      VerifySuite suite;
      try {
        suite = parse_suite(suite_name);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      VerifyOptions options;
      options.seed = verify_seed;
      return cmd_verify(suite, options, out);
    }
    if (*c_fp) return do_fingerprint(fp, out);
    if (*c_syn) return do_synthesize(sy, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << " (residual " << format_e12(e.residual()) << ")\n";
    return kExitVerification;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cswap::cli
