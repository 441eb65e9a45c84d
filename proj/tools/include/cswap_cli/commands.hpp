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

#include <iosfwd>
#include <string>
#include <vector>

#include "cswap/cavity.hpp"
#include "cswap_cli/verify.hpp"

namespace cswap::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitVerification = 3,
  kExitTruncated = 4,
};

// Parses and runs one command line (args[0] is the program name). Reports
// and tables go to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// `verify` with an explicit response under test.
int cmd_verify(VerifySuite suite, const VerifyOptions& options, std::ostream& out);

// Comma-separated list ("0.05,0.1") or inclusive range ("0.5:10:0.25").
std::vector<double> parse_values(const std::string& text);

// Header row plus `%.12e` numeric rows.
void write_csv(std::ostream& os, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& rows);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
CsvTable read_csv(std::istream& is);

}  // namespace cswap::cli
