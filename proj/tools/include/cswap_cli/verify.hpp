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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cswap/cavity.hpp"

namespace cswap::cli {

enum class VerifySuite { Circuits, Physics, All };

VerifySuite parse_suite(std::string_view name);

struct InvariantResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // Spectral response under test; tests substitute faulty versions here.
  ResponseFn response = cswap::response;
  std::uint64_t seed = 20260101;
};

// The circuits suite performs no numerical integration.
std::vector<InvariantResult> run_verify(VerifySuite suite, const VerifyOptions& options = {});

}  // namespace cswap::cli
