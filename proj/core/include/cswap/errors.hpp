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
#include <stdexcept>
#include <string>

namespace cswap {

// Invalid arguments or violated invariants of a domain type.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure did not reach its requested accuracy.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A request exceeds a configured resource guard (wire count, search size).
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::uint64_t requested)
      : std::runtime_error(what), requested_(requested) {}

  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::uint64_t requested_;
};

}  // namespace cswap
