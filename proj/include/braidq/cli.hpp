// Copyright 2026 The braidq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidq/errors.hpp"

namespace braidq::cli {

struct RunConfig {
  double tolerance = 1e-6;
  std::optional<int> samples;
  std::optional<int> root_order;
  std::optional<double> theta;
  std::optional<std::pair<int, int>> window;
  std::optional<std::string> flips;
  bool json = false;
  std::uint64_t seed = 1;
  int max_crossings = 20;
};

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 2,
  kCapMismatch = 3,
  kResidualTooLarge = 4,
  kBadPoint = 5,
  kTooManyCrossings = 6,
  kAnnotationConflict = 7,
};

int exit_code_for(ErrorKind kind);

/// Entry point shared by the executable and the tests.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace braidq::cli
