// Copyright 2026 The viperkit Authors
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

#ifndef VIPERKIT_TESTING_RANDOM_PROGRAMS_H_
#define VIPERKIT_TESTING_RANDOM_PROGRAMS_H_

#include <random>
#include <string>
#include <vector>

namespace viperkit::testing {

struct RandomProgramOptions {
  int max_statements = 12;
  int max_depth = 3;
  // Random whitespace and block comments between tokens.
  bool messy_layout = true;
  // Allow `return` statements in nested positions.
  bool early_returns = true;
};

// A function `int f(int a, int b)` over locals x, y, z built from the
// supported statement forms. The count of statements (including nested
// ones) never exceeds max_statements.
std::string RandomProgram(std::mt19937_64& rng, const RandomProgramOptions& options);

// Joins tokens with random whitespace and occasional comments.
std::string MessyJoin(std::mt19937_64& rng, const std::vector<std::string>& tokens);

// Reads a file from tests/testdata.
std::string ReadTestData(const std::string& name);

std::vector<std::string> TestDataFiles();

}  // namespace viperkit::testing

#endif  // VIPERKIT_TESTING_RANDOM_PROGRAMS_H_
