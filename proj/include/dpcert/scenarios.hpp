// Copyright 2026 The dpcert Authors
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
#include <functional>
#include <string>
#include <vector>

namespace dpcert {

struct ScenarioResult {
  std::string name;
  std::string claim;
  std::string expected;
  std::string computed;
  bool pass = false;
  std::uint64_t work = 0;
};

struct ScenarioContext {
  int jobs = 1;
  std::uint64_t seed = 20240611;
};

struct Scenario {
  std::string name;
  std::string summary;
  std::function<std::vector<ScenarioResult>(const ScenarioContext&)> run;
};

/// Every reproducible computation, in a fixed order.
const std::vector<Scenario>& scenario_registry();

}  // namespace dpcert
