// Copyright (c) 2026, The focusseg Authors
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


// The replication acceptance suite, shared by the test binary and the
// `replicate` command.

#ifndef FOCUSSEG_CHECKS_ACCEPTANCE_HPP_
#define FOCUSSEG_CHECKS_ACCEPTANCE_HPP_

#include <string>
#include <vector>

namespace focusseg::checks {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::vector<std::string> details;  // one line per failed or notable item
};

struct AcceptanceInputs {
  std::string corpus_path;
  std::string pauses_path;
  std::string fixtures_dir;
};

// Paths inside the source tree's data directory.
AcceptanceInputs default_inputs();

// Throws IoError / SchemaError when an input cannot be read.
std::vector<CheckResult> run_acceptance(const AcceptanceInputs& inputs);

// "PASS  1 table means" per check, details indented below.
std::string format_results(const std::vector<CheckResult>& results, bool verbose);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace focusseg::checks

#endif  // FOCUSSEG_CHECKS_ACCEPTANCE_HPP_
