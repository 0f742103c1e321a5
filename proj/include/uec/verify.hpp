// verify.hpp
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
//
// Cross-module verification suites. Each check evaluates one inequality or
// identity at desk scale and records the measured value next to its bound.
// Non-fatal checks are margin reports: they carry information but never
// fail a suite.

#ifndef UEC_VERIFY_HPP_
#define UEC_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace uec {

struct VerifyConfig {
  std::uint64_t seed = 0xC0FFEE;
  std::uint64_t trials = 100000;
  double tol = 1e-6;
};

struct CheckResult {
  std::string name;
  std::string claim;
  double measured = 0.0;
  double bound = 0.0;
  bool pass = false;
  bool fatal = true;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
};

SuiteResult run_codec_suite(const VerifyConfig& config);
SuiteResult run_shtarkov_suite(const VerifyConfig& config);
SuiteResult run_redundancy_suite(const VerifyConfig& config);
SuiteResult run_concentration_suite(const VerifyConfig& config);

// which: codec | shtarkov | redundancy | concentration | all
std::vector<SuiteResult> run_suites(const std::string& which,
                                    const VerifyConfig& config);

nlohmann::ordered_json suites_json(const std::vector<SuiteResult>& suites,
                                   const VerifyConfig& config);

}  // namespace uec

#endif  // UEC_VERIFY_HPP_
