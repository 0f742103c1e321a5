// json_io.cpp
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

#include "uec/json_io.hpp"

namespace uec {

namespace {

nlohmann::ordered_json pairs_json(
    const std::vector<std::pair<std::string, double>>& pairs) {
  nlohmann::ordered_json doc;
  for (const auto& [key, value] : pairs) doc[key] = value;
  return doc;
}

}  // namespace

nlohmann::ordered_json bound_report_json(const BoundReport& report) {
  nlohmann::ordered_json doc;
  doc["name"] = report.name;
  doc["claim"] = report.claim;
  doc["value"] = report.value;
  doc["terms"] = pairs_json(report.terms);
  doc["params"] = pairs_json(report.params);
  return doc;
}

nlohmann::ordered_json shtarkov_report_json(const ShtarkovReport& report) {
  nlohmann::ordered_json doc;
  doc["class"] = report.class_summary;
  doc["n"] = report.n;
  doc["log2_S"] = report.log2_sum;
  doc["method"] = report.method == ShtarkovMethod::kExhaustive
                      ? "exhaustive"
                      : "profile_grouped";
  return doc;
}

nlohmann::ordered_json envelope_bracket_json(const EnvelopeBracket& bracket) {
  nlohmann::ordered_json doc;
  doc["class"] = bracket.class_summary;
  doc["n"] = bracket.n;
  doc["log2_S_upper"] = bracket.log2_upper;
  doc["log2_S_lower_member"] = bracket.log2_lower;
  doc["method"] = "profile_grouped";
  return doc;
}

nlohmann::ordered_json redundancy_report_json(const RedundancyReport& report) {
  nlohmann::ordered_json doc;
  doc["k"] = report.alphabet_size;
  doc["n"] = report.n;
  doc["achieved_bits"] = report.achieved_bits;
  doc["entropy_bits"] = report.entropy_bits;
  doc["expected_codelength_bits"] = report.expected_codelength_bits;
  return doc;
}

nlohmann::ordered_json capacity_result_json(const CapacityResult& result) {
  nlohmann::ordered_json doc;
  doc["value_bits"] = result.value_bits;
  doc["capacity_gap"] = result.gap_bits;
  doc["iterations"] = result.iterations;
  doc["converged"] = result.converged;
  doc["prior"] = result.prior;
  return doc;
}

}  // namespace uec
