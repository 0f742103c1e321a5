// json_io.hpp
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
// JSON projections of the report types. Ordered documents, no timestamps:
// identical inputs serialize to identical bytes.

#ifndef UEC_JSON_IO_HPP_
#define UEC_JSON_IO_HPP_

#include <json.hpp>

#include "uec/bounds.hpp"
#include "uec/redundancy.hpp"
#include "uec/shtarkov.hpp"

namespace uec {

nlohmann::ordered_json bound_report_json(const BoundReport& report);
nlohmann::ordered_json shtarkov_report_json(const ShtarkovReport& report);
nlohmann::ordered_json envelope_bracket_json(const EnvelopeBracket& bracket);
nlohmann::ordered_json redundancy_report_json(const RedundancyReport& report);
nlohmann::ordered_json capacity_result_json(const CapacityResult& result);

}  // namespace uec

#endif  // UEC_JSON_IO_HPP_
