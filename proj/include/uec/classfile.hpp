// classfile.hpp
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
// JSON class-description files consumed by the CLI:
//   {"kind": "zipf",        "alpha": 2.0, "k": 8}
//   {"kind": "envelope",    "envelope": ["0.5", "0.25", ...]}
//   {"kind": "permutation", "probs":    ["0.8", "0.2"]}
//   {"kind": "explicit",    "probs":    ["0.8", "0.2"]}
// Probabilities are serialized as decimal strings to avoid bit-level drift;
// plain JSON numbers are also accepted on input.

#ifndef UEC_CLASSFILE_HPP_
#define UEC_CLASSFILE_HPP_

#include <string>
#include <vector>

#include <json.hpp>

#include "uec/model.hpp"

namespace uec {

struct ClassDescription {
  enum class Kind { kZipf, kEnvelope, kPermutation, kExplicit };

  Kind kind = Kind::kExplicit;
  double alpha = 0.0;
  std::uint32_t support = 0;
  std::vector<double> envelope;
  std::vector<double> probs;

  std::string summary() const;

  // Representative distribution: the power law for kZipf, the stated vector
  // for kPermutation/kExplicit; throws for kEnvelope.
  Distribution base_distribution() const;

  // The envelope class; for non-envelope kinds this is the exact sorted
  // distribution treated as its own envelope.
  EnvelopeClass envelope_class() const;
};

ClassDescription parse_class_description(const nlohmann::json& doc);
ClassDescription load_class_file(const std::string& path);
nlohmann::ordered_json class_description_json(const ClassDescription& desc);

}  // namespace uec

#endif  // UEC_CLASSFILE_HPP_
