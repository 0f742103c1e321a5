// classfile.cpp
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

#include "uec/classfile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace uec {

namespace {

double parse_probability(const nlohmann::json& value) {
  if (value.is_string()) {
    const std::string text = value.get<std::string>();
    std::size_t consumed = 0;
    const double parsed = std::stod(text, &consumed);
    if (consumed != text.size()) {
      throw std::invalid_argument("class file: malformed decimal string");
    }
    return parsed;
  }
  if (value.is_number()) return value.get<double>();
  throw std::invalid_argument("class file: probability must be string or number");
}

std::vector<double> parse_probability_array(const nlohmann::json& array) {
  if (!array.is_array() || array.empty()) {
    throw std::invalid_argument("class file: expected nonempty array");
  }
  std::vector<double> values;
  values.reserve(array.size());
  for (const auto& entry : array) values.push_back(parse_probability(entry));
  return values;
}

std::string format_probability(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

std::string ClassDescription::summary() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kZipf:
      os << "zipf(alpha=" << alpha << ",k=" << support << ")";
      break;
    case Kind::kEnvelope:
      os << "envelope(k=" << envelope.size() << ")";
      break;
    case Kind::kPermutation:
      os << "permutation(k=" << probs.size() << ")";
      break;
    case Kind::kExplicit:
      os << "explicit(k=" << probs.size() << ")";
      break;
  }
  return os.str();
}

Distribution ClassDescription::base_distribution() const {
  switch (kind) {
    case Kind::kZipf:
      return zipf_distribution(alpha, support);
    case Kind::kPermutation:
    case Kind::kExplicit:
      return Distribution(probs);
    case Kind::kEnvelope:
      throw std::invalid_argument(
          "class file: envelope class has no base distribution");
  }
  throw std::logic_error("unreachable");
}

EnvelopeClass ClassDescription::envelope_class() const {
  if (kind == Kind::kEnvelope) return EnvelopeClass(envelope);
  return EnvelopeClass(base_distribution().sorted());
}

ClassDescription parse_class_description(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("kind")) {
    throw std::invalid_argument("class file: missing \"kind\"");
  }
  const std::string kind = doc.at("kind").get<std::string>();
  ClassDescription desc;
  if (kind == "zipf") {
    desc.kind = ClassDescription::Kind::kZipf;
    desc.alpha = doc.at("alpha").get<double>();
    desc.support = doc.at("k").get<std::uint32_t>();
    make_zipf_class(desc.alpha, desc.support);  // validates
  } else if (kind == "envelope") {
    desc.kind = ClassDescription::Kind::kEnvelope;
    desc.envelope = parse_probability_array(doc.at("envelope"));
    desc.support = static_cast<std::uint32_t>(desc.envelope.size());
    EnvelopeClass(desc.envelope);  // validates
  } else if (kind == "permutation" || kind == "explicit") {
    desc.kind = kind == "permutation" ? ClassDescription::Kind::kPermutation
                                      : ClassDescription::Kind::kExplicit;
    desc.probs = parse_probability_array(doc.at("probs"));
    desc.support = static_cast<std::uint32_t>(desc.probs.size());
    Distribution(desc.probs);  // validates
  } else {
    throw std::invalid_argument("class file: unknown kind \"" + kind + "\"");
  }
  return desc;
}

ClassDescription load_class_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open class file: " + path);
  nlohmann::json doc;
  in >> doc;
  return parse_class_description(doc);
}

nlohmann::ordered_json class_description_json(const ClassDescription& desc) {
  nlohmann::ordered_json doc;
  switch (desc.kind) {
    case ClassDescription::Kind::kZipf:
      doc["kind"] = "zipf";
      doc["alpha"] = desc.alpha;
      doc["k"] = desc.support;
      break;
    case ClassDescription::Kind::kEnvelope: {
      doc["kind"] = "envelope";
      auto& array = doc["envelope"] = nlohmann::ordered_json::array();
      for (double f : desc.envelope) array.push_back(format_probability(f));
      break;
    }
    case ClassDescription::Kind::kPermutation:
    case ClassDescription::Kind::kExplicit: {
      doc["kind"] =
          desc.kind == ClassDescription::Kind::kPermutation ? "permutation"
                                                            : "explicit";
      auto& array = doc["probs"] = nlohmann::ordered_json::array();
      for (double p : desc.probs) array.push_back(format_probability(p));
      break;
    }
  }
  return doc;
}

}  // namespace uec
