#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "uec/classfile.hpp"

using nlohmann::json;
using uec::ClassDescription;

TEST_CASE("parse the four kinds") {
  const ClassDescription zipf = uec::parse_class_description(
      json::parse(R"({"kind":"zipf","alpha":2.0,"k":8})"));
  CHECK(zipf.kind == ClassDescription::Kind::kZipf);
  CHECK(zipf.base_distribution().size() == 8);
  CHECK(zipf.summary() == "zipf(alpha=2,k=8)");

  const ClassDescription env = uec::parse_class_description(
      json::parse(R"({"kind":"envelope","envelope":["0.7","0.5","0.25"]})"));
  CHECK(env.kind == ClassDescription::Kind::kEnvelope);
  CHECK(env.envelope_class().size() == 3);
  CHECK_THROWS_AS(env.base_distribution(), std::invalid_argument);

  const ClassDescription perm = uec::parse_class_description(
      json::parse(R"({"kind":"permutation","probs":["0.8","0.2"]})"));
  CHECK(perm.base_distribution().probs() == std::vector<double>{0.8, 0.2});

  const ClassDescription expl = uec::parse_class_description(
      json::parse(R"({"kind":"explicit","probs":[0.25,0.75]})"));
  CHECK(expl.base_distribution().probs() == std::vector<double>{0.25, 0.75});
}

TEST_CASE("decimal strings survive a serialize/parse round trip") {
  ClassDescription desc;
  desc.kind = ClassDescription::Kind::kExplicit;
  desc.probs = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0 - 1e-17, 1e-17};
  // Normalize exactly to sum 1 in doubles.
  desc.probs = {0.1, 0.2, 0.30000000000000004, 0.39999999999999997};
  desc.support = 4;
  const auto doc = uec::class_description_json(desc);
  const ClassDescription back = uec::parse_class_description(doc);
  CHECK(back.probs == desc.probs);
}

TEST_CASE("malformed descriptions are rejected") {
  CHECK_THROWS_AS(uec::parse_class_description(json::parse(R"({"alpha":2})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::parse_class_description(
                      json::parse(R"({"kind":"mystery"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::parse_class_description(
                      json::parse(R"({"kind":"zipf","alpha":0.5,"k":4})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::parse_class_description(
                      json::parse(R"({"kind":"explicit","probs":["0.5x","0.5"]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(uec::parse_class_description(
                      json::parse(R"({"kind":"explicit","probs":[]})")),
                  std::invalid_argument);
}
