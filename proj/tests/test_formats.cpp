#include <doctest.h>

#include <string>

#include <json.hpp>

#include "pathres/betti.hpp"
#include "pathres/errors.hpp"
#include "pathres/morse.hpp"
#include "pathres/staircase.hpp"

using namespace pathres;

TEST_CASE("text and csv tables are byte deterministic") {
  BettiTable t = betti_table(4, 2, BettiMethod::ClosedForm);
  CHECK(format_table(t, "text") ==
        "beta(1,4) = 6\n"
        "beta(2,5) = 6\n"
        "beta(3,6) = 1\n");
  CHECK(format_table(t, "csv") ==
        "i,j,beta\n"
        "1,4,6\n"
        "2,5,6\n"
        "3,6,1\n");

  BettiTable empty;
  empty.n = 4;
  empty.d = 1;
  empty.method = "closed-form";
  CHECK(format_table(empty, "text") == "");
  CHECK(format_table(empty, "csv") == "i,j,beta\n");

  CHECK_THROWS_AS(format_table(t, "xml"), InputError);
}

TEST_CASE("betti json document") {
  std::string got = format_table(betti_table(3, 2, BettiMethod::Morse), "json");
  CHECK(got ==
        "{\n"
        "  \"n\": 3,\n"
        "  \"d\": 2,\n"
        "  \"method\": \"morse\",\n"
        "  \"entries\": [\n"
        "    {\n"
        "      \"i\": 1,\n"
        "      \"j\": 4,\n"
        "      \"beta\": 3\n"
        "    },\n"
        "    {\n"
        "      \"i\": 2,\n"
        "      \"j\": 5,\n"
        "      \"beta\": 2\n"
        "    }\n"
        "  ],\n"
        "  \"version\": \"betti-v1\"\n"
        "}\n");

  nlohmann::json doc = nlohmann::json::parse(got);
  CHECK(doc["version"] == "betti-v1");
  CHECK(doc["entries"].size() == 2);
  CHECK(doc["entries"][0]["beta"] == 3);
}

TEST_CASE("complex json document") {
  std::string got = ComplexYdn::enumerate(3, 1).to_json();
  nlohmann::json doc = nlohmann::json::parse(got);
  CHECK(doc["version"] == "ydn-v1");
  CHECK(doc["n"] == 3);
  CHECK(doc["d"] == 1);
  REQUIRE(doc["cells"].size() == 3);
  CHECK(doc["cells"][0]["rows"] == nlohmann::json::parse("[[1]]"));
  CHECK(doc["cells"][1]["dim"] == 1);
  CHECK(doc["cells"][1]["label"] == nlohmann::json::parse("[1,1,1]"));
  REQUIRE(doc["boundary"].size() == 3);
  // the edge {1,2} has faces +{2} and -{1}
  CHECK(doc["boundary"][1]["faces"] ==
        nlohmann::json::parse("[[2,1],[0,-1]]"));
  CHECK(got.back() == '\n');

  // serialization is stable across repeated enumeration
  CHECK(ComplexYdn::enumerate(3, 1).to_json() == got);
}

TEST_CASE("matching json document") {
  ComplexYdn X = ComplexYdn::enumerate(4, 1);
  std::string got = matching_to_json(assemble_matching(X));
  CHECK(got ==
        "{\n"
        "  \"pairs\": [\n"
        "    [\n"
        "      3,\n"
        "      2\n"
        "    ]\n"
        "  ],\n"
        "  \"critical\": [\n"
        "    0,\n"
        "    1,\n"
        "    4,\n"
        "    5,\n"
        "    6\n"
        "  ],\n"
        "  \"version\": \"morse-v1\"\n"
        "}\n");

  nlohmann::json doc = nlohmann::json::parse(got);
  CHECK(doc["pairs"].size() == 1);
  CHECK(doc["critical"].size() == 5);
}
