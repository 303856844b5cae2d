#include <doctest.h>

#include <sstream>

#include "nsg/io.hpp"

using namespace nsg;

namespace {

// pull the value column out of a "key   value" text line
std::string text_value(const std::string& text, const std::string& key) {
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.rfind(key, 0) == 0) {
      const auto pos = line.find_last_of(' ');
      return line.substr(pos + 1);
    }
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("ideal serialization schema") {
  const auto sg = make_semigroup({3, 7, 8});
  const Json j = ideal_to_json(RelativeIdeal::canonical(sg));
  CHECK(j["offset"] == 0);
  CHECK(j["members"] == Json::array({0, 1, 3, 4}));
  CHECK(j["conductor"] == 6);
}

TEST_CASE("text and json renderings of one analysis agree field by field") {
  const AnalyzeResult a = analyze(make_semigroup({3, 7, 11}));
  const Json j = analyze_to_json(a);
  const std::string text = analyze_to_text(a);

  CHECK(j["report"]["genus"].get<std::int64_t>() == std::stoll(text_value(text, "genus")));
  CHECK(j["report"]["frobenius"].get<std::int64_t>() == std::stoll(text_value(text, "frobenius")));
  CHECK(j["report"]["multiplicity"].get<std::int64_t>() == std::stoll(text_value(text, "multiplicity")));
  CHECK(j["report"]["type"].get<std::int64_t>() == std::stoll(text_value(text, "type")));
  CHECK((j["report"]["gorenstein"].get<bool>() ? "true" : "false") == text_value(text, "gorenstein"));
  CHECK((j["report"]["almost_gorenstein"].get<bool>() ? "true" : "false") ==
        text_value(text, "almost gorenstein"));
  CHECK((j["report"]["min_multiplicity"].get<bool>() ? "true" : "false") ==
        text_value(text, "min multiplicity"));
  CHECK(j["verdict"].get<std::string>() == text_value(text, "syzygy verdict"));
  CHECK(j["report"]["cond1_nari"].get<bool>());
  CHECK(j["report"]["cond2_KmE"].get<bool>());
  CHECK(j["report"]["cond3_mKm"].get<bool>());
  CHECK(j["report"]["cond4_KE_iso_m"].get<bool>());
  CHECK(j["e_generators"] == Json::array({3, 4}));
}

TEST_CASE("census csv has the fixed column layout") {
  CensusOptions opt;
  opt.g_max = 2;
  opt.ideals_per_semigroup = 2;
  const auto records = run_census(opt);
  const std::string csv = census_to_csv(records);

  std::istringstream stream(csv);
  std::string header;
  std::getline(stream, header);
  CHECK(header == "generators,genus,F,m,edim,type,gorenstein,ag,minmult,fct,ci,verdict,failures");

  std::string row;
  std::size_t rows = 0;
  while (std::getline(stream, row)) {
    ++rows;
    std::size_t commas = 0;
    bool quoted = false;
    for (char c : row) {
      if (c == '"') quoted = !quoted;
      if (c == ',' && !quoted) ++commas;
    }
    CHECK(commas == 12);
  }
  CHECK(rows == records.size());
  CHECK(csv.find("\"2,3\",1,1,2,2,1,true,true,true,true,true,Finite,") != std::string::npos);
}

TEST_CASE("suite reports serialize deterministically") {
  CensusOptions opt;
  opt.g_max = 5;
  opt.ideals_per_semigroup = 4;
  opt.seed = 9;
  const SuiteReport a = equivalence_suite(opt);
  const SuiteReport b = equivalence_suite(opt);
  CHECK(suite_to_json(a).dump() == suite_to_json(b).dump());
  CHECK(suite_to_text(a) == suite_to_text(b));
  CHECK(suite_to_json(a)["failure_count"] == 0);
}

TEST_CASE("chain and family renderings include every step") {
  const FamilyReport fam = verify_family(1);
  const Json j = family_to_json(fam);
  CHECK(j["all_pass"].get<bool>());
  CHECK(j["chain"]["steps"].size() == 4);
  CHECK(j["clauses"].size() == 4);
  const std::string text = family_to_text(fam);
  CHECK(text.find("PASS") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  const ChainReport chain = end_chain(make_semigroup({3, 7, 8}), 5);
  const Json cj = chain_to_json(chain);
  CHECK(cj["steps"].size() == chain.steps.size());
  CHECK(cj["complete"].get<bool>());
  CHECK(cj["dim_lower"].is_null());
}
