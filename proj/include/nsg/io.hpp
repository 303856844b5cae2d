#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nsg/census.hpp"
#include "nsg/chain.hpp"
#include "nsg/classify.hpp"
#include "nsg/ideal.hpp"

namespace nsg {

using Json = nlohmann::ordered_json;

Json ideal_to_json(const RelativeIdeal& ideal);
Json report_to_json(const ClassificationReport& report);
Json chain_to_json(const ChainReport& chain);
Json analyze_to_json(const AnalyzeResult& result);
Json family_to_json(const FamilyReport& report);
Json record_to_json(const CensusRecord& record);
Json census_to_json(const std::vector<CensusRecord>& records);
Json suite_to_json(const SuiteReport& report);

std::string analyze_to_text(const AnalyzeResult& result);
std::string chain_to_text(const ChainReport& chain);
std::string family_to_text(const FamilyReport& report);
// fixed column order: generators,genus,F,m,edim,type,gorenstein,ag,minmult,fct,ci,verdict,failures
std::string census_to_csv(const std::vector<CensusRecord>& records);
std::string census_to_text(const std::vector<CensusRecord>& records);
std::string suite_to_text(const SuiteReport& report);

std::string ideal_to_text(const RelativeIdeal& ideal);

}  // namespace nsg
