#include "nsg/io.hpp"

#include <sstream>

namespace nsg {

namespace {

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string join(const std::vector<std::int64_t>& xs, char sep = ',') {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << sep;
    os << xs[i];
  }
  return os.str();
}

Json optional_to_json(const std::optional<std::int64_t>& v) {
  if (v.has_value()) return *v;
  return nullptr;
}

}  // namespace

Json ideal_to_json(const RelativeIdeal& ideal) {
  Json members = Json::array();
  for (std::int64_t p = 0; p < ideal.conductor_index(); ++p) {
    if (ideal.profile().get(static_cast<std::size_t>(p))) members.push_back(p);
  }
  return Json{{"offset", ideal.offset()}, {"members", members}, {"conductor", ideal.conductor_index()}};
}

Json report_to_json(const ClassificationReport& r) {
  Json j;
  j["generators"] = r.generators;
  j["genus"] = r.genus;
  j["frobenius"] = r.frobenius;
  j["multiplicity"] = r.multiplicity;
  j["edim"] = r.edim;
  j["type"] = r.type;
  j["gorenstein"] = r.gorenstein;
  j["almost_gorenstein"] = r.almost_gorenstein;
  j["min_multiplicity"] = r.min_multiplicity;
  j["finite_cm_type"] = r.finite_cm_type;
  j["complete_intersection"] = r.complete_intersection;
  j["ci_codim"] = r.ci_codim;
  j["cond1_nari"] = r.ag_conditions.cond1_nari;
  j["cond2_KmE"] = r.ag_conditions.cond2_KmE;
  j["cond3_mKm"] = r.ag_conditions.cond3_mKm;
  j["cond4_KE_iso_m"] = r.ag_conditions.cond4_KE_iso_m;
  return j;
}

Json chain_to_json(const ChainReport& chain) {
  Json steps = Json::array();
  for (const ChainStep& s : chain.steps) {
    steps.push_back(Json{{"index", s.index},
                         {"generators", s.semigroup->min_generators()},
                         {"report", report_to_json(s.report)}});
  }
  return Json{{"steps", steps},
              {"complete", chain.complete},
              {"terminates_at_index", chain.terminates_at_index},
              {"first_finite_type_index", chain.first_finite_type_index},
              {"dim_lower", optional_to_json(chain.dim_lower)},
              {"dim_upper", optional_to_json(chain.dim_upper)}};
}

Json analyze_to_json(const AnalyzeResult& a) {
  Json j;
  j["generators"] = a.semigroup->min_generators();
  j["report"] = report_to_json(a.report);
  j["pseudo_frobenius"] = a.pseudo_frobenius;
  j["e_generators"] = a.e_generators;
  j["canonical_members"] = a.k_members;
  j["canonical_conductor"] = a.k_conductor;
  j["verdict"] = to_string(a.verdict);
  j["chain"] = chain_to_json(a.chain);
  return j;
}

Json family_to_json(const FamilyReport& f) {
  Json clauses = Json::array();
  for (const ClauseResult& c : f.clauses) {
    clauses.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"n", f.n},
              {"generators", f.chain.steps.front().semigroup->min_generators()},
              {"clauses", clauses},
              {"all_pass", f.all_pass},
              {"chain", chain_to_json(f.chain)}};
}

Json record_to_json(const CensusRecord& rec) {
  Json failures = Json::array();
  for (const CheckFailure& f : rec.equivalence_failures) {
    failures.push_back(Json{{"check", f.check}, {"detail", f.detail}});
  }
  return Json{{"generators", rec.semigroup->min_generators()},
              {"report", report_to_json(rec.report)},
              {"first_finite_type_index", rec.first_finite_type_index},
              {"verdict", to_string(rec.verdict)},
              {"equivalence_failures", failures}};
}

Json census_to_json(const std::vector<CensusRecord>& records) {
  Json arr = Json::array();
  for (const CensusRecord& rec : records) arr.push_back(record_to_json(rec));
  return arr;
}

Json suite_to_json(const SuiteReport& s) {
  Json failures = Json::array();
  for (const SuiteFailure& f : s.failures) {
    failures.push_back(Json{{"semigroup", f.descriptor}, {"check", f.check}, {"detail", f.detail}});
  }
  return Json{{"g_max", s.options.g_max},
              {"ideals_per_semigroup", s.options.ideals_per_semigroup},
              {"seed", s.options.seed},
              {"semigroups_tested", s.semigroups_tested},
              {"ideals_tested", s.ideals_tested},
              {"checks_performed", s.checks_performed},
              {"genus_counts", s.genus_counts},
              {"failure_count", static_cast<std::int64_t>(s.failures.size())},
              {"failures", failures}};
}

std::string ideal_to_text(const RelativeIdeal& ideal) {
  std::ostringstream os;
  os << "offset " << ideal.offset() << ", conductor " << ideal.conductor_index() << ", members {";
  bool first = true;
  for (std::int64_t x : ideal.members_below_conductor()) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  if (!first) os << ",";
  os << ideal.end() << ",...}";
  return os.str();
}

std::string analyze_to_text(const AnalyzeResult& a) {
  const ClassificationReport& r = a.report;
  std::ostringstream os;
  os << "semigroup            <" << join(r.generators) << ">\n";
  os << "genus                " << r.genus << "\n";
  os << "frobenius            " << r.frobenius << "\n";
  os << "multiplicity         " << r.multiplicity << "\n";
  os << "embedding dim        " << r.edim << "\n";
  os << "type                 " << r.type << "\n";
  os << "pseudo-frobenius     {" << join(a.pseudo_frobenius) << "}\n";
  os << "gorenstein           " << bool_str(r.gorenstein) << "\n";
  os << "almost gorenstein    " << bool_str(r.almost_gorenstein) << "\n";
  os << "  (1) PF symmetric     " << bool_str(r.ag_conditions.cond1_nari) << "\n";
  os << "  (2) K:m = E          " << bool_str(r.ag_conditions.cond2_KmE) << "\n";
  os << "  (3) m:K = m          " << bool_str(r.ag_conditions.cond3_mKm) << "\n";
  os << "  (4) K:E ~ m          " << bool_str(r.ag_conditions.cond4_KE_iso_m) << "\n";
  os << "min multiplicity     " << bool_str(r.min_multiplicity) << "\n";
  os << "finite CM type       " << bool_str(r.finite_cm_type) << "\n";
  os << "complete intersection " << bool_str(r.complete_intersection) << " (codim " << r.ci_codim << ")\n";
  os << "E = End(m)           <" << join(a.e_generators) << ">\n";
  os << "K members            {" << join(a.k_members) << "} + conductor " << a.k_conductor << "\n";
  os << "syzygy verdict       " << to_string(a.verdict) << "\n";
  os << "chain                ";
  for (std::size_t i = 0; i < a.chain.steps.size(); ++i) {
    if (i > 0) os << " < ";
    os << "<" << join(a.chain.steps[i].semigroup->min_generators()) << ">";
  }
  os << "\n";
  return os.str();
}

std::string chain_to_text(const ChainReport& chain) {
  std::ostringstream os;
  for (const ChainStep& s : chain.steps) {
    const ClassificationReport& r = s.report;
    os << "[" << s.index << "] <" << join(r.generators) << ">  genus " << r.genus << "  m " << r.multiplicity
       << "  edim " << r.edim << "  gor " << bool_str(r.gorenstein) << "  ag " << bool_str(r.almost_gorenstein)
       << "  fct " << bool_str(r.finite_cm_type) << "\n";
  }
  os << "complete " << bool_str(chain.complete) << ", terminates at " << chain.terminates_at_index
     << ", first finite-type index " << chain.first_finite_type_index << "\n";
  os << "dim bounds: lower ";
  if (chain.dim_lower)
    os << *chain.dim_lower;
  else
    os << "-";
  os << ", upper ";
  if (chain.dim_upper)
    os << *chain.dim_upper;
  else
    os << "-";
  os << "\n";
  return os.str();
}

std::string family_to_text(const FamilyReport& f) {
  std::ostringstream os;
  os << "family n=" << f.n << "  <" << join(f.chain.steps.front().semigroup->min_generators()) << ">\n";
  for (const ClauseResult& c : f.clauses) {
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  (" << c.detail << ")\n";
  }
  os << chain_to_text(f.chain);
  return os.str();
}

std::string census_to_csv(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  os << "generators,genus,F,m,edim,type,gorenstein,ag,minmult,fct,ci,verdict,failures\n";
  for (const CensusRecord& rec : records) {
    const ClassificationReport& r = rec.report;
    os << '"' << join(r.generators) << '"' << ',' << r.genus << ',' << r.frobenius << ',' << r.multiplicity
       << ',' << r.edim << ',' << r.type << ',' << bool_str(r.gorenstein) << ',' << bool_str(r.almost_gorenstein)
       << ',' << bool_str(r.min_multiplicity) << ',' << bool_str(r.finite_cm_type) << ','
       << bool_str(r.complete_intersection) << ',' << to_string(rec.verdict) << ',';
    for (std::size_t i = 0; i < rec.equivalence_failures.size(); ++i) {
      if (i > 0) os << '|';
      os << rec.equivalence_failures[i].check;
    }
    os << '\n';
  }
  return os.str();
}

std::string census_to_text(const std::vector<CensusRecord>& records) {
  std::ostringstream os;
  std::int64_t failures = 0;
  std::vector<std::int64_t> counts;
  for (const CensusRecord& rec : records) {
    const std::int64_t g = rec.report.genus;
    if (static_cast<std::int64_t>(counts.size()) <= g) counts.resize(static_cast<std::size_t>(g + 1), 0);
    ++counts[static_cast<std::size_t>(g)];
    failures += static_cast<std::int64_t>(rec.equivalence_failures.size());
  }
  os << "semigroups " << records.size() << ", failures " << failures << "\n";
  os << "per-genus counts: " << join(counts) << "\n";
  for (const CensusRecord& rec : records) {
    for (const CheckFailure& f : rec.equivalence_failures) {
      os << "FAIL <" << rec.semigroup->descriptor() << "> " << f.check << ": " << f.detail << "\n";
    }
  }
  return os.str();
}

std::string suite_to_text(const SuiteReport& s) {
  std::ostringstream os;
  os << "census g_max " << s.options.g_max << ", " << s.options.ideals_per_semigroup
     << " ideals per semigroup, seed " << s.options.seed << "\n";
  os << "semigroups tested " << s.semigroups_tested << ", ideals tested " << s.ideals_tested
     << ", checks " << s.checks_performed << "\n";
  os << "per-genus counts: " << join(s.genus_counts) << "\n";
  if (s.failures.empty()) {
    os << "all equivalences hold (0 failures)\n";
  } else {
    os << s.failures.size() << " failures\n";
    for (const SuiteFailure& f : s.failures) {
      os << "FAIL <" << f.descriptor << "> " << f.check << ": " << f.detail << "\n";
    }
  }
  return os.str();
}

}  // namespace nsg
