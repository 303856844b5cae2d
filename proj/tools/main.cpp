#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsg/census.hpp"
#include "nsg/chain.hpp"
#include "nsg/io.hpp"

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    if (token.empty()) throw std::invalid_argument("empty entry in list '" + text + "'");
    std::size_t used = 0;
    const std::int64_t value = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument("bad integer '" + token + "'");
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty list");
  return out;
}

// "G1,G2,..." with an optional leading "@OFFSET" term acting as a shift
// applied to every generator
nsg::RelativeIdeal parse_ideal(const nsg::SemigroupPtr& sg, const std::string& text) {
  std::string rest = text;
  std::int64_t offset = 0;
  if (!rest.empty() && rest.front() == '@') {
    const std::size_t comma = rest.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("ideal spec needs generators after @offset");
    offset = std::stoll(rest.substr(1, comma - 1));
    rest = rest.substr(comma + 1);
  }
  std::vector<std::int64_t> gens = parse_int_list(rest);
  for (std::int64_t& g : gens) g += offset;
  return nsg::RelativeIdeal::from_generators(sg, gens);
}

void emit(const std::string& text) { std::cout << text; }

int run(int argc, char** argv) {
  CLI::App app{"exact calculator for numerical semigroup rings: classification, canonical duality, endomorphism chains, genus census"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::string gens_arg;
  std::string ideal_arg;
  std::int64_t n_arg = 1;
  std::int64_t genus_arg = 8;
  std::int64_t ideals_arg = 16;
  std::uint64_t seed_arg = 0;
  int workers_arg = 1;
  std::int64_t max_steps_arg = 0;
  bool verify_flag = false;
  std::string scope_arg;

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "classify one semigroup (invariants, AG conditions, E, K, verdict)");
  analyze_cmd->add_option("generators", gens_arg, "comma-separated generators, e.g. 3,7,11")->required();
  analyze_cmd->add_option("--ideal", ideal_arg, "also analyze a relative ideal: [@OFFSET,]G1,G2,...");

  CLI::App* chain_cmd = app.add_subcommand("chain", "iterated endomorphism chain up to k[[t]]");
  chain_cmd->add_option("generators", gens_arg)->required();
  chain_cmd->add_option("--max-steps", max_steps_arg, "cap on chain steps (default: genus + 1)");

  CLI::App* family_cmd = app.add_subcommand("family", "the dim = n family <2^(n+1), 2^(n+1)+2^i, 2^(n+1)+3>");
  family_cmd->add_option("--n", n_arg, "family index (1..10)")->required();
  family_cmd->add_flag("--verify", verify_flag, "check the family clauses; nonzero exit on failure");

  CLI::App* census_cmd = app.add_subcommand("census", "classify every semigroup of genus <= N and run the equivalence battery");
  census_cmd->add_option("--genus", genus_arg, "genus bound (0..30)")->required();
  census_cmd->add_option("--ideals", ideals_arg, "random ideals per semigroup (default 16)");
  census_cmd->add_option("--seed", seed_arg, "seed for the random ideals");
  census_cmd->add_option("--workers", workers_arg, "worker threads");

  CLI::App* verify_cmd = app.add_subcommand("verify", "verify built-in claims: 'paper' or 'census'");
  verify_cmd->add_option("scope", scope_arg, "paper | census")->required()->check(CLI::IsMember({"paper", "census"}));
  verify_cmd->add_option("--genus", genus_arg, "census genus bound (default 8 for paper scope)");
  verify_cmd->add_option("--ideals", ideals_arg, "random ideals per semigroup (default 16)");
  verify_cmd->add_option("--seed", seed_arg, "seed for the random ideals");
  verify_cmd->add_option("--workers", workers_arg, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze_cmd->parsed()) {
    const nsg::SemigroupPtr sg = nsg::make_semigroup(parse_int_list(gens_arg));
    const nsg::AnalyzeResult result = nsg::analyze(sg);
    if (format == "json") {
      nsg::Json j = nsg::analyze_to_json(result);
      if (!ideal_arg.empty()) {
        const nsg::RelativeIdeal ideal = parse_ideal(sg, ideal_arg);
        j["ideal"] = nsg::ideal_to_json(ideal);
        j["ideal_minimal_generators"] = ideal.minimal_generators();
        j["ideal_reflexive"] = ideal.reflexive_closure().is_reflexive;
      }
      emit(j.dump(2) + "\n");
    } else {
      emit(nsg::analyze_to_text(result));
      if (!ideal_arg.empty()) {
        const nsg::RelativeIdeal ideal = parse_ideal(sg, ideal_arg);
        emit("ideal                " + nsg::ideal_to_text(ideal) + "\n");
        std::ostringstream os;
        os << "ideal mu             " << ideal.minimal_generators().size() << "\n"
           << "ideal reflexive      " << (ideal.reflexive_closure().is_reflexive ? "true" : "false") << "\n";
        emit(os.str());
      }
    }
    return 0;
  }

  if (chain_cmd->parsed()) {
    const nsg::SemigroupPtr sg = nsg::make_semigroup(parse_int_list(gens_arg));
    const std::int64_t steps = max_steps_arg > 0 ? max_steps_arg : sg->genus() + 1;
    const nsg::ChainReport chain = nsg::end_chain(sg, steps);
    emit(format == "json" ? nsg::chain_to_json(chain).dump(2) + "\n" : nsg::chain_to_text(chain));
    return 0;
  }

  if (family_cmd->parsed()) {
    const nsg::FamilyReport report = nsg::verify_family(n_arg);
    emit(format == "json" ? nsg::family_to_json(report).dump(2) + "\n" : nsg::family_to_text(report));
    if (verify_flag && !report.all_pass) return 1;
    return 0;
  }

  if (census_cmd->parsed()) {
    nsg::CensusOptions opt;
    opt.g_max = genus_arg;
    opt.ideals_per_semigroup = ideals_arg;
    opt.seed = seed_arg;
    opt.workers = workers_arg;
    const std::vector<nsg::CensusRecord> records = nsg::run_census(opt);
    if (format == "json") {
      emit(nsg::census_to_json(records).dump(2) + "\n");
    } else if (format == "csv") {
      emit(nsg::census_to_csv(records));
    } else {
      emit(nsg::census_to_text(records));
    }
    for (const nsg::CensusRecord& rec : records) {
      if (!rec.equivalence_failures.empty()) return 1;
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    bool pass = true;
    std::ostringstream os;
    if (scope_arg == "paper") {
      // worked examples: <3,7,11> and <3,7,8>
      {
        const nsg::AnalyzeResult a = nsg::analyze(nsg::make_semigroup({3, 7, 11}));
        const bool ok = a.e_generators == std::vector<std::int64_t>{3, 4} &&
                        a.report.ag_conditions.all_equal() && a.report.almost_gorenstein &&
                        a.report.min_multiplicity && a.verdict == nsg::OcmVerdict::Finite;
        os << (ok ? "PASS" : "FAIL") << "  example <3,7,11>: E=<3,4>, almost Gorenstein, minimal multiplicity, verdict Finite\n";
        pass = pass && ok;
      }
      {
        const nsg::AnalyzeResult a = nsg::analyze(nsg::make_semigroup({3, 7, 8}));
        const auto& c = a.report.ag_conditions;
        const bool ok = a.e_generators == std::vector<std::int64_t>{3, 4, 5} && !c.cond1_nari &&
                        !c.cond2_KmE && !c.cond3_mKm && !c.cond4_KE_iso_m &&
                        a.verdict == nsg::OcmVerdict::Finite;
        os << (ok ? "PASS" : "FAIL") << "  example <3,7,8>: E=<3,4,5>, not almost Gorenstein, verdict Finite\n";
        pass = pass && ok;
      }
      for (std::int64_t n = 1; n <= 6; ++n) {
        const nsg::FamilyReport fam = nsg::verify_family(n);
        os << (fam.all_pass ? "PASS" : "FAIL") << "  family n=" << n << ": CI codim " << (n + 1)
           << ", chain <2,3> at " << (n + 1) << ", N at " << (n + 2) << ", dim bounds (" << n << "," << n << ")\n";
        if (!fam.all_pass) {
          for (const nsg::ClauseResult& cl : fam.clauses) {
            if (!cl.pass) os << "      " << cl.name << ": " << cl.detail << "\n";
          }
        }
        pass = pass && fam.all_pass;
      }
      nsg::CensusOptions opt;
      opt.g_max = genus_arg;
      opt.ideals_per_semigroup = ideals_arg;
      opt.seed = seed_arg;
      opt.workers = workers_arg;
      const nsg::SuiteReport suite = nsg::equivalence_suite(opt);
      const bool ok = suite.failures.empty();
      os << (ok ? "PASS" : "FAIL") << "  equivalence suite: genus <= " << opt.g_max << ", "
         << suite.semigroups_tested << " semigroups, " << suite.checks_performed << " checks, "
         << suite.failures.size() << " failures\n";
      pass = pass && ok;
      emit(os.str());
    } else {
      nsg::CensusOptions opt;
      opt.g_max = genus_arg;
      opt.ideals_per_semigroup = ideals_arg;
      opt.seed = seed_arg;
      opt.workers = workers_arg;
      const nsg::SuiteReport suite = nsg::equivalence_suite(opt);
      pass = suite.failures.empty();
      emit(format == "json" ? nsg::suite_to_json(suite).dump(2) + "\n" : nsg::suite_to_text(suite));
    }
    return pass ? 0 : 1;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
