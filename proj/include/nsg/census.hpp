#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nsg/chain.hpp"
#include "nsg/classify.hpp"
#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

// Visits every numerical semigroup of genus <= g_max exactly once, parents
// before children, children ordered by the removed generator. Each child of
// H removes one minimal generator greater than F(H), which makes the parent
// (child plus its Frobenius number) unique. Requires 0 <= g_max <= 30.
void enumerate_by_genus(std::int64_t g_max, const std::function<void(const NumericalSemigroup&)>& visit);
std::vector<NumericalSemigroup> enumerate_by_genus(std::int64_t g_max);

// Deterministic for fixed (H, seed): gen_count integers drawn from [0, span)
// by a fixed-width mix of the seed with the semigroup descriptor, fed to the
// H-module generator construction. Requires gen_count >= 1, span >= 1.
RelativeIdeal random_ideal(const SemigroupPtr& sg, std::uint64_t seed, std::int64_t gen_count,
                           std::int64_t span);

struct CensusOptions {
  std::int64_t g_max = 8;
  std::int64_t ideals_per_semigroup = 16;
  std::uint64_t seed = 0;
  int workers = 1;
};

struct CheckFailure {
  std::string check;
  std::string detail;
};

struct CensusRecord {
  SemigroupPtr semigroup;
  ClassificationReport report;
  std::vector<CheckFailure> equivalence_failures;
  std::int64_t checks_performed = 0;
  std::int64_t first_finite_type_index = 0;
  OcmVerdict verdict = OcmVerdict::Finite;
};

// classification + the full per-semigroup equivalence battery for every
// semigroup of genus <= g_max, records sorted by (genus, generators)
std::vector<CensusRecord> run_census(const CensusOptions& options);

struct SuiteFailure {
  std::string descriptor;
  std::string check;
  std::string detail;
};

struct SuiteReport {
  CensusOptions options;
  std::int64_t semigroups_tested = 0;  // semigroups != N
  std::int64_t ideals_tested = 0;
  std::int64_t checks_performed = 0;
  std::vector<std::int64_t> genus_counts;  // index = genus, includes N at genus 0
  std::vector<SuiteFailure> failures;
};

SuiteReport equivalence_suite(const CensusOptions& options);
SuiteReport summarize(const CensusOptions& options, const std::vector<CensusRecord>& records);

}  // namespace nsg
