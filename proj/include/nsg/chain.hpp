#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsg/classify.hpp"
#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

enum class OcmVerdict { Finite, Infinite, Unknown };
const char* to_string(OcmVerdict v);

struct ChainStep {
  std::int64_t index;
  SemigroupPtr semigroup;
  ClassificationReport report;
};

// The iterated endomorphism chain H = H_0 < H_1 < ... < N, where
// H_{n+1} = (M_n - M_n) for M_n = H_n \ {0}. The genus strictly decreases
// at every step, so the chain reaches N within genus(H) iterations.
struct ChainReport {
  std::vector<ChainStep> steps;
  bool complete = false;                    // N reached within max_steps
  std::int64_t terminates_at_index = -1;    // index of N when complete
  std::int64_t first_finite_type_index = -1;
  // stable-category dimension bounds; emitted only when their theorem
  // hypotheses hold (lower: complete intersection, via codim - 1;
  // upper: symmetric start, via the first finite-CM-type chain index)
  std::optional<std::int64_t> dim_lower;
  std::optional<std::int64_t> dim_upper;
};

ChainReport end_chain(SemigroupPtr start, std::int64_t max_steps);  // max_steps >= 1

// (lower, upper) as in ChainReport; requires H != N
std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>> stable_dim_bounds(const SemigroupPtr& sg);

// the family <2^(n+1), 2^(n+1)+2^i (i=1..n), 2^(n+1)+3> realizing stable-category
// dimension n; requires 1 <= n <= 10
NumericalSemigroup dim_family(std::int64_t n);

struct ClauseResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct FamilyReport {
  std::int64_t n = 0;
  ChainReport chain;
  std::vector<ClauseResult> clauses;
  bool all_pass = false;
};

// checks, for the family member at n: complete intersection of codim n+1;
// chain hits <2,3> at index n+1 and N at n+2; dimension bounds (n, n)
FamilyReport verify_family(std::int64_t n);

// Finite when CM(E) has finite type (sufficient); Infinite when the ring is
// almost Gorenstein and CM(E) does not (necessary there); Unknown otherwise.
// Requires H != N.
OcmVerdict ocm_finite_type_verdict(const SemigroupPtr& sg);

// everything the analyze command reports about one semigroup
struct AnalyzeResult {
  SemigroupPtr semigroup;
  ClassificationReport report;
  std::vector<std::int64_t> pseudo_frobenius;
  std::vector<std::int64_t> e_generators;  // minimal generators of End(m)'s semigroup
  std::vector<std::int64_t> k_members;     // members of K below its conductor
  std::int64_t k_conductor = 0;
  OcmVerdict verdict = OcmVerdict::Finite;
  ChainReport chain;
};
AnalyzeResult analyze(const SemigroupPtr& sg);

}  // namespace nsg
