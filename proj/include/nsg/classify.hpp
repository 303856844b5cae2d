#pragma once

#include <cstdint>
#include <vector>

#include "nsg/ideal.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

struct AgConditions {
  bool cond1_nari = false;       // PF set symmetric about F
  bool cond2_KmE = false;        // K : m == E
  bool cond3_mKm = false;        // m : K == m  (equivalently mK inside m)
  bool cond4_KE_iso_m = false;   // K : E isomorphic to m
  bool all_equal() const {
    return cond1_nari == cond2_KmE && cond2_KmE == cond3_mKm && cond3_mKm == cond4_KE_iso_m;
  }
};

struct ClassificationReport {
  std::vector<std::int64_t> generators;
  std::int64_t genus = 0;
  std::int64_t frobenius = -1;
  std::int64_t multiplicity = 1;
  std::int64_t edim = 1;
  std::int64_t type = 0;
  bool gorenstein = true;
  bool almost_gorenstein = true;
  bool min_multiplicity = true;
  bool finite_cm_type = true;
  bool complete_intersection = true;
  std::int64_t ci_codim = 0;
  AgConditions ag_conditions;
};

struct TwoRoute {
  bool primary;
  bool secondary;
  bool agree() const { return primary == secondary; }
};

// almost-Gorenstein via the pseudo-Frobenius symmetry test (primary) and the
// 2*genus == F + type identity (secondary)
TwoRoute ag_nari_routes(const NumericalSemigroup& sg);
bool ag_nari(const NumericalSemigroup& sg);  // throws std::logic_error if the routes split

bool ag_condition2(const SemigroupPtr& sg);  // K : m == E

// quotient route m : K == m, and product route mK inside m
TwoRoute ag_condition3_routes(const SemigroupPtr& sg);
bool ag_condition3(const SemigroupPtr& sg);  // throws std::logic_error if the routes split

bool ag_condition4(const SemigroupPtr& sg);  // K : E isomorphic to m

// e == edim (primary) against E isomorphic to m by the shift m (secondary)
TwoRoute minimal_multiplicity_routes(const SemigroupPtr& sg);
bool has_minimal_multiplicity(const SemigroupPtr& sg);  // throws std::logic_error if the routes split

// Drozd-Roiter in semigroup form: multiplicity <= 3 and at most one gap in
// [m, 2m). True for H = N.
bool finite_cm_type(const NumericalSemigroup& sg);

struct GorensteinRoutes {
  bool symmetric;    // pointwise x in H xor F-x in H
  bool type_one;     // |PF| == 1
  bool k_equals_h;   // canonical ideal equals H
  bool agree() const { return symmetric == type_one && type_one == k_equals_h; }
};
GorensteinRoutes gorenstein_routes(const SemigroupPtr& sg);

struct CiResult {
  bool ci;
  std::int64_t codim;  // edim - 1
};
// gluing decomposition over all bipartitions of the minimal generators;
// embedding dimensions above 12 are rejected (a complete intersection of
// edim e has multiplicity >= 2^(e-1), so the cheap multiplicity filter
// settles every small-multiplicity input first)
CiResult is_complete_intersection(const NumericalSemigroup& sg);

// full per-route detail, for the census battery
struct ClassificationRoutes {
  ClassificationReport report;
  TwoRoute nari;
  TwoRoute min_mult;
  TwoRoute cond3;
  GorensteinRoutes gorenstein;
};
ClassificationRoutes classify_with_routes(const SemigroupPtr& sg);  // requires H != N

ClassificationReport classify(const SemigroupPtr& sg);  // requires H != N
ClassificationReport classify_nat();                    // the trivial row for H = N

}  // namespace nsg
