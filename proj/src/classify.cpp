#include "nsg/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nsg/check.hpp"

namespace nsg {

namespace {

void require_singular(const NumericalSemigroup& sg) {
  if (sg.is_nat()) throw std::invalid_argument("predicate requires a singular ring (H != N)");
}

struct IdealContext {
  RelativeIdeal unit;
  RelativeIdeal maximal;
  RelativeIdeal canonical;
  RelativeIdeal endo;  // M - M, the ideal underlying E

  explicit IdealContext(const SemigroupPtr& sg)
      : unit(RelativeIdeal::unit(sg)),
        maximal(RelativeIdeal::maximal(sg)),
        canonical(RelativeIdeal::canonical(sg)),
        endo(quotient(maximal, maximal)) {}
};

bool cond2_impl(const IdealContext& ctx) { return quotient(ctx.canonical, ctx.maximal) == ctx.endo; }

TwoRoute cond3_impl(const IdealContext& ctx) {
  const bool via_quotient = quotient(ctx.maximal, ctx.canonical) == ctx.maximal;
  const bool via_product = sum(ctx.maximal, ctx.canonical).is_subset_of(ctx.maximal);
  return {via_quotient, via_product};
}

bool cond4_impl(const IdealContext& ctx) {
  return quotient(ctx.canonical, ctx.endo).isomorphic_to(ctx.maximal).iso;
}

TwoRoute min_mult_impl(const NumericalSemigroup& sg, const IdealContext& ctx) {
  const bool numeric = sg.multiplicity() == sg.edim();
  const auto iso = ctx.endo.isomorphic_to(ctx.maximal);
  if (iso.iso) NSG_CHECK(*iso.shift_by == sg.multiplicity(), "E ~ m must shift by the multiplicity");
  return {numeric, iso.iso};
}

GorensteinRoutes gorenstein_impl(const NumericalSemigroup& sg, const IdealContext& ctx) {
  return {sg.is_symmetric(), sg.type() == 1, ctx.canonical == ctx.unit};
}

}  // namespace

TwoRoute ag_nari_routes(const NumericalSemigroup& sg) {
  require_singular(sg);
  const std::vector<std::int64_t> pf = sg.pseudo_frobenius();
  const std::int64_t t = static_cast<std::int64_t>(pf.size());
  const std::int64_t frob = sg.frobenius();
  bool symmetric_pf = true;
  for (std::int64_t i = 1; i <= t - 1; ++i) {
    if (pf[static_cast<std::size_t>(i - 1)] + pf[static_cast<std::size_t>(t - i - 1)] != frob) {
      symmetric_pf = false;
      break;
    }
  }
  const bool by_count = 2 * sg.genus() == frob + t;
  return {symmetric_pf, by_count};
}

bool ag_nari(const NumericalSemigroup& sg) {
  const TwoRoute r = ag_nari_routes(sg);
  NSG_CHECK(r.agree(), "almost-symmetry routes disagree (PF symmetry vs 2g = F + t)");
  return r.primary;
}

bool ag_condition2(const SemigroupPtr& sg) {
  require_singular(*sg);
  return cond2_impl(IdealContext(sg));
}

TwoRoute ag_condition3_routes(const SemigroupPtr& sg) {
  require_singular(*sg);
  return cond3_impl(IdealContext(sg));
}

bool ag_condition3(const SemigroupPtr& sg) {
  const TwoRoute r = ag_condition3_routes(sg);
  NSG_CHECK(r.agree(), "m : K = m routes disagree (quotient vs product)");
  return r.primary;
}

bool ag_condition4(const SemigroupPtr& sg) {
  require_singular(*sg);
  return cond4_impl(IdealContext(sg));
}

TwoRoute minimal_multiplicity_routes(const SemigroupPtr& sg) {
  require_singular(*sg);
  return min_mult_impl(*sg, IdealContext(sg));
}

bool has_minimal_multiplicity(const SemigroupPtr& sg) {
  const TwoRoute r = minimal_multiplicity_routes(sg);
  NSG_CHECK(r.agree(), "minimal multiplicity routes disagree (e = edim vs E ~ m)");
  return r.primary;
}

bool finite_cm_type(const NumericalSemigroup& sg) {
  if (sg.is_nat()) return true;
  const std::int64_t m = sg.multiplicity();
  if (m > 3) return false;
  std::int64_t gaps_in_band = 0;
  for (std::int64_t x = m; x < 2 * m; ++x) {
    if (!sg.contains(x)) ++gaps_in_band;
  }
  return gaps_in_band <= 1;
}

GorensteinRoutes gorenstein_routes(const SemigroupPtr& sg) {
  require_singular(*sg);
  return gorenstein_impl(*sg, IdealContext(sg));
}

CiResult is_complete_intersection(const NumericalSemigroup& sg) {
  const std::int64_t e = sg.edim();
  const std::int64_t codim = e - 1;
  if (e <= 2) return {true, codim};
  // a gluing at least doubles the multiplicity at every step, so a complete
  // intersection of embedding dimension e has multiplicity >= 2^(e-1)
  if (e - 1 >= 63 ||
      static_cast<std::uint64_t>(sg.multiplicity()) < (std::uint64_t(1) << (e - 1))) {
    return {false, codim};
  }
  if (e > 12) throw std::invalid_argument("gluing enumeration capped at embedding dimension 12");
  const auto& gens = sg.min_generators();
  const std::uint32_t half = std::uint32_t(1) << (e - 1);
  for (std::uint32_t mask = 0; mask + 1 < half; ++mask) {
    std::vector<std::int64_t> part1{gens[0]};
    std::vector<std::int64_t> part2;
    for (std::int64_t i = 1; i < e; ++i) {
      if (mask & (std::uint32_t(1) << (i - 1)))
        part1.push_back(gens[static_cast<std::size_t>(i)]);
      else
        part2.push_back(gens[static_cast<std::size_t>(i)]);
    }
    std::int64_t d1 = 0, d2 = 0;
    for (std::int64_t x : part1) d1 = std::gcd(d1, x);
    for (std::int64_t x : part2) d2 = std::gcd(d2, x);
    if (std::gcd(d1, d2) != 1 || d1 < 2 || d2 < 2) continue;
    for (std::int64_t& x : part1) x /= d1;
    for (std::int64_t& x : part2) x /= d2;
    const NumericalSemigroup s1 = NumericalSemigroup::from_generators(part1);
    const NumericalSemigroup s2 = NumericalSemigroup::from_generators(part2);
    if (!s1.contains(d2) || !s2.contains(d1)) continue;
    const auto& m1 = s1.min_generators();
    const auto& m2 = s2.min_generators();
    if (std::binary_search(m1.begin(), m1.end(), d2)) continue;
    if (std::binary_search(m2.begin(), m2.end(), d1)) continue;
    if (is_complete_intersection(s1).ci && is_complete_intersection(s2).ci) return {true, codim};
  }
  return {false, codim};
}

ClassificationRoutes classify_with_routes(const SemigroupPtr& sg) {
  require_singular(*sg);
  const IdealContext ctx(sg);

  ClassificationRoutes out{};
  out.nari = ag_nari_routes(*sg);
  out.min_mult = min_mult_impl(*sg, ctx);
  out.cond3 = cond3_impl(ctx);
  out.gorenstein = gorenstein_impl(*sg, ctx);

  ClassificationReport& r = out.report;
  r.generators = sg->min_generators();
  r.genus = sg->genus();
  r.frobenius = sg->frobenius();
  r.multiplicity = sg->multiplicity();
  r.edim = sg->edim();
  r.type = sg->type();
  r.gorenstein = out.gorenstein.symmetric;
  r.ag_conditions.cond1_nari = out.nari.primary;
  r.ag_conditions.cond2_KmE = cond2_impl(ctx);
  r.ag_conditions.cond3_mKm = out.cond3.primary;
  r.ag_conditions.cond4_KE_iso_m = cond4_impl(ctx);
  r.almost_gorenstein = r.ag_conditions.cond1_nari;
  r.min_multiplicity = out.min_mult.primary;
  r.finite_cm_type = finite_cm_type(*sg);
  const CiResult ci = is_complete_intersection(*sg);
  r.complete_intersection = ci.ci;
  r.ci_codim = ci.codim;
  return out;
}

ClassificationReport classify(const SemigroupPtr& sg) { return classify_with_routes(sg).report; }

ClassificationReport classify_nat() {
  ClassificationReport r;
  r.generators = {1};
  r.ag_conditions = {true, true, true, true};
  return r;
}

}  // namespace nsg
