#include "nsg/chain.hpp"

#include <sstream>
#include <stdexcept>

#include "nsg/check.hpp"

namespace nsg {

const char* to_string(OcmVerdict v) {
  switch (v) {
    case OcmVerdict::Finite: return "Finite";
    case OcmVerdict::Infinite: return "Infinite";
    case OcmVerdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

ChainReport end_chain(SemigroupPtr start, std::int64_t max_steps) {
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");
  ChainReport out;
  SemigroupPtr cur = start;
  for (std::int64_t idx = 0;; ++idx) {
    out.steps.push_back({idx, cur, cur->is_nat() ? classify_nat() : classify(cur)});
    if (cur->is_nat()) {
      out.complete = true;
      out.terminates_at_index = idx;
      break;
    }
    if (idx == max_steps) break;
    SemigroupPtr next = share(end_semigroup(cur));
    NSG_CHECK(next->genus() < cur->genus(), "endomorphism step must decrease the genus");
    cur = std::move(next);
  }
  for (const ChainStep& step : out.steps) {
    if (finite_cm_type(*step.semigroup)) {
      out.first_finite_type_index = step.index;
      break;
    }
  }
  if (!start->is_nat()) {
    const ClassificationReport& head = out.steps.front().report;
    if (head.complete_intersection) out.dim_lower = head.edim - 2;
    if (out.complete && head.gorenstein) {
      const std::int64_t n_star = out.first_finite_type_index;
      NSG_CHECK(n_star >= 0, "complete chain must reach a finite-type step");
      out.dim_upper = (n_star == 0) ? 0 : n_star - 1;
    }
  }
  return out;
}

std::pair<std::optional<std::int64_t>, std::optional<std::int64_t>> stable_dim_bounds(const SemigroupPtr& sg) {
  if (sg->is_nat()) throw std::invalid_argument("dimension bounds require a singular ring");
  const ChainReport chain = end_chain(sg, sg->genus() + 1);
  return {chain.dim_lower, chain.dim_upper};
}

NumericalSemigroup dim_family(std::int64_t n) {
  if (n < 1 || n > 10) throw std::invalid_argument("family index must lie in [1, 10]");
  const std::int64_t base = std::int64_t(1) << (n + 1);
  std::vector<std::int64_t> gens{base};
  for (std::int64_t i = 1; i <= n; ++i) gens.push_back(base + (std::int64_t(1) << i));
  gens.push_back(base + 3);
  NumericalSemigroup sg = NumericalSemigroup::from_generators(gens);
  NSG_CHECK(sg.edim() == n + 2, "family member must have embedding dimension n + 2");
  return sg;
}

namespace {

std::string chain_step_descriptor(const ChainReport& chain, std::int64_t index) {
  if (index < 0 || index >= static_cast<std::int64_t>(chain.steps.size())) return "<missing>";
  return chain.steps[static_cast<std::size_t>(index)].semigroup->descriptor();
}

}  // namespace

FamilyReport verify_family(std::int64_t n) {
  FamilyReport out;
  out.n = n;
  const SemigroupPtr start = share(dim_family(n));
  out.chain = end_chain(start, n + 3);
  const ClassificationReport& head = out.chain.steps.front().report;

  {
    const bool pass = head.complete_intersection && head.ci_codim == n + 1;
    std::ostringstream detail;
    detail << "ci=" << (head.complete_intersection ? "true" : "false") << " codim=" << head.ci_codim
           << " expected codim=" << (n + 1);
    out.clauses.push_back({"complete_intersection_codim", pass, detail.str()});
  }
  {
    const std::string got = chain_step_descriptor(out.chain, n + 1);
    const bool pass = got == "2,3";
    out.clauses.push_back({"chain_hits_2_3_at_n_plus_1", pass, "step " + std::to_string(n + 1) + " = " + got});
  }
  {
    const bool pass = out.chain.complete && out.chain.terminates_at_index == n + 2;
    out.clauses.push_back({"chain_hits_naturals_at_n_plus_2", pass,
                           "terminates at " + std::to_string(out.chain.terminates_at_index)});
  }
  {
    const bool pass = out.chain.dim_lower.has_value() && out.chain.dim_upper.has_value() &&
                      *out.chain.dim_lower == n && *out.chain.dim_upper == n;
    std::ostringstream detail;
    detail << "lower=" << (out.chain.dim_lower ? std::to_string(*out.chain.dim_lower) : "none")
           << " upper=" << (out.chain.dim_upper ? std::to_string(*out.chain.dim_upper) : "none")
           << " expected (" << n << ", " << n << ")";
    out.clauses.push_back({"stable_dim_bounds", pass, detail.str()});
  }
  out.all_pass = true;
  for (const ClauseResult& c : out.clauses) out.all_pass = out.all_pass && c.pass;
  return out;
}

OcmVerdict ocm_finite_type_verdict(const SemigroupPtr& sg) {
  if (sg->is_nat()) throw std::invalid_argument("verdict requires a singular ring");
  const NumericalSemigroup endo = end_semigroup(sg);
  if (finite_cm_type(endo)) return OcmVerdict::Finite;
  if (ag_nari(*sg)) return OcmVerdict::Infinite;
  return OcmVerdict::Unknown;
}

AnalyzeResult analyze(const SemigroupPtr& sg) {
  AnalyzeResult out;
  out.semigroup = sg;
  if (sg->is_nat()) {
    out.report = classify_nat();
    out.chain = end_chain(sg, 1);
    out.verdict = OcmVerdict::Finite;
    return out;
  }
  out.report = classify(sg);
  out.pseudo_frobenius = sg->pseudo_frobenius();
  out.chain = end_chain(sg, sg->genus() + 1);
  out.e_generators = out.chain.steps.size() > 1 ? out.chain.steps[1].semigroup->min_generators()
                                                : std::vector<std::int64_t>{};
  const RelativeIdeal k = RelativeIdeal::canonical(sg);
  out.k_members = k.members_below_conductor();
  out.k_conductor = k.conductor_index();
  out.verdict = ocm_finite_type_verdict(sg);
  return out;
}

}  // namespace nsg
