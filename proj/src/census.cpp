#include "nsg/census.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "nsg/check.hpp"

namespace nsg {

namespace {

NumericalSemigroup remove_generator(const NumericalSemigroup& sg, std::int64_t g) {
  BitVec table(static_cast<std::size_t>(g + 1));
  table.or_shifted(sg.member_table(), 0);
  table.fill_from(static_cast<std::size_t>(sg.frobenius() + 1));
  table.set(static_cast<std::size_t>(g), false);
  return NumericalSemigroup::from_membership(std::move(table), g);
}

void walk(const NumericalSemigroup& sg, std::int64_t g_max,
          const std::function<void(const NumericalSemigroup&)>& visit) {
  visit(sg);
  if (sg.genus() >= g_max) return;
  for (std::int64_t g : sg.min_generators()) {
    if (g > sg.frobenius()) walk(remove_generator(sg, g), g_max, visit);
  }
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

std::string bools(std::initializer_list<bool> vs) {
  std::string out;
  for (bool v : vs) {
    if (!out.empty()) out += ',';
    out += v ? '1' : '0';
  }
  return out;
}

CensusRecord build_record(const SemigroupPtr& sg, const CensusOptions& opt) {
  CensusRecord rec;
  rec.semigroup = sg;
  if (sg->is_nat()) {
    rec.report = classify_nat();
    return rec;
  }
  auto check = [&rec](const char* name, bool ok, const std::string& detail) {
    ++rec.checks_performed;
    if (!ok) rec.equivalence_failures.push_back({name, detail});
  };

  try {
    const ClassificationRoutes routes = classify_with_routes(sg);
    rec.report = routes.report;
    const ClassificationReport& r = rec.report;

    const auto& c = r.ag_conditions;
    check("ag_quartet", c.all_equal(),
          bools({c.cond1_nari, c.cond2_KmE, c.cond3_mKm, c.cond4_KE_iso_m}));
    check("nari_routes", routes.nari.agree(), bools({routes.nari.primary, routes.nari.secondary}));
    check("minmult_routes", routes.min_mult.agree(),
          bools({routes.min_mult.primary, routes.min_mult.secondary}));
    check("cond3_routes", routes.cond3.agree(), bools({routes.cond3.primary, routes.cond3.secondary}));
    check("gorenstein_routes", routes.gorenstein.agree(),
          bools({routes.gorenstein.symmetric, routes.gorenstein.type_one, routes.gorenstein.k_equals_h}));
    check("gorenstein_implies_ag", !r.gorenstein || r.almost_gorenstein, "");
    check("ci_implies_gorenstein", !r.complete_intersection || r.gorenstein, "");
    check("type_bound", r.type <= r.multiplicity - 1,
          "type " + std::to_string(r.type) + " m " + std::to_string(r.multiplicity));
    check("genus_bound",
          2 * r.genus >= r.frobenius + 1 && (2 * r.genus == r.frobenius + 1) == r.gorenstein,
          "2g " + std::to_string(2 * r.genus) + " F+1 " + std::to_string(r.frobenius + 1));
    {
      const auto apery = sg->apery_set(r.multiplicity);
      const std::int64_t top = *std::max_element(apery.begin(), apery.end());
      check("apery_frobenius", top - r.multiplicity == r.frobenius, std::to_string(top));
    }

    const RelativeIdeal unit = RelativeIdeal::unit(sg);
    const RelativeIdeal maxi = RelativeIdeal::maximal(sg);
    const RelativeIdeal canon = RelativeIdeal::canonical(sg);
    const RelativeIdeal endo = quotient(maxi, maxi);

    check("e_equals_dual_m", dual(maxi) == endo, "");
    {
      // E = H + PF as sets
      const std::int64_t frob = sg->frobenius();
      BitVec expected(static_cast<std::size_t>(frob + 2));
      expected.or_shifted(sg->member_table(), 0);
      for (std::int64_t x : sg->pseudo_frobenius()) expected.set(static_cast<std::size_t>(x));
      expected.set(static_cast<std::size_t>(frob + 1));
      check("e_equals_h_union_pf",
            endo.offset() == 0 && endo.member_window(0, frob + 2) == expected, "");
    }
    check("m_reflexive", maxi.reflexive_closure().is_reflexive, "");
    check("e_reflexive", endo.reflexive_closure().is_reflexive, "");
    check("m_nonprincipal", !maxi.isomorphic_to(unit).iso, "");
    check("e_nonprincipal", !endo.isomorphic_to(unit).iso, "");

    const ChainReport chain = end_chain(sg, sg->genus() + 1);
    rec.first_finite_type_index = chain.first_finite_type_index;
    const SemigroupPtr he = chain.steps[1].semigroup;
    rec.verdict = finite_cm_type(*he)          ? OcmVerdict::Finite
                  : r.almost_gorenstein        ? OcmVerdict::Infinite
                                               : OcmVerdict::Unknown;
    check("fct_monotone", !r.finite_cm_type || finite_cm_type(*he), "");
    if (chain.first_finite_type_index >= 1) {
      const ChainReport sub = end_chain(he, he->genus() + 1);
      check("chain_index_shift", sub.first_finite_type_index == chain.first_finite_type_index - 1,
            std::to_string(sub.first_finite_type_index));
    }
    if (chain.dim_lower && chain.dim_upper) {
      check("dim_bounds_ordered", *chain.dim_lower <= *chain.dim_upper,
            std::to_string(*chain.dim_lower) + ">" + std::to_string(*chain.dim_upper));
    }

    const std::int64_t span = sg->frobenius() + 2 * sg->multiplicity();
    for (std::int64_t k = 0; k < opt.ideals_per_semigroup; ++k) {
      const std::uint64_t seed_k = opt.seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(k + 1));
      const std::int64_t gen_count = 1 + (k % 4);
      const RelativeIdeal ideal = random_ideal(sg, seed_k, gen_count, span);
      const std::string tag = "ideal " + std::to_string(k);

      check("duality_involution", quotient(canon, quotient(canon, ideal)) == ideal, tag);

      const auto closure = ideal.reflexive_closure();
      check("trivial_endomorphisms_principal",
            !(closure.is_reflexive && quotient(ideal, ideal) == unit) ||
                ideal.isomorphic_to(unit).iso,
            tag);

      const RelativeIdeal& refl = closure.closure;
      check("reflexive_e_stable",
            refl.isomorphic_to(unit).iso || sum(refl, endo) == refl, tag);

      const RelativeIdeal over_e = sum(ideal, endo).rebased(he);
      const RelativeIdeal e_reflexive = over_e.reflexive_closure().closure;
      check("e_reflexive_descends",
            e_reflexive.rebased(sg).reflexive_closure().is_reflexive, tag);
    }
  } catch (const std::exception& e) {
    rec.equivalence_failures.push_back({"internal_error", e.what()});
  }
  return rec;
}

}  // namespace

void enumerate_by_genus(std::int64_t g_max, const std::function<void(const NumericalSemigroup&)>& visit) {
  if (g_max < 0 || g_max > 30) throw std::invalid_argument("genus bound must lie in [0, 30]");
  walk(NumericalSemigroup::from_generators({1}), g_max, visit);
}

std::vector<NumericalSemigroup> enumerate_by_genus(std::int64_t g_max) {
  std::vector<NumericalSemigroup> out;
  enumerate_by_genus(g_max, [&out](const NumericalSemigroup& sg) { out.push_back(sg); });
  return out;
}

RelativeIdeal random_ideal(const SemigroupPtr& sg, std::uint64_t seed, std::int64_t gen_count,
                           std::int64_t span) {
  if (gen_count < 1) throw std::invalid_argument("gen_count must be positive");
  if (span < 1) throw std::invalid_argument("span must be positive");
  SplitMix64 rng{seed ^ (fnv1a(sg->descriptor()) * 0x9e3779b97f4a7c15ull)};
  std::vector<std::int64_t> gens;
  gens.reserve(static_cast<std::size_t>(gen_count));
  for (std::int64_t i = 0; i < gen_count; ++i) {
    gens.push_back(static_cast<std::int64_t>(rng.next() % static_cast<std::uint64_t>(span)));
  }
  return RelativeIdeal::from_generators(sg, gens);
}

std::vector<CensusRecord> run_census(const CensusOptions& opt) {
  if (opt.ideals_per_semigroup < 0) throw std::invalid_argument("ideals_per_semigroup must be >= 0");
  if (opt.workers < 1) throw std::invalid_argument("workers must be >= 1");
  std::vector<SemigroupPtr> all;
  enumerate_by_genus(opt.g_max, [&all](const NumericalSemigroup& sg) { all.push_back(share(sg)); });

  std::vector<CensusRecord> records(all.size());
  if (opt.workers == 1) {
    for (std::size_t i = 0; i < all.size(); ++i) records[i] = build_record(all[i], opt);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= all.size()) break;
        records[i] = build_record(all[i], opt);
      }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(opt.workers), all.size());
    pool.reserve(n);
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(), [](const CensusRecord& a, const CensusRecord& b) {
    if (a.report.genus != b.report.genus) return a.report.genus < b.report.genus;
    return a.report.generators < b.report.generators;
  });
  return records;
}

SuiteReport summarize(const CensusOptions& opt, const std::vector<CensusRecord>& records) {
  SuiteReport out;
  out.options = opt;
  out.genus_counts.assign(static_cast<std::size_t>(opt.g_max + 1), 0);
  for (const CensusRecord& rec : records) {
    ++out.genus_counts[static_cast<std::size_t>(rec.report.genus)];
    if (!rec.semigroup->is_nat()) {
      ++out.semigroups_tested;
      out.ideals_tested += opt.ideals_per_semigroup;
    }
    out.checks_performed += rec.checks_performed;
    for (const CheckFailure& f : rec.equivalence_failures) {
      out.failures.push_back({rec.semigroup->descriptor(), f.check, f.detail});
    }
  }
  return out;
}

SuiteReport equivalence_suite(const CensusOptions& opt) {
  if (opt.g_max < 1) throw std::invalid_argument("equivalence suite needs g_max >= 1");
  return summarize(opt, run_census(opt));
}

}  // namespace nsg
