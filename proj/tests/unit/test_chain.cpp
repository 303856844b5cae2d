#include <doctest.h>

#include <stdexcept>

#include "nsg/chain.hpp"

using namespace nsg;

namespace {

std::vector<std::string> chain_descriptors(const ChainReport& chain) {
  std::vector<std::string> out;
  for (const ChainStep& s : chain.steps) out.push_back(s.semigroup->descriptor());
  return out;
}

}  // namespace

TEST_CASE("end_chain walks to the normalization") {
  const ChainReport chain = end_chain(make_semigroup({4, 6, 7}), 10);
  CHECK(chain_descriptors(chain) == std::vector<std::string>{"4,6,7", "4,6,7,9", "2,3", "1"});
  CHECK(chain.complete);
  CHECK(chain.terminates_at_index == 3);
  CHECK(chain.first_finite_type_index == 2);

  const ChainReport cusp = end_chain(make_semigroup({2, 3}), 5);
  CHECK(chain_descriptors(cusp) == std::vector<std::string>{"2,3", "1"});
  CHECK(cusp.terminates_at_index == 1);

  const ChainReport nat = end_chain(make_semigroup({1}), 3);
  CHECK(chain_descriptors(nat) == std::vector<std::string>{"1"});
  CHECK(nat.complete);
  CHECK(nat.terminates_at_index == 0);
  CHECK(nat.first_finite_type_index == 0);
}

TEST_CASE("end_chain respects max_steps and flags incomplete runs") {
  const ChainReport partial = end_chain(make_semigroup({4, 6, 7}), 1);
  CHECK(partial.steps.size() == 2);
  CHECK(!partial.complete);
  CHECK(partial.terminates_at_index == -1);
  CHECK_THROWS_AS(end_chain(make_semigroup({4, 6, 7}), 0), std::invalid_argument);
}

TEST_CASE("genus strictly decreases along the chain") {
  for (auto gens : {std::vector<std::int64_t>{3, 7, 8}, {8, 10, 11, 12}, {6, 9, 20}, {5, 7, 9, 13}}) {
    const auto sg = make_semigroup(gens);
    const ChainReport chain = end_chain(sg, sg->genus() + 1);
    CHECK(chain.complete);
    CHECK(chain.terminates_at_index <= sg->genus());
    for (std::size_t i = 1; i < chain.steps.size(); ++i) {
      CHECK(chain.steps[i].semigroup->genus() < chain.steps[i - 1].semigroup->genus());
    }
  }
}

TEST_CASE("stable dimension bounds") {
  const auto b1 = stable_dim_bounds(make_semigroup({4, 6, 7}));
  CHECK(b1.first == 1);
  CHECK(b1.second == 1);

  const auto b2 = stable_dim_bounds(make_semigroup({2, 3}));
  CHECK(b2.first == 0);
  CHECK(b2.second == 0);

  const auto b3 = stable_dim_bounds(make_semigroup({8, 10, 11, 12}));
  CHECK(b3.first == 2);
  CHECK(b3.second == 2);

  // symmetric but not a complete intersection: upper only
  const auto b4 = stable_dim_bounds(make_semigroup({5, 6, 7, 8}));
  CHECK(!b4.first.has_value());
  CHECK(b4.second == 1);

  // neither hypothesis: no bounds
  const auto b5 = stable_dim_bounds(make_semigroup({3, 7, 8}));
  CHECK(!b5.first.has_value());
  CHECK(!b5.second.has_value());

  CHECK_THROWS_AS(stable_dim_bounds(make_semigroup({1})), std::invalid_argument);
}

TEST_CASE("dim family instantiation") {
  CHECK(dim_family(1).min_generators() == std::vector<std::int64_t>{4, 6, 7});
  CHECK(dim_family(2).min_generators() == std::vector<std::int64_t>{8, 10, 11, 12});
  CHECK(dim_family(3).min_generators() == std::vector<std::int64_t>{16, 18, 19, 20, 24});
  for (std::int64_t n = 1; n <= 8; ++n) CHECK(dim_family(n).edim() == n + 2);
  CHECK_THROWS_AS(dim_family(0), std::invalid_argument);
  CHECK_THROWS_AS(dim_family(11), std::invalid_argument);
}

TEST_CASE("family verification clauses") {
  for (std::int64_t n : {std::int64_t(1), std::int64_t(2), std::int64_t(5)}) {
    const FamilyReport fam = verify_family(n);
    CHECK(fam.all_pass);
    CHECK(fam.clauses.size() == 4);
    for (const ClauseResult& c : fam.clauses) CHECK(c.pass);
    CHECK(fam.chain.dim_lower == n);
    CHECK(fam.chain.dim_upper == n);
  }
}

TEST_CASE("syzygy finite-type verdict") {
  CHECK(ocm_finite_type_verdict(make_semigroup({3, 7, 11})) == OcmVerdict::Finite);
  CHECK(ocm_finite_type_verdict(make_semigroup({3, 7, 8})) == OcmVerdict::Finite);
  // E = <4,5,6,7> has multiplicity 4, so CM(E) is not of finite type, and the
  // ring is Gorenstein, hence almost Gorenstein: the corollary applies
  CHECK(ocm_finite_type_verdict(make_semigroup({4, 5, 6})) == OcmVerdict::Infinite);
  // not almost Gorenstein and CM(E) not finite: nothing can be concluded
  CHECK(ocm_finite_type_verdict(make_semigroup({4, 5, 11})) == OcmVerdict::Unknown);
  // E = N for maximal embedding dimension next to the normalization
  CHECK(ocm_finite_type_verdict(make_semigroup({5, 6, 7, 8, 9})) == OcmVerdict::Finite);
  CHECK_THROWS_AS(ocm_finite_type_verdict(make_semigroup({1})), std::invalid_argument);
}

TEST_CASE("first finite-type index shifts along the chain") {
  for (auto gens : {std::vector<std::int64_t>{8, 10, 11, 12}, {3, 7, 8}, {6, 9, 20}}) {
    const auto sg = make_semigroup(gens);
    const ChainReport chain = end_chain(sg, sg->genus() + 1);
    for (std::size_t j = 1; j < chain.steps.size() &&
                            chain.steps[j].index <= chain.first_finite_type_index; ++j) {
      const auto sub = end_chain(chain.steps[j].semigroup, chain.steps[j].semigroup->genus() + 1);
      CHECK(sub.first_finite_type_index == chain.first_finite_type_index - chain.steps[j].index);
    }
  }
}

TEST_CASE("analyze aggregates one semigroup's full picture") {
  const AnalyzeResult a = analyze(make_semigroup({3, 7, 11}));
  CHECK(a.e_generators == std::vector<std::int64_t>{3, 4});
  CHECK(a.pseudo_frobenius == std::vector<std::int64_t>{4, 8});
  CHECK(a.k_members == std::vector<std::int64_t>{0, 3, 4, 6, 7});
  CHECK(a.k_conductor == 9);
  CHECK(a.verdict == OcmVerdict::Finite);
  CHECK(a.chain.steps.size() == 4);

  const AnalyzeResult nat = analyze(make_semigroup({1}));
  CHECK(nat.report.genus == 0);
  CHECK(nat.chain.steps.size() == 1);
}
