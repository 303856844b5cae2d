#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "nsg/semigroup.hpp"
#include "support/oracles.hpp"

using nsg::NumericalSemigroup;

namespace {

std::vector<std::int64_t> vec(std::initializer_list<std::int64_t> xs) { return xs; }

}  // namespace

TEST_CASE("from_generators canonicalizes and computes exact invariants") {
  const auto sg = NumericalSemigroup::from_generators({3, 7, 11});
  CHECK(sg.min_generators() == vec({3, 7, 11}));
  CHECK(sg.frobenius() == 8);

  // cross-check against the brute-force closure of {3,7,11} up to 30
  const auto table = oracle::semigroup_closure({3, 7, 11}, 30);
  for (std::int64_t x = 0; x <= 30; ++x) CHECK(sg.contains(x) == table[static_cast<std::size_t>(x)]);

  const auto nat = NumericalSemigroup::from_generators({1});
  CHECK(nat.is_nat());
  CHECK(nat.frobenius() == -1);
  CHECK(nat.min_generators() == vec({1}));

  // 8 = 4 + 4 drops out of the generating set
  const auto sg2 = NumericalSemigroup::from_generators({4, 6, 8, 7});
  CHECK(sg2.min_generators() == vec({4, 6, 7}));
}

TEST_CASE("from_generators rejects bad input") {
  CHECK_THROWS_AS(NumericalSemigroup::from_generators(std::initializer_list<std::int64_t>{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({-2, 3}), std::invalid_argument);
}

TEST_CASE("from_generators is idempotent on minimal systems") {
  for (auto gens : {vec({3, 7, 11}), vec({4, 6, 7}), vec({2, 3}), vec({5, 7, 9, 13})}) {
    const auto sg = NumericalSemigroup::from_generators(gens);
    const auto again = NumericalSemigroup::from_generators(sg.min_generators());
    CHECK(again == sg);
    CHECK(again.frobenius() == sg.frobenius());
  }
}

TEST_CASE("contains") {
  const auto sg = NumericalSemigroup::from_generators({3, 7, 11});
  CHECK(!sg.contains(8));
  CHECK(sg.contains(10));
  CHECK(sg.contains(0));
  CHECK(!sg.contains(-3));
  CHECK(sg.contains(9));  // above F
}

TEST_CASE("apery sets") {
  const auto sg = NumericalSemigroup::from_generators({3, 7, 11});
  CHECK(sg.apery_set(3) == vec({0, 7, 11}));
  const auto nat = NumericalSemigroup::from_generators({1});
  CHECK(nat.apery_set(1) == vec({0}));
  const auto cusp = NumericalSemigroup::from_generators({2, 3});
  CHECK(cusp.apery_set(2) == vec({0, 3}));
  CHECK_THROWS_AS(sg.apery_set(4), std::invalid_argument);
  CHECK_THROWS_AS(sg.apery_set(0), std::invalid_argument);
}

TEST_CASE("gaps and genus") {
  const auto sg = NumericalSemigroup::from_generators({3, 7, 11});
  CHECK(sg.gaps() == vec({1, 2, 4, 5, 8}));
  CHECK(sg.genus() == 5);
  const auto sg2 = NumericalSemigroup::from_generators({3, 7, 8});
  CHECK(sg2.gaps() == vec({1, 2, 4, 5}));
  CHECK(sg2.genus() == 4);
  const auto nat = NumericalSemigroup::from_generators({1});
  CHECK(nat.gaps().empty());
  CHECK(nat.genus() == 0);
}

TEST_CASE("pseudo-Frobenius numbers and type") {
  CHECK(NumericalSemigroup::from_generators({3, 7, 11}).pseudo_frobenius() == vec({4, 8}));
  CHECK(NumericalSemigroup::from_generators({3, 7, 8}).pseudo_frobenius() == vec({4, 5}));
  CHECK(NumericalSemigroup::from_generators({3, 4, 5}).pseudo_frobenius() == vec({1, 2}));
  CHECK(NumericalSemigroup::from_generators({3, 7, 11}).type() == 2);
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({1}).pseudo_frobenius(), std::invalid_argument);
}

TEST_CASE("embedding data") {
  CHECK(NumericalSemigroup::from_generators({3, 7, 11}).embedding_data() == std::pair<std::int64_t, std::int64_t>{3, 3});
  CHECK(NumericalSemigroup::from_generators({3, 7, 8}).embedding_data() == std::pair<std::int64_t, std::int64_t>{3, 3});
  CHECK(NumericalSemigroup::from_generators({4, 6, 7}).embedding_data() == std::pair<std::int64_t, std::int64_t>{4, 3});
}

TEST_CASE("symmetry: pointwise test agrees with the genus identity") {
  CHECK(NumericalSemigroup::from_generators({2, 3}).is_symmetric());
  CHECK(!NumericalSemigroup::from_generators({3, 7, 11}).is_symmetric());
  for (auto gens : {vec({4, 6, 7, 9}), vec({2, 3}), vec({3, 7, 11}), vec({5, 6, 7, 8}), vec({4, 6, 7})}) {
    const auto sg = NumericalSemigroup::from_generators(gens);
    CHECK(sg.is_symmetric() == (2 * sg.genus() == sg.frobenius() + 1));
  }
  CHECK_THROWS_AS(NumericalSemigroup::from_generators({1}).is_symmetric(), std::invalid_argument);
}

TEST_CASE("semigroup invariants hold on a spread of examples") {
  for (auto gens : {vec({3, 7, 11}), vec({3, 7, 8}), vec({4, 6, 7}), vec({5, 7, 9, 13}),
                    vec({2, 17}), vec({6, 9, 20}), vec({8, 10, 11, 12})}) {
    const auto sg = NumericalSemigroup::from_generators(gens);
    const std::int64_t m = sg.multiplicity();
    const std::int64_t frob = sg.frobenius();

    // Apery route to the Frobenius number
    const auto apery = sg.apery_set(m);
    CHECK(*std::max_element(apery.begin(), apery.end()) - m == frob);

    // genus >= (F+1)/2, equality iff symmetric
    CHECK(2 * sg.genus() >= frob + 1);
    CHECK((2 * sg.genus() == frob + 1) == sg.is_symmetric());

    // classical type bound for singular rings
    CHECK(sg.type() <= m - 1);
    CHECK(sg.edim() <= m);

    // membership closure over [0, 2(F+1))
    for (std::int64_t x = 0; x < 2 * (frob + 1); ++x) {
      if (!sg.contains(x)) continue;
      for (std::int64_t y = x; x + y < 2 * (frob + 1); ++y) {
        if (sg.contains(y)) CHECK(sg.contains(x + y));
      }
    }

    // every minimal generator really is one: dropping it changes the semigroup
    for (std::int64_t g : sg.min_generators()) {
      std::vector<std::int64_t> rest;
      for (std::int64_t h : sg.min_generators()) {
        if (h != g) rest.push_back(h);
      }
      if (rest.empty()) continue;
      std::int64_t d = 0;
      for (std::int64_t h : rest) d = std::gcd(d, h);
      if (d == 1) CHECK(!(NumericalSemigroup::from_generators(rest) == sg));
    }
  }
}

TEST_CASE("member_window covers negatives, table range, and the tail") {
  const auto sg = NumericalSemigroup::from_generators({3, 7, 8});
  const auto window = sg.member_window(-2, 12);
  for (std::int64_t i = 0; i < 12; ++i) CHECK(window.get(static_cast<std::size_t>(i)) == sg.contains(-2 + i));
}

TEST_CASE("descriptor") {
  CHECK(NumericalSemigroup::from_generators({7, 3, 11}).descriptor() == "3,7,11");
  CHECK(NumericalSemigroup::from_generators({1}).descriptor() == "1");
}
