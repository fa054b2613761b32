#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qgr/combinatorics.hpp"
#include "qgr/errors.hpp"

using namespace qgr;

namespace {
Partition P(std::vector<int> parts) { return Partition{std::move(parts)}; }
}  // namespace

TEST_CASE("params validate k range and expose derived quantities") {
  CHECK_THROWS_AS(GrassmannianParams(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(GrassmannianParams(4, 4), std::invalid_argument);
  const GrassmannianParams p(2, 5);
  CHECK(p.dimension() == 6);
  CHECK(p.rank() == 10);
  CHECK(p.fano_index() == 5);
  CHECK(p.dual() == GrassmannianParams(3, 5));
}

TEST_CASE("binomial matches Pascal's triangle and saturates") {
  for (int n = 0; n <= 40; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::pascal(n, k));
  CHECK(binomial(200, 100) == std::numeric_limits<std::uint64_t>::max());
}

TEST_CASE("enumerate_partitions on small boxes") {
  const auto gr24 = enumerate_partitions({2, 4});
  const std::vector<Partition> expected = {P({0, 0}), P({1, 0}), P({2, 0}), P({1, 1}), P({2, 1}), P({2, 2})};
  CHECK(gr24 == expected);

  CHECK(enumerate_partitions({1, 2}) == std::vector<Partition>{P({0}), P({1})});
  CHECK(enumerate_partitions({3, 6}).size() == oracle::all_box_partitions(3, 3).size());
  CHECK(enumerate_partitions({3, 6}).size() == 20);
}

TEST_CASE("enumerate_partitions is graded, descending within a grade, complete") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      const GrassmannianParams p(k, n);
      const auto list = enumerate_partitions(p);
      REQUIRE(list.size() == oracle::pascal(n, k));
      std::set<Partition> seen(list.begin(), list.end());
      CHECK(seen.size() == list.size());
      for (const auto& lam : list) CHECK(fits_box(lam, p));
      for (std::size_t i = 1; i < list.size(); ++i) {
        const int wa = list[i - 1].weight(), wb = list[i].weight();
        CHECK((wa < wb || (wa == wb && list[i - 1] > list[i])));
      }
    }
}

TEST_CASE("enumerate_partitions honours the rank cap") {
  CHECK_THROWS_AS(enumerate_partitions({5, 10}, 251), InstanceTooLarge);
  CHECK(enumerate_partitions({5, 10}, 252).size() == 252);
  try {
    enumerate_partitions({10, 20});
    FAIL("expected InstanceTooLarge");
  } catch (const InstanceTooLarge& e) {
    CHECK(e.rank() == 184756);
    CHECK(e.cap() == kDefaultRankCap);
  }
}

TEST_CASE("covers examples") {
  CHECK(covers(P({1, 0}), {2, 4}) == std::vector<Partition>{P({2, 0}), P({1, 1})});
  CHECK(covers(P({2, 2}), {2, 4}).empty());
  auto c = covers(P({2, 1, 0}), {3, 6});
  std::sort(c.begin(), c.end());
  CHECK(c == std::vector<Partition>{P({2, 1, 1}), P({2, 2, 0}), P({3, 1, 0})});
}

TEST_CASE("covers agree with brute-force containment filter") {
  for (int n = 2; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      const GrassmannianParams p(k, n);
      for (const auto& lam : enumerate_partitions(p)) {
        auto fast = covers(lam, p);
        auto slow = oracle::brute_covers(lam, k, n - k);
        std::sort(fast.begin(), fast.end());
        std::sort(slow.begin(), slow.end());
        CHECK(fast == slow);
      }
    }
}

TEST_CASE("quantum_target examples and existence rule") {
  CHECK(quantum_target(P({2, 1}), {2, 4}) == P({0, 0}));
  CHECK_FALSE(quantum_target(P({1, 1}), {2, 4}).has_value());
  CHECK(quantum_target(P({3, 3}), {2, 5}) == P({2, 0}));
  CHECK(quantum_target(P({1}), {1, 2}) == P({0}));

  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n; ++k) {
      const GrassmannianParams p(k, n);
      for (const auto& lam : enumerate_partitions(p)) {
        const auto star = quantum_target(lam, p);
        const bool expected = lam[0] == n - k && lam[k - 1] > 0;
        REQUIRE(star.has_value() == expected);
        if (star) {
          CHECK(star->length() == static_cast<std::size_t>(k));
          CHECK(fits_box(*star, p));
          CHECK(star->weight() == lam.weight() - (n - 1));
        }
      }
    }
}

TEST_CASE("dual_partition examples") {
  CHECK(dual_partition(P({0, 0}), {2, 4}) == P({0, 0}));
  CHECK(dual_partition(P({2, 0}), {2, 4}) == P({1, 1}));
  CHECK(dual_partition(P({3, 1}), {2, 5}) == P({2, 1, 1}));
}

TEST_CASE("dual_partition is an involutive bijection that respects covers and quantum targets") {
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k < n; ++k) {
      const GrassmannianParams p(k, n);
      const GrassmannianParams q = p.dual();
      const auto lams = enumerate_partitions(p);
      std::set<Partition> image;
      for (const auto& lam : lams) {
        const auto d = dual_partition(lam, p);
        REQUIRE(fits_box(d, q));
        CHECK(dual_partition(d, q) == lam);
        image.insert(d);

        std::set<Partition> mapped;
        for (const auto& mu : covers(lam, p)) mapped.insert(dual_partition(mu, p));
        const auto dual_covers = covers(d, q);
        CHECK(mapped == std::set<Partition>(dual_covers.begin(), dual_covers.end()));

        const auto star = quantum_target(lam, p);
        const auto dstar = quantum_target(d, q);
        REQUIRE(star.has_value() == dstar.has_value());
        if (star) CHECK(dual_partition(*star, p) == *dstar);
      }
      CHECK(image.size() == lams.size());
    }
}
