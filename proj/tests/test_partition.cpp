#include <doctest.h>

#include "jfactor/errors.hpp"
#include "jfactor/partition.hpp"

using namespace jfactor;

TEST_CASE("base-p partitions read off the digits") {
  const Partition p = Partition::from_base(15, 2);
  CHECK(p.parts() == std::vector<std::int64_t>{8, 4, 2, 1});
  CHECK(p.n() == 15);
  CHECK(p.tau() == 4);
  CHECK(p.suffix_sums() == std::vector<std::int64_t>{7, 3, 1});

  SUBCASE("zero digits are dropped") {
    CHECK(Partition::from_base(10, 2).parts() == std::vector<std::int64_t>{8, 2});
  }
  SUBCASE("a single nonzero digit gives tau = 1") {
    const Partition q = Partition::from_base(9, 3);
    CHECK(q.parts() == std::vector<std::int64_t>{9});
    CHECK(q.tau() == 1);
  }
  SUBCASE("rejects tiny inputs") {
    CHECK_THROWS_AS(Partition::from_base(1, 2), PartitionError);
    CHECK_THROWS_AS(Partition::from_base(10, 1), PartitionError);
  }
}

TEST_CASE("from_parts validates dominance in the given order") {
  const Partition p = Partition::from_parts({3, 2, 1});
  CHECK(p.n() == 6);
  CHECK(p.suffix_sums() == std::vector<std::int64_t>{3, 1});

  CHECK(Partition::from_parts({8, 4, 2, 1}).n() == 15);

  SUBCASE("violations name the level") {
    try {
      Partition::from_parts({2, 3});
      FAIL("expected DominanceViolation");
    } catch (const DominanceViolation& ex) {
      CHECK(ex.level == 1);
      CHECK(ex.part == 2);
      CHECK(ex.suffix_sum == 3);
    }
  }
  SUBCASE("nonpositive parts are rejected") {
    CHECK_THROWS_AS(Partition::from_parts({3, 0}), NonPositivePart);
    CHECK_THROWS_AS(Partition::from_parts({-1}), NonPositivePart);
    CHECK_THROWS_AS(Partition::from_parts({}), PartitionError);
  }
}

TEST_CASE("m accessor covers the full index range") {
  const Partition p = Partition::from_parts({8, 4, 2, 1});
  CHECK(p.m(0) == 15);
  CHECK(p.m(1) == 7);
  CHECK(p.m(2) == 3);
  CHECK(p.m(3) == 1);
  CHECK(p.m(4) == 0);
  CHECK(p.part(1) == 8);
  CHECK(p.part(4) == 1);
}

TEST_CASE("every base-p partition round-trips through from_parts") {
  for (const std::int64_t base : {2, 3, 5, 10}) {
    for (std::int64_t n = 2; n <= 10000; ++n) {
      const Partition p = Partition::from_base(n, base);
      std::int64_t sum = 0;
      for (const std::int64_t part : p.parts()) sum += part;
      REQUIRE(sum == n);
      // from_parts re-validates dominance on the same order.
      REQUIRE_NOTHROW(Partition::from_parts(p.parts()));
    }
  }
}

TEST_CASE("textual form round-trips") {
  const Partition p = Partition::from_text("n=15;parts=8,4,2,1");
  CHECK(p.parts() == std::vector<std::int64_t>{8, 4, 2, 1});
  CHECK(p.to_text() == "n=15;parts=8,4,2,1");
  CHECK(Partition::from_text(p.to_text()) == p);
  CHECK(Partition::from_text("parts=3,2,1").n() == 6);

  CHECK_THROWS_AS(Partition::from_text("n=5;parts=2,1"), PartitionError);
  CHECK_THROWS_AS(Partition::from_text("parts=two"), PartitionError);
  CHECK_THROWS_AS(Partition::from_text("nonsense"), PartitionError);
  CHECK_THROWS_AS(Partition::from_text("n=6"), PartitionError);
}
