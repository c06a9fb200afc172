#include <doctest.h>

#include <set>

#include "diaghook/partition.hpp"
#include "oracles.hpp"

using namespace diaghook;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

}  // namespace

TEST_CASE("new_partition validates instead of sorting") {
  CHECK(new_partition({}).empty());
  CHECK(new_partition({}).weight() == 0);
  const Partition p = new_partition({6, 6, 2});
  CHECK(p.weight() == 14);
  CHECK(p.length() == 3);
  CHECK(code_of([] { new_partition({2, 3}); }) == ErrorCode::NonMonotonic);
  CHECK(code_of([] { new_partition({3, 0}); }) == ErrorCode::NonPositivePart);
  CHECK(code_of([] { new_partition({-1}); }) == ErrorCode::NonPositivePart);
}

TEST_CASE("conjugate") {
  CHECK(conjugate({6, 6, 2}) == Partition{3, 3, 2, 2, 2, 2});
  CHECK(conjugate({3, 2, 1}) == Partition{3, 2, 1});
  CHECK(conjugate({}) == Partition{});

  for (Int n = 0; n <= 30; ++n)
    for_each_partition(n, false, [n](const Partition& p) {
      REQUIRE(conjugate(conjugate(p)) == p);
      if (n <= 15) REQUIRE(conjugate(p) == oracle::transpose(p));
    });
}

TEST_CASE("hook_at") {
  CHECK(hook_at({3, 2, 1}, 1, 1) == HookData{1, 1, 2, 2, 5});
  CHECK(hook_at({3, 2, 1}, 2, 2) == HookData{2, 2, 0, 0, 1});
  CHECK(code_of([] { hook_at({1}, 1, 2); }) == ErrorCode::CellOutOfDiagram);
  CHECK(code_of([] { hook_at({}, 1, 1); }) == ErrorCode::CellOutOfDiagram);
  CHECK(code_of([] { hook_at({2, 1}, 0, 1); }) == ErrorCode::CellOutOfDiagram);

  for (Int n = 0; n <= 12; ++n)
    for_each_partition(n, false, [](const Partition& p) {
      const auto cs = oracle::cells(p);
      for (const auto& [i, j] : cs) {
        const auto h = hook_at(p, i, j);
        const auto ref = oracle::hook(cs, i, j);
        REQUIRE(h.arm == ref.arm);
        REQUIRE(h.leg == ref.leg);
        REQUIRE(h.length == h.arm + h.leg + 1);
      }
    });
}

TEST_CASE("is_symmetric") {
  CHECK(is_symmetric({3, 2, 1}));
  CHECK_FALSE(is_symmetric({6, 6, 2}));
  CHECK(is_symmetric({}));
}

TEST_CASE("diagonal_hooks_oracle") {
  const auto d = diagonal_hooks_oracle({3, 2, 1});
  REQUIRE(d.size() == 2);
  CHECK((d[0].leg == 2 && d[0].arm == 2 && d[0].length == 5));
  CHECK((d[1].leg == 0 && d[1].arm == 0 && d[1].length == 1));
  CHECK(diagonal_hooks_oracle({1}) == std::vector<HookData>{{1, 1, 0, 0, 1}});
  CHECK(diagonal_hooks_oracle({4, 1, 1, 1}) == std::vector<HookData>{{1, 1, 3, 3, 7}});
  CHECK(diagonal_hooks_oracle({}).empty());

  SUBCASE("legs and arms strictly decrease") {
    for (Int n = 0; n <= 30; ++n)
      for_each_partition(n, false, [](const Partition& p) {
        const auto d = diagonal_hooks_oracle(p);
        REQUIRE(d.size() == p.durfee_size());
        for (std::size_t i = 0; i + 1 < d.size(); ++i) {
          REQUIRE(d[i].arm > d[i + 1].arm);
          REQUIRE(d[i].leg > d[i + 1].leg);
        }
      });
  }

  SUBCASE("diagonal hooks tile a symmetric diagram") {
    for (Int n = 0; n <= 40; ++n)
      for_each_partition(n, true, [n](const Partition& p) {
        const DeltaSet delta = delta_oracle(p);
        REQUIRE(delta.sum() == n);
        const auto ref = oracle::diagonal(p);
        REQUIRE(ref.size() == delta.size());
        for (std::size_t i = 0; i < ref.size(); ++i) REQUIRE(delta.lengths()[i] == ref[i].first + ref[i].second + 1);
      });
  }
}

TEST_CASE("partition_from_delta") {
  CHECK(partition_from_delta(std::vector<LegArm>{{2, 2}, {0, 0}}) == Partition{3, 2, 1});
  CHECK(partition_from_delta(std::vector<LegArm>{{3, 3}}) == Partition{4, 1, 1, 1});
  CHECK(partition_from_delta(std::vector<LegArm>{}) == Partition{});
  CHECK(partition_from_delta(std::vector<LegArm>{{1, 4}}) == Partition{5, 1});
  CHECK(code_of([] { partition_from_delta(std::vector<LegArm>{{0, 2}, {1, 1}}); }) ==
        ErrorCode::NotStrictlyDecreasing);
  CHECK(code_of([] {
          const std::vector<Int> legs{2, 1}, arms{3};
          partition_from_delta(legs, arms);
        }) == ErrorCode::LengthMismatch);

  SUBCASE("inverts the diagonal reading") {
    for (Int n = 0; n <= 40; ++n)
      for_each_partition(n, true, [](const Partition& p) {
        std::vector<LegArm> pairs;
        for (const auto& h : diagonal_hooks_oracle(p)) pairs.push_back({h.leg, h.arm});
        REQUIRE(partition_from_delta(pairs) == p);
        REQUIRE(symmetric_from_delta(delta_oracle(p)) == p);
      });
    for (Int n = 0; n <= 20; ++n)
      for_each_partition(n, false, [](const Partition& p) {
        std::vector<LegArm> pairs;
        for (const auto& h : diagonal_hooks_oracle(p)) pairs.push_back({h.leg, h.arm});
        REQUIRE(partition_from_delta(pairs) == p);
      });
  }
}

TEST_CASE("DeltaSet validation") {
  CHECK(DeltaSet{5, 1}.sum() == 6);
  CHECK(code_of([] { DeltaSet{3, 5}; }) == ErrorCode::InvalidDeltaSet);
  CHECK(code_of([] { DeltaSet{4}; }) == ErrorCode::InvalidDeltaSet);
  CHECK(code_of([] { DeltaSet{3, 3}; }) == ErrorCode::InvalidDeltaSet);
}

TEST_CASE("enumerate_partitions") {
  CHECK(enumerate_partitions(4).size() == 5);
  CHECK(enumerate_partitions(4, true) == std::vector<Partition>{{2, 2}});
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(0, true) == std::vector<Partition>{Partition{}});
  CHECK(enumerate_partitions(-1).empty());
  CHECK(enumerate_partitions(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});

  const auto counts = oracle::partition_counts(30);
  const auto odd = oracle::distinct_odd_counts(40);
  for (Int n = 0; n <= 30; ++n) {
    const auto all = enumerate_partitions(n);
    REQUIRE(static_cast<Int>(all.size()) == counts[static_cast<std::size_t>(n)]);
    REQUIRE(std::set<Partition>(all.begin(), all.end()).size() == all.size());
    for (const auto& p : all) REQUIRE(p.weight() == n);
    REQUIRE(enumerate_partitions(n) == all);
  }
  for (Int n = 0; n <= 40; ++n)
    REQUIRE(static_cast<Int>(enumerate_partitions(n, true).size()) == odd[static_cast<std::size_t>(n)]);
}
