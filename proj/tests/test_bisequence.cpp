#include <doctest.h>

#include "diaghook/abacus.hpp"
#include "diaghook/bisequence.hpp"
#include "diaghook/diagonal_formula.hpp"
#include "oracles.hpp"

using namespace diaghook;

namespace {

template <class F>
void for_partitions_up_to(Int n_max, bool symmetric_only, F&& f) {
  for (Int n = 0; n <= n_max; ++n) for_each_partition(n, symmetric_only, f);
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalInconsistency;
}

const std::vector<Partition> kQuotient190{{6, 6, 2}, {3}, {2, 2}, {1, 1, 1}, {3, 3, 2, 2, 2, 2}};
const DeltaSet kCoreDelta{69, 59, 49, 39, 29, 27, 19, 17, 9, 7};

}  // namespace

TEST_CASE("Bisequence validation") {
  CHECK(Bisequence({2, 0}, {2, 0}).to_string() == "(2,0|2,0)");
  CHECK(Bisequence({2, 1}, {5, 4}).dual() == Bisequence({5, 4}, {2, 1}));
  CHECK(code_of([] { Bisequence({1}, {}); }) == ErrorCode::LengthMismatch);
  CHECK(code_of([] { Bisequence({0, 1}, {2, 1}); }) == ErrorCode::NotStrictlyDecreasing);
}

TEST_CASE("d_of") {
  CHECK(d_of({3, 2, 1}) == Bisequence({2, 0}, {2, 0}));
  CHECK(d_of({6, 6, 2}) == Bisequence({2, 1}, {5, 4}));
  CHECK(d_of({}).empty());
  for_partitions_up_to(20, false, [](const Partition& l) {
    REQUIRE(d_of(conjugate(l)) == d_of(l).dual());
    REQUIRE(d_of(l).is_symmetric() == (oracle::transpose(l) == l));
  });
}

TEST_CASE("d_quotient examples") {
  const auto q = d_quotient(Bisequence({2, 0}, {2, 0}), 3);
  REQUIRE(q.p() == 3);
  CHECK(q.entries[0] == QuotientEntry{{0}, {0}});
  CHECK(q.entries[1].empty());
  CHECK(q.entries[2] == QuotientEntry{{0}, {0}});

  const Partition l = from_core_and_quotient({}, kQuotient190, 5);
  CHECK(l.weight() == 190);
  const auto big = d_quotient(d_of(l), 5);
  CHECK(big.entries[0] == QuotientEntry{{2, 1}, {5, 4}});
  CHECK(big.entries[1] == QuotientEntry{{0}, {2}});
  CHECK(big.entries[2] == QuotientEntry{{1, 0}, {1, 0}});
  CHECK(big.entries[3] == QuotientEntry{{2}, {0}});
  CHECK(big.entries[4] == QuotientEntry{{5, 4}, {2, 1}});

  for (const auto& e : d_quotient(Bisequence{}, 7).entries) CHECK(e.empty());
  CHECK(code_of([] { d_quotient(Bisequence{}, 1); }) == ErrorCode::BadModulus);
}

TEST_CASE("d_unquotient") {
  CHECK(d_unquotient(d_quotient(Bisequence({2, 0}, {2, 0}), 3), 3) == Bisequence({2, 0}, {2, 0}));
  CHECK(d_unquotient(QuotientBisequence{std::vector<QuotientEntry>(4)}, 4).empty());
  QuotientBisequence bad{std::vector<QuotientEntry>(3)};
  bad.entries[0].legs = {0};
  CHECK(code_of([&] { d_unquotient(bad, 3); }) == ErrorCode::InconsistentQuotient);

  for (Int p : {3, 5, 7})
    for_partitions_up_to(30, false, [p](const Partition& l) {
      const Bisequence d = d_of(l);
      const auto q = d_quotient(d, p);
      REQUIRE(d_unquotient(q, p) == d);
      REQUIRE(d_quotient(d_unquotient(q, p), p) == q);
    });
}

TEST_CASE("residue_class") {
  const Bisequence d = d_of(symmetric_from_delta(kCoreDelta));
  CHECK(d.arms() == std::vector<Int>{34, 29, 24, 19, 14, 13, 9, 8, 4, 3});
  CHECK(residue_class(d, 5, 4).second == std::vector<Int>{34, 29, 24, 19, 14, 9, 4});
  CHECK(residue_class(d, 5, 3).second == std::vector<Int>{13, 8, 3});
  CHECK(residue_class(d, 5, 0).second.empty());
  CHECK(residue_class(d, 5, 0).first.empty());
  CHECK(code_of([&] { residue_class(d, 5, 5); }) == ErrorCode::BadResidue);
  CHECK(code_of([&] { residue_class(d, 5, -1); }) == ErrorCode::BadResidue);

  for_partitions_up_to(20, false, [](const Partition& l) {
    const Bisequence d = d_of(l);
    std::size_t legs = 0, arms = 0;
    for (Int g = 0; g < 4; ++g) {
      const auto [L, R] = residue_class(d, 4, g);
      for (Int a : L) REQUIRE(a % 4 == g);
      for (Int b : R) REQUIRE(b % 4 == g);
      legs += L.size();
      arms += R.size();
    }
    REQUIRE(legs == d.size());
    REQUIRE(arms == d.size());
  });
}

TEST_CASE("is_concentrated") {
  const Bisequence d = d_of({3, 2, 1});
  CHECK(is_concentrated(d, 3, {0, 2}));
  CHECK_FALSE(is_concentrated(d, 3, {1}));
  CHECK_FALSE(is_concentrated(Bisequence{}, 3, {0}));
  CHECK(is_concentrated(Bisequence{}, 3, {}));
}

TEST_CASE("is_gamma_packed") {
  const Bisequence d = d_of(symmetric_from_delta(kCoreDelta));
  CHECK(is_gamma_packed(d, 5, 4));
  CHECK(is_gamma_packed(d, 5, 3));
  CHECK(is_gamma_packed(d, 5, 0));
  CHECK(is_gamma_packed(Bisequence({7, 2}, {7, 2}), 5, 2));
  CHECK_FALSE(is_gamma_packed(Bisequence({7}, {7}), 5, 2));
  CHECK(code_of([] { is_gamma_packed(Bisequence({2, 1}, {5, 4}), 5, 0); }) == ErrorCode::NotSymmetricBisequence);
}

TEST_CASE("is_symmetric_p_core") {
  const Partition core = symmetric_from_delta(kCoreDelta);
  CHECK(core.weight() == 324);
  CHECK(is_symmetric_p_core(d_of(core), 5));
  CHECK(is_p_core(core, 5));
  CHECK(is_symmetric_p_core(Bisequence({0}, {0}), 5));
  CHECK_FALSE(is_symmetric_p_core(Bisequence({2, 0}, {2, 0}), 3));
  CHECK(code_of([] { is_symmetric_p_core(Bisequence({1}, {0}), 3); }) == ErrorCode::NotSymmetricBisequence);
}

TEST_CASE("symmetric p-cores: exclusion, packing and the criterion") {
  for (Int p : {3, 5, 7}) {
    for_partitions_up_to(40, true, [p](const Partition& l) {
      const Bisequence d = d_of(l);
      const bool direct = !oracle::has_hook_of_length(l, p);
      REQUIRE(is_symmetric_p_core(d, p) == direct);
      if (!direct) return;
      for (Int g = 0; g < p; ++g) {
        const bool nonempty = !residue_class(d, p, g).second.empty();
        if (!nonempty) continue;
        REQUIRE(residue_class(d, p, p - 1 - g).second.empty());
        REQUIRE(is_gamma_packed(d, p, g));
      }
    });
  }
}

TEST_CASE("quotient entries balance exactly when the core is empty") {
  for (Int p : {3, 5, 7}) {
    for_partitions_up_to(40, true, [p](const Partition& l) {
      const auto cq = core_and_quotient(l, p);
      const auto q = d_quotient(d_of(l), p);
      if (cq.core.empty()) {
        for (const auto& e : q.entries) REQUIRE(e.balanced());
        return;
      }
      const CoreCounts counts = core_counts(cq.core, p);
      for (Int g : counts.charged) {
        const auto& e = q.entries[static_cast<std::size_t>(g)];
        REQUIRE(static_cast<Int>(e.arms.size()) - static_cast<Int>(e.legs.size()) ==
                counts.d0[static_cast<std::size_t>(g)]);
      }
    });
  }
}
