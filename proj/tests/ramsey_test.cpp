#include "paley/ramsey.hpp"

#include <gtest/gtest.h>

using namespace paley;

TEST(Ramsey, EnumerateQ) {
  EXPECT_EQ(enumerate_q(2, 20), (std::vector<std::int64_t>{3, 7, 11, 19}));
  const auto q4 = enumerate_q(4, 200);
  EXPECT_NE(std::find(q4.begin(), q4.end(), 125), q4.end());
  const auto q6 = enumerate_q(6, 400);
  EXPECT_NE(std::find(q6.begin(), q6.end(), 343), q6.end());
  for (int k : {2, 4, 6, 8, 10})
    for (auto q : enumerate_q(k, 3000)) EXPECT_TRUE(valid_modulus(q, k)) << q;
  // a direct scan agrees with the sieve
  std::vector<std::int64_t> scan;
  for (std::int64_t q = 2; q < 3000; ++q)
    if (valid_modulus(q, 6)) scan.push_back(q);
  EXPECT_EQ(enumerate_q(6, 3000), scan);
}

TEST(Ramsey, SmallSearches) {
  const auto r = search_zero(2, 4, 100, 1);
  EXPECT_EQ(r.witnesses, (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(r.bound, 8);
  const auto r3 = search_zero(2, 3, 100, 1);
  EXPECT_EQ(r3.bound, 4);
  const auto empty = search_zero(4, 3, 5, 1);
  EXPECT_TRUE(empty.witnesses.empty());
  EXPECT_FALSE(empty.bound.has_value());
}

TEST(Ramsey, ThreadCountDoesNotChangeResults) {
  const auto a = search_zero(6, 4, 2000, 1);
  const auto b = search_zero(6, 4, 2000, 3);
  EXPECT_EQ(a.witnesses, b.witnesses);
  EXPECT_EQ(a.bound, b.bound);
}

TEST(Ramsey, MonotoneInQmax) {
  std::optional<std::int64_t> last;
  for (std::int64_t qmax : {50, 200, 500, 1000}) {
    const auto r = search_zero(4, 4, qmax, 1);
    if (last) EXPECT_GE(r.bound.value_or(0), *last);
    last = r.bound.value_or(0);
  }
}

TEST(Ramsey, WitnessesReverify) {
  for (auto [k, m] : {std::pair{2, 4}, {4, 4}, {4, 3}, {6, 3}, {8, 3}}) {
    const auto r = search_zero(k, m, 400, 1);
    ASSERT_FALSE(r.witnesses.empty());
    const auto rep = verify_witnesses(r, 50);
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << item.name << " " << item.detail;
  }
}

TEST(Ramsey, IndependentOfModulus) {
  // q = 125 with every tested primitive modulus, q = 169 and q = 343 likewise
  for (auto [p, r, k, m] : {std::tuple{5, 3, 4, 4}, {13, 2, 8, 3}, {7, 3, 6, 4}, {3, 5, 2, 3}}) {
    const auto base = build_field(p, r);
    const bool expect = km_vanishes(base, k, m);
    for (const auto& mod : primitive_moduli(p, r, 6)) {
      const FieldTable alt(mod, p);
      EXPECT_EQ(km_vanishes(alt, k, m), expect) << alt.modulus_string();
    }
  }
}

TEST(Ramsey, CompositeBounds) {
  const CompositeSeed four{2, 126, 8};
  EXPECT_EQ(composite_bound(2, four), 126);
  EXPECT_EQ(composite_bound(3, four), 876);
  const CompositeSeed three{3, 44, 4};
  EXPECT_EQ(composite_bound(4, three), 130);
  const CompositeSeed classical{2, 14, 4};
  EXPECT_EQ(composite_bound(3, classical), 40);
  EXPECT_THROW(composite_bound(1, four), PreconditionError);
  EXPECT_THROW(composite_bound(3, CompositeSeed{2, 0, 8}), PreconditionError);
  // monotone in the seed
  EXPECT_LT(composite_bound(5, CompositeSeed{2, 120, 8}), composite_bound(5, four));
}
