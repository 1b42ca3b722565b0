#include "paley/hypergeometric.hpp"
#include "paley/identities.hpp"
#include "paley/orbits.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace paley;

namespace {

std::vector<FieldElem> sample_lambdas(const FieldTable& f) {
  return {f.one(), f.omega(), f.power(5), f.minus_one()};
}

}  // namespace

TEST(Hypergeometric, DefinitionMatchesCharacterSumAtSeven) {
  const auto f = build_field(7, 1);
  const CharGroup G(f);
  const CharIndex c2 = chi_k(f, 2);
  JacobiCache cache(f);
  for (auto lambda : sample_lambdas(f)) {
    F3F2Table::for_each_tuple(2, [&](const Tuple5& t) {
      const auto P = [&](int i) { return G.pow(c2, t[static_cast<std::size_t>(i)]); };
      EXPECT_EQ(f3f2_definitional(f, P(0), P(1), P(2), P(3), P(4), lambda, &cache),
                f3f2_charsum(f, P(0), P(1), P(2), P(3), P(4), lambda))
          << "tuple " << to_string(t);
    });
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          EXPECT_EQ(f2f1_definitional(f, G.pow(c2, a), G.pow(c2, b), G.pow(c2, c), lambda, &cache),
                    f2f1_charsum(f, G.pow(c2, a), G.pow(c2, b), G.pow(c2, c), lambda));
  }
}

TEST(Hypergeometric, DefinitionMatchesCharacterSumOnRandomCharacters) {
  for (std::int64_t q : {13, 31, 25}) {
    const auto f = build_field_of_order(q);
    const CharGroup G(f);
    JacobiCache cache(f);
    std::mt19937_64 rng(static_cast<std::uint64_t>(q));
    std::uniform_int_distribution<std::int64_t> pick(0, G.order - 1);
    for (int trial = 0; trial < 12; ++trial) {
      CharIndex c[5];
      for (auto& x : c) x = G.make(pick(rng));
      const FieldElem lambda = f.power(pick(rng));
      EXPECT_EQ(f3f2_definitional(f, c[0], c[1], c[2], c[3], c[4], lambda, &cache),
                f3f2_charsum(f, c[0], c[1], c[2], c[3], c[4], lambda));
      EXPECT_EQ(f2f1_definitional(f, c[0], c[1], c[2], lambda, &cache), f2f1_charsum(f, c[0], c[1], c[2], lambda));
    }
  }
}

TEST(Hypergeometric, ZeroArgument) {
  const auto f = build_field(13, 1);
  const CharGroup G(f);
  const auto A = G.make(3), B = G.make(6);
  EXPECT_TRUE(f3f2_definitional(f, A, B, A, G.trivial(), B, f.zero()).num.is_zero());
  EXPECT_TRUE(f2f1_definitional(f, A, B, A, f.zero()).num.is_zero());
  EXPECT_THROW(f3f2_charsum(f, A, B, A, G.trivial(), B, f.zero()), PreconditionError);
  EXPECT_THROW(f2f1_charsum(f, A, B, A, f.zero()), PreconditionError);
}

TEST(Hypergeometric, OrderFourValueAt125) {
  const auto f = build_field(5, 3);
  const CharGroup G(f);
  const auto v = f3f2_charsum(f, chi_k(f, 4), G.phi(), G.phi(), G.trivial(), G.trivial(), f.one());
  EXPECT_EQ(v.den, 125 * 125);
  EXPECT_EQ(v.num.to_integer(), -142);
  // the conjugate character gives the same rational value
  EXPECT_EQ(f3f2_charsum(f, G.inv(chi_k(f, 4)), G.phi(), G.phi(), G.trivial(), G.trivial(), f.one()).num.to_integer(),
            -142);
}

TEST(Hypergeometric, BatchedTableMatchesDirectSums) {
  for (auto [q, k] : {std::pair{13, 4}, {31, 6}, {29, 4}}) {
    const auto f = build_field_of_order(q);
    for (auto lambda : {f.one(), f.omega(), f.power(7)}) {
      const F3F2Table table(f, k, lambda);
      int checked = 0;
      F3F2Table::for_each_tuple(k, [&](const Tuple5& t) {
        // every 7th tuple keeps the direct O(q^2) sums affordable
        if ((t[0] * 31 + t[1] * 17 + t[2] * 13 + t[3] * 5 + t[4]) % 7 != 0) return;
        EXPECT_EQ(table.signed_q2_value(t), signed_f3f2(f, k, t, lambda).num) << "q=" << q << " t=" << to_string(t);
        ++checked;
      });
      EXPECT_GT(checked, 0);
    }
  }
}

TEST(Hypergeometric, GaloisActionPermutesTupleValues) {
  const auto f = build_field(31, 1);
  const int k = 6;
  const F3F2Table table(f, k, f.one());
  for (int j : {5}) {
    F3F2Table::for_each_tuple(k, [&](const Tuple5& t) {
      Tuple5 jt{};
      for (std::size_t i = 0; i < 5; ++i) jt[i] = (t[i] * j) % k;
      EXPECT_EQ(table.q2_value(t).galois(j), table.q2_value(jt));
    });
  }
}

TEST(Hypergeometric, ScaledValueArithmetic) {
  const ScaledValue a = scaled_integer(3, 4), b = scaled_integer(1, 6);
  EXPECT_EQ(a + b, scaled_integer(11, 12));
  EXPECT_EQ(a - b, scaled_integer(7, 12));
  EXPECT_EQ(a * b, scaled_integer(1, 8));
  EXPECT_EQ(BigInt(4) * a, scaled_integer(3));
}

TEST(Hypergeometric, BinomialSymbolsAgainstJacobi) {
  const auto f = build_field(13, 1);
  const CharGroup G(f);
  // (A over e) = -1/q for A nontrivial; (e over e) = (q-2)/q
  EXPECT_EQ(binom(f, G.make(3), G.trivial()), scaled_integer(-1, 13));
  EXPECT_EQ(binom(f, G.trivial(), G.trivial()), scaled_integer(11, 13));
  // (A over A) = -1/q for A nontrivial
  EXPECT_EQ(binom(f, G.make(3), G.make(3)), scaled_integer(-1, 13));
  EXPECT_EQ(binom(f, G.make(5), G.make(5)), scaled_integer(-1, 13));
}

TEST(Hypergeometric, IdentitySuiteSmall) {
  for (auto [q, k] : {std::pair{13, 4}, {7, 2}, {27, 2}}) {
    const auto rep = identity_suite(build_field_of_order(q), k, 12, 3);
    EXPECT_EQ(rep.items.size(), 15u);
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << "q=" << q << " " << item.name << " " << item.detail;
  }
}

TEST(Hypergeometric, IdentitiesAreNotVacuous) {
  // both sides of the transformations are mostly nonzero on chi_k powers
  const auto f = build_field(29, 1);
  const CharGroup G(f);
  const CharIndex c = chi_k(f, 4);
  int nonzero = 0, total = 0;
  F3F2Table::for_each_tuple(4, [&](const Tuple5& t) {
    if ((t[0] + 2 * t[1] + 3 * t[2] + t[3] + t[4]) % 9 != 0) return;
    ++total;
    nonzero += !f3f2_charsum(f, G.pow(c, t[0]), G.pow(c, t[1]), G.pow(c, t[2]), G.pow(c, t[3]), G.pow(c, t[4]), f.one())
                    .num.is_zero();
  });
  EXPECT_GT(nonzero, total / 2);
}
