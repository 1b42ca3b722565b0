#include "paley/characters.hpp"
#include "paley/formulas.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace paley;

TEST(Characters, ValuesAndSigns) {
  const auto f = build_field(13, 1);
  const CharGroup G(f);
  const CharIndex c4 = chi_k(f, 4);
  EXPECT_EQ(c4.t, 3);
  EXPECT_EQ(G.char_order(c4), 4);
  EXPECT_EQ(char_value(f, c4, f.omega()), root(4, 1));
  EXPECT_TRUE(char_value(f, G.trivial(), f.zero()).is_zero());  // chi(0) = 0, trivial included
  EXPECT_EQ(char_value(f, G.trivial(), f.one()), root(1, 0));
  EXPECT_EQ(char_sign_at_minus_one(f, c4), -1);  // 13 = 5 (mod 8)
  EXPECT_EQ(char_sign_at_minus_one(f, G.phi()), 1);
  EXPECT_EQ(G.pow(c4, 4).t, 0);
}

TEST(Characters, JacobiTableMatchesDirectSums) {
  for (auto [q, k] : {std::pair{13, 4}, {29, 4}, {31, 6}, {27, 2}, {41, 8}}) {
    const auto f = build_field_of_order(q);
    const CharGroup G(f);
    const JacobiTable J(f, k);
    for (int s = 0; s < k; ++s)
      for (int t = 0; t < k; ++t) EXPECT_EQ(J(s, t), jacobi(f, G.pow(chi_k(f, k), s), G.pow(chi_k(f, k), t)));
  }
}

TEST(Characters, AggregateValuesAtThirteen) {
  const auto f = build_field(13, 1);
  const auto a = aggregates(f, 4);
  EXPECT_EQ(a.R, -6);
  EXPECT_EQ(a.J0, a.R + 13 - 8 + 1);
  const JacobiTable J(f, 4);
  EXPECT_EQ((J(1, 1) + J(3, 3)).to_integer(), 6);
}

TEST(Characters, AggregatesAreGaloisInvariant) {
  for (auto [q, k] : {std::pair{29, 4}, {43, 6}, {41, 8}, {31, 10}}) {
    const auto f = build_field_of_order(q);
    const auto base = aggregates(JacobiTable(f, k));
    for (std::int64_t j = 1; j < k; ++j) {
      if (std::gcd(j, std::int64_t{k}) != 1) continue;
      const auto other = aggregates(JacobiTable(f, k, j));
      EXPECT_EQ(base.R, other.R) << "q=" << q << " j=" << j;
      EXPECT_EQ(base.S, other.S);
      EXPECT_EQ(base.Sminus, other.Sminus);
      EXPECT_EQ(base.Rminus, other.Rminus);
    }
  }
}

TEST(Characters, AggregateIdentities) {
  for (auto [q, k] : {std::pair{7, 2}, {13, 4}, {29, 4}, {31, 6}, {43, 6}, {41, 8}, {31, 10}, {125, 4}, {27, 2}}) {
    const auto rep = check_jtoRS(build_field_of_order(q), k);
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << "q=" << q << " " << item.name << " " << item.detail;
  }
}

TEST(Characters, JacobiProperties) {
  for (auto [q, k] : {std::pair{13, 4}, {29, 4}, {31, 6}, {43, 6}, {125, 4}}) {
    const auto f = build_field_of_order(q);
    std::optional<std::int64_t> x;
    if (q % 4 == 1) x = two_squares(q).x;
    const auto rep = check_jacobi_properties(f, k, 40, 11, x);
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << "q=" << q << " " << item.name << " " << item.detail;
  }
}

TEST(Characters, GaussSumMagnitudeAndJacobiRelation) {
  for (std::int64_t q : {13, 27, 29, 49}) {
    const auto f = build_field_of_order(q);
    const CharGroup G(f);
    const AdditiveCharacter psi(f);
    const double sq = std::sqrt(static_cast<double>(q));
    for (std::int64_t a = 1; a < G.order; ++a) {
      EXPECT_NEAR(std::abs(gauss(f, G.make(a), psi)), sq, 1e-7);
      for (std::int64_t b = 1; b < G.order; b += 3) {
        if ((a + b) % G.order == 0) continue;
        const auto lhs = jacobi(f, G.make(a), G.make(b)).to_complex();
        const auto rhs = gauss(f, G.make(a), psi) * gauss(f, G.make(b), psi) / gauss(f, G.make(a + b), psi);
        EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-7);
      }
    }
    EXPECT_NEAR(std::abs(gauss(f, G.trivial(), psi) + 1.0), 0.0, 1e-9);
  }
}

TEST(Characters, OrderFourAggregatesInTermsOfX) {
  for (std::int64_t q : {5, 13, 29, 37, 53, 61, 101, 125}) {
    const auto f = build_field_of_order(q);
    const auto a = aggregates(f, 4);
    const std::int64_t x = two_squares(q).x;
    EXPECT_EQ(a.R, 2 * x) << q;
    EXPECT_EQ(a.S, 4 * x * x - 6 * q) << q;
    EXPECT_EQ(a.Sminus, 2 * q - 4 * x * x) << q;
  }
}
