#include "paley/orbits.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

using namespace paley;

TEST(Orbits, XkSize) {
  for (int k = 2; k <= 12; k += 2)
    EXPECT_EQ(static_cast<std::int64_t>(enumerate_xk(k).size()), xk_size_formula(k)) << "k=" << k;
  EXPECT_EQ(xk_size_formula(4), 93);
}

TEST(Orbits, CountMatchesClosedForm) {
  EXPECT_EQ(orbit_count_formula(2), 1);
  EXPECT_EQ(orbit_count_formula(4), 6);
  for (int k = 2; k <= 12; k += 2) {
    const auto orbits = enumerate_orbits(k);
    EXPECT_EQ(static_cast<std::int64_t>(orbits.size()), orbit_count_formula(k)) << "k=" << k;
    std::int64_t total = 0;
    for (const auto& o : orbits) {
      total += o.size;
      EXPECT_EQ(120 % o.size, 0) << to_string(o.representative);
      if (o.zero_valued) EXPECT_EQ(o.net, 0);
    }
    EXPECT_EQ(total, xk_size_formula(k));
  }
}

TEST(Orbits, OrderFourTable) {
  const auto orbits = enumerate_orbits(4);
  ASSERT_EQ(orbits.size(), 6u);
  const std::vector<std::pair<Tuple5, std::pair<std::int64_t, std::int64_t>>> expected{
      {{1, 1, 1, 0, 0}, {10, 0}}, {{3, 3, 3, 0, 0}, {10, 0}}, {{1, 3, 2, 0, 0}, {30, 0}},
      {{1, 2, 2, 0, 0}, {30, 10}}, {{1, 1, 3, 0, 0}, {12, 0}}, {{2, 2, 2, 0, 0}, {1, 1}}};
  for (const auto& [rep, sz_net] : expected) {
    const auto loc = locate(orbits, rep);
    ASSERT_TRUE(loc.has_value()) << to_string(rep);
    EXPECT_EQ(orbits[loc->orbit].size, sz_net.first) << to_string(rep);
    EXPECT_EQ(net_relative_to(orbits, rep), sz_net.second) << to_string(rep);
  }
}

TEST(Orbits, OrderTwoSingleZeroOrbit) {
  const auto orbits = enumerate_orbits(2);
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].representative, (Tuple5{1, 1, 1, 0, 0}));
  EXPECT_EQ(orbits[0].size, 1);
  EXPECT_TRUE(orbits[0].zero_valued);
}

TEST(Orbits, GeneratorExamples) {
  const auto g = generators(4);
  EXPECT_EQ(g[3].map({1, 2, 2, 0, 0}, 4), (Tuple5{1, 2, 2, 3, 0}));
  EXPECT_EQ(g[3].sign({1, 2, 2, 0, 0}), -1);
  EXPECT_EQ(g[7].map({1, 2, 3, 0, 1}, 4), (Tuple5{1, 3, 2, 1, 0}));
}

TEST(Orbits, GeneratorsAreInvolutionsClosedOnXk) {
  for (int k = 2; k <= 12; k += 2) {
    const auto gens = generators(k);
    for (const auto& t : enumerate_xk(k)) {
      for (const auto& g : gens) {
        const auto u = g.map(t, k);
        ASSERT_TRUE(in_xk(u, k)) << g.name << " " << to_string(t) << " k=" << k;
        EXPECT_EQ(g.map(u, k), t) << g.name;
        EXPECT_EQ(g.sign(t) * g.sign(u), 1) << g.name << " " << to_string(t);
      }
    }
  }
}

TEST(Orbits, InducedGroupHasOrder120) {
  EXPECT_EQ(induced_group_order(4), 120);
  EXPECT_EQ(induced_group_order(6), 120);
}

TEST(Orbits, PathIndependence) {
  for (int k : {4, 6, 8}) {
    const auto a = enumerate_orbits(k);
    const auto b = enumerate_orbits(k, {7, 6, 5, 4, 3, 2, 1, 0});
    const auto c = enumerate_orbits(k, {3, 0, 7, 1, 5, 2, 6, 4});
    ASSERT_EQ(a.size(), b.size());
    ASSERT_EQ(a.size(), c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (const auto* o : {&b[i], &c[i]}) {
        EXPECT_EQ(a[i].representative, o->representative);
        EXPECT_EQ(a[i].size, o->size);
        EXPECT_EQ(a[i].net, o->net);
        EXPECT_EQ(a[i].zero_valued, o->zero_valued);
        ASSERT_EQ(a[i].members.size(), o->members.size());
        for (std::size_t j = 0; j < a[i].members.size(); ++j) {
          EXPECT_EQ(a[i].members[j].tuple, o->members[j].tuple);
          if (!a[i].zero_valued) EXPECT_EQ(a[i].members[j].sign, o->members[j].sign);
        }
      }
    }
  }
}

TEST(Orbits, ValuesAgreeUpToSign) {
  for (auto [q, k] : {std::pair{7, 2}, {11, 2}, {13, 4}, {29, 4}, {31, 6}, {43, 6}, {41, 8}}) {
    const auto rep = verify_orbit_values(build_field_of_order(q), k);
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << "q=" << q << " " << item.name << " " << item.detail;
  }
}

TEST(Orbits, ZeroValuedOrbitsVanish) {
  const auto f = build_field(29, 1);
  const F3F2Table table(f, 4, f.one());
  for (const auto& o : enumerate_orbits(4))
    if (o.zero_valued) EXPECT_TRUE(table.signed_q2_value(o.representative).is_zero()) << to_string(o.representative);
}
