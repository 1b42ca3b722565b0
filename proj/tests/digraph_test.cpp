#include "paley/digraph.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace paley;

TEST(Digraph, PaleyTournamentOfOrderSeven) {
  const auto f = build_field(7, 1);
  const auto g = build_G(f, 2);
  EXPECT_EQ(g.size(), 7u);
  for (auto a : g.vertices()) {
    EXPECT_EQ(g.out_degree(a), 3);
    EXPECT_EQ(g.in_degree(a), 3);
  }
  EXPECT_EQ(g.edge_count(), 21);
  EXPECT_EQ(count_transitive(g, 4), 0);
  EXPECT_EQ(count_transitive(g, 3), 21);
}

TEST(Digraph, ThreeCycle) {
  const auto f = build_field(3, 1);
  const auto g = build_G(f, 2);
  EXPECT_TRUE(g.adjacent(f.from_integer(0), f.from_integer(1)));
  EXPECT_TRUE(g.adjacent(f.from_integer(1), f.from_integer(2)));
  EXPECT_TRUE(g.adjacent(f.from_integer(2), f.from_integer(0)));
  EXPECT_EQ(count_transitive(g, 3), 0);
}

TEST(Digraph, SubgraphsAtSeven) {
  const auto f = build_field(7, 1);
  const auto h = build_H(build_G(f, 2));
  std::set<std::int64_t> v;
  for (auto a : h.vertices()) v.insert(f.to_index(a));
  EXPECT_EQ(v, (std::set<std::int64_t>{1, 2, 4}));
  EXPECT_TRUE(h.adjacent(f.from_integer(1), f.from_integer(2)));
  EXPECT_TRUE(h.adjacent(f.from_integer(2), f.from_integer(4)));
  EXPECT_TRUE(h.adjacent(f.from_integer(4), f.from_integer(1)));
  const auto h1 = build_H1(h);
  EXPECT_EQ(h1.size(), 1u);
  EXPECT_EQ(h1.edge_count(), 0);
}

TEST(Digraph, DegreesAtThirteen) {
  const auto f = build_field(13, 1);
  const auto g = build_G(f, 4);
  for (auto a : g.vertices()) EXPECT_EQ(g.out_degree(a), 3);
  EXPECT_EQ(g.edge_count(), 39);
  EXPECT_EQ(build_H1(build_H(g)).size(), 0u);
}

TEST(Digraph, EmptyH1At125) {
  const auto f = build_field(5, 3);
  const auto h1 = build_H1(build_H(build_G(f, 4)));
  EXPECT_EQ(h1.edge_count(), 0);
  EXPECT_FALSE(h1.has_edge());
}

TEST(Digraph, CountingByEnumeration) {
  EXPECT_EQ(count_transitive(build_G(build_field(11, 1), 2), 4), 55);
  EXPECT_EQ(count_transitive(build_G(build_field(11, 1), 2), 3), 110);
  EXPECT_EQ(count_transitive(build_G(build_field(13, 1), 4), 3), 0);
  EXPECT_THROW(count_transitive(build_G(build_field(7, 1), 2), 5), PreconditionError);
}

TEST(Digraph, InvalidParameters) {
  EXPECT_THROW(build_G(build_field(3, 2), 2), PreconditionError);
  EXPECT_THROW(build_G(build_field(17, 1), 4), PreconditionError);
}

TEST(Digraph, StructureAgainstCharacterSums) {
  for (auto [q, k] : {std::pair{7, 2}, {11, 2}, {13, 4}, {29, 4}, {31, 6}, {41, 8}, {27, 2}}) {
    const auto f = build_field_of_order(q);
    auto rep = verify_prop41(f, k);
    rep.append(verify_subgraph_counts(f, k));
    for (const auto& item : rep.items) EXPECT_TRUE(item.passed) << "q=" << q << " " << item.name << " " << item.detail;
  }
}

TEST(Digraph, TranslationInvariance) {
  // the number of transitive triples with a given source does not depend on it
  const auto f = build_field(29, 1);
  const auto g = build_G(f, 4);
  std::set<std::int64_t> per_vertex;
  for (auto a : g.vertices()) {
    const auto out = g.out_neighborhood(a);
    per_vertex.insert(out.edge_count());
  }
  EXPECT_EQ(per_vertex.size(), 1u);
}

TEST(Multicolor, CompleteAndProperlyColoured) {
  for (auto [q, k] : {std::pair{13, 4}, {31, 6}, {41, 8}, {7, 2}}) {
    const auto f = build_field_of_order(q);
    const auto t = multicolor_tournament(f, k);
    EXPECT_TRUE(t.is_complete_tournament());
    EXPECT_EQ(t.arcs().size(), static_cast<std::size_t>(q * (q - 1) / 2));
    const auto g = build_G(f, k);
    const auto c0 = t.color_subgraph(0);
    for (auto a : f.elements())
      for (auto b : f.elements()) {
        EXPECT_EQ(c0.adjacent(a, b), g.adjacent(a, b));
        const auto col = t.arc_color(a, b);
        if (col) EXPECT_EQ(f.residue_class(k, f.sub(b, a)), *col);
      }
  }
}

TEST(Multicolor, MonochromaticT4MatchesK4) {
  for (auto [q, k] : {std::pair{13, 4}, {29, 4}}) {
    const auto f = build_field_of_order(q);
    const auto mono = multicolor_tournament(f, k).count_monochromatic_transitive(4);
    const auto k4 = count_transitive(build_G(f, k), 4);
    EXPECT_EQ(mono > 0, k4 > 0);
    // each colour class is a dilate of G, so every colour contributes K4(G)
    EXPECT_EQ(mono, k4 * (k / 2));
  }
}

TEST(Multicolor, EdgeListExport) {
  const auto f = build_field(7, 1);
  std::ostringstream os;
  multicolor_tournament(f, 2).write_edge_list(os);
  std::istringstream is(os.str());
  int lines = 0;
  std::int64_t a, b, c;
  while (is >> a >> b >> c) {
    ++lines;
    EXPECT_EQ(c, 0);
    EXPECT_TRUE(build_G(f, 2).adjacent(f.from_index(a), f.from_index(b)));
  }
  EXPECT_EQ(lines, 21);
}
