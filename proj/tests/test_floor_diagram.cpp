#include "gwfloor/floor_diagram.hpp"
#include "gwfloor/reference_counts.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace gwfloor;

namespace {

std::string encode(const FloorDiagram& d) {
  std::ostringstream out;
  for (const auto& v : d.vertices) {
    out << (v.color == Color::White ? 'W' : 'B') << static_cast<int>(v.end);
    for (int l : v.leaks) out << l << ';';
    out << '|';
  }
  for (const auto& e : d.edges) out << e.lower << '-' << e.upper << ':' << e.weight << ' ';
  return out.str();
}

std::multiset<std::string> encode_all(const std::vector<FloorDiagram>& ds) {
  std::multiset<std::string> out;
  for (const auto& d : ds) out.insert(encode(d));
  return out;
}

Integer complex_total(const std::vector<FloorDiagram>& ds) {
  Integer t = 0;
  for (const auto& d : ds) t += complex_multiplicity(d);
  return t;
}

}  // namespace

TEST(Enumerate, LowDegreePlaneCurves) {
  const auto line = enumerate(DegreeSpec::p2(1));
  ASSERT_EQ(line.size(), 1u);
  EXPECT_EQ(line[0].vertices[0].end, EndKind::Incoming);
  EXPECT_EQ(line[0].vertices[1].color, Color::White);

  const auto conic = enumerate(DegreeSpec::p2(2));
  EXPECT_EQ(conic.size(), 1u);
  EXPECT_EQ(complex_total(conic), 1);

  EXPECT_EQ(complex_total(enumerate(DegreeSpec::p2(3))), 12);
}

TEST(Enumerate, RankMatchesKontsevichOracle) {
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(complex_total(enumerate(DegreeSpec::p2(d))), oracle::kontsevich(d)) << d;
}

TEST(Enumerate, PublishedComplexCounts) {
  EXPECT_EQ(complex_total(enumerate(DegreeSpec::p1xp1(2, 3))), 96);
  EXPECT_EQ(complex_total(enumerate(DegreeSpec::p1xp1(2, 4))), 640);
}

TEST(Enumerate, MatchesBruteForceTrees) {
  struct Case {
    DegreeSpec spec;
    std::vector<int> nets;
  };
  const std::vector<Case> cases = {
      {DegreeSpec::p2(2), {1, 1}},
      {DegreeSpec::p2(3), {1, 1, 1}},
      {DegreeSpec::p1xp1(1, 2), {0}},
      {DegreeSpec::p1xp1(2, 2), {0, 0}},
      {DegreeSpec::bl1(3, 1), {0, 1, 1}},
      {DegreeSpec::bl1(2, 1), {0, 1}},
  };
  for (const auto& c : cases) {
    const auto es = end_spec(c.spec);
    const auto expected = oracle::brute_force_diagrams(n_delta(c.spec), c.nets, es.incoming, es.outgoing);
    EXPECT_EQ(encode_all(enumerate(c.spec)), encode_all(expected)) << c.spec.to_string();
  }
}

TEST(Enumerate, EveryDiagramValidAndDistinct) {
  for (const auto& block : published_blocks()) {
    const auto spec = block.degree();
    if (n_delta(spec) > 11) continue;
    const auto ds = enumerate(spec);
    std::set<std::string> seen;
    for (const auto& d : ds) {
      EXPECT_NO_THROW(validate(d, spec)) << spec.to_string() << " " << encode(d);
      EXPECT_TRUE(seen.insert(encode(d)).second) << "duplicate in " << spec.to_string();
    }
  }
}

TEST(Enumerate, IndependentOfWorkerCount) {
  for (const auto& spec : {DegreeSpec::p2(4), DegreeSpec::bl2(4, 1, 1), DegreeSpec::p1xp1(2, 3)}) {
    const auto one = enumerate(spec, 1);
    EXPECT_EQ(enumerate(spec, 3), one);
    EXPECT_EQ(enumerate(spec, 8), one);
  }
}

TEST(Enumerate, VisitorSeesSameStream) {
  const auto spec = DegreeSpec::bl3(4, 1, 1, 2);
  std::vector<FloorDiagram> visited;
  for_each_diagram(spec, [&](const FloorDiagram& d) { visited.push_back(d); });
  EXPECT_EQ(visited, enumerate(spec));
}

TEST(Validate, RejectsBrokenDiagrams) {
  const auto spec = DegreeSpec::p2(1);
  FloorDiagram good = enumerate(spec).front();
  EXPECT_NO_THROW(validate(good, spec));

  FloorDiagram bad = good;
  bad.edges[0].weight = 2;
  EXPECT_THROW(validate(bad, spec), InvalidDiagram);

  bad = good;
  bad.vertices[0].end = EndKind::Outgoing;
  EXPECT_THROW(validate(bad, spec), InvalidDiagram);

  bad = good;
  bad.vertices[1].leaks = {0};
  EXPECT_THROW(validate(bad, spec), InvalidDiagram);

  bad = good;
  bad.vertices[0].color = Color::White;
  EXPECT_THROW(validate(bad, spec), InvalidDiagram);

  EXPECT_THROW(validate(good, DegreeSpec::p2(2)), InvalidDiagram);
}

TEST(Validate, CombinedLeaksOnOneFloor) {
  // Bl3(3,1,1,1): two floors, leaks -1 and +1; some diagrams put both on one floor.
  bool combined = false;
  for (const auto& d : enumerate(DegreeSpec::bl3(3, 1, 1, 1)))
    for (const auto& v : d.vertices)
      if (v.leaks.size() == 2) combined = true;
  EXPECT_TRUE(combined);
}
