#include "gwfloor/degree.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace gwfloor;

TEST(NDelta, Examples) {
  EXPECT_EQ(n_delta(DegreeSpec::p2(3)), 8);
  EXPECT_EQ(n_delta(DegreeSpec::p1xp1(2, 3)), 9);
  EXPECT_EQ(n_delta(DegreeSpec::bl3(3, 1, 1, 1)), 5);
  EXPECT_EQ(n_delta(DegreeSpec::bl1(4, 2)), 9);
  EXPECT_EQ(n_delta(DegreeSpec::bl2(4, 1, 1)), 9);
  EXPECT_EQ(n_delta(DegreeSpec::p1xp1(2, 5)), 13);
}

TEST(WhiteSpec, Examples) {
  auto w = white_spec(DegreeSpec::p2(3));
  EXPECT_EQ(w.count, 3);
  EXPECT_EQ(w.leaks, (std::vector<int>{1, 1, 1}));

  w = white_spec(DegreeSpec::p1xp1(2, 3));
  EXPECT_EQ(w.count, 2);
  EXPECT_EQ(w.leaks, (std::vector<int>{0, 0}));

  w = white_spec(DegreeSpec::bl3(3, 1, 1, 1));
  EXPECT_EQ(w.count, 2);
  auto leaks = w.leaks;
  std::sort(leaks.begin(), leaks.end());
  EXPECT_EQ(leaks, (std::vector<int>{-1, 1}));
}

TEST(WhiteSpec, Bl2Multiset) {
  auto w = white_spec(DegreeSpec::bl2(5, 3, 1));
  EXPECT_EQ(w.count, 5);
  auto leaks = w.leaks;
  std::sort(leaks.begin(), leaks.end());
  EXPECT_EQ(leaks, (std::vector<int>{-1, 0, 0, 1, 1}));
}

TEST(EndSpec, Examples) {
  auto e = end_spec(DegreeSpec::p2(4));
  EXPECT_EQ(e.incoming, 4);
  EXPECT_EQ(e.outgoing, 0);
  e = end_spec(DegreeSpec::p1xp1(2, 3));
  EXPECT_EQ(e.incoming, 3);
  EXPECT_EQ(e.outgoing, 3);
  e = end_spec(DegreeSpec::bl3(4, 1, 1, 2));
  EXPECT_EQ(e.incoming, 2);
  EXPECT_EQ(e.outgoing, 2);
}

TEST(DegreeSpecValidation, RejectsOutsidePolygons) {
  EXPECT_THROW(DegreeSpec::p2(0), std::invalid_argument);
  EXPECT_THROW(DegreeSpec::bl1(2, 3), std::invalid_argument);
  EXPECT_THROW(DegreeSpec::bl2(4, 1, 2), std::invalid_argument);
  EXPECT_THROW(DegreeSpec::bl2(4, 3, 2), std::invalid_argument);
  EXPECT_THROW(DegreeSpec::bl3(3, 2, 1, 2), std::invalid_argument);
  EXPECT_THROW(DegreeSpec::make(SurfaceFamily::P2, {1, 2}), std::invalid_argument);
}

TEST(DegreeSpecParse, Grammar) {
  EXPECT_EQ(DegreeSpec::parse("p2:3"), DegreeSpec::p2(3));
  EXPECT_EQ(DegreeSpec::parse("p1xp1:2,5"), DegreeSpec::p1xp1(2, 5));
  EXPECT_EQ(DegreeSpec::parse("bl3:4,1,1,2"), DegreeSpec::bl3(4, 1, 1, 2));
  EXPECT_EQ(DegreeSpec::parse("bl2:4,2,1").to_string(), "bl2:4,2,1");
  for (const char* bad : {"p2", "p2:", "p3:1", "p2:x", "p2:1,", "bl1:3", "p2:-1", "p2:1 "})
    EXPECT_THROW(DegreeSpec::parse(bad), std::invalid_argument) << bad;
}

// Tree count: the vertices of a floor diagram are whites plus blacks, and the blacks are
// the bounded elevators (whites - 1, one per tree edge pair) plus the ends.
TEST(DegreeData, EulerCount) {
  std::vector<DegreeSpec> specs;
  for (int d = 1; d <= 6; ++d) specs.push_back(DegreeSpec::p2(d));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) specs.push_back(DegreeSpec::p1xp1(a, b));
  for (int d = 1; d <= 6; ++d)
    for (int a1 = 1; a1 <= d; ++a1) {
      specs.push_back(DegreeSpec::bl1(d, a1));
      for (int a2 = 1; a2 <= a1 && a1 + a2 <= d; ++a2) {
        specs.push_back(DegreeSpec::bl2(d, a1, a2));
        for (int a3 = 1; a1 + a3 <= d && a2 + a3 <= d; ++a3) specs.push_back(DegreeSpec::bl3(d, a1, a2, a3));
      }
    }
  for (const auto& spec : specs) {
    const auto w = white_spec(spec);
    const auto e = end_spec(spec);
    EXPECT_EQ(n_delta(spec) - w.count, (w.count - 1) + e.incoming + e.outgoing) << spec.to_string();
    EXPECT_EQ(static_cast<int>(w.leaks.size()), w.count) << spec.to_string();
  }
}

TEST(WhiteLabelOptions, LeakSumsMatchMultiset) {
  for (const auto& spec : {DegreeSpec::bl2(4, 1, 1), DegreeSpec::bl3(4, 1, 1, 2), DegreeSpec::p2(3)}) {
    const auto options = white_label_options(spec);
    ASSERT_FALSE(options.empty());
    const auto base = white_spec(spec);
    int base_sum = 0;
    for (int l : base.leaks) base_sum += l;
    for (const auto& option : options) {
      int sum = 0, whites = 0;
      for (const auto& [leaks, mult] : option) {
        sum += mult * leak_sum(leaks);
        whites += mult;
      }
      EXPECT_EQ(sum, base_sum) << spec.to_string();
      EXPECT_EQ(whites, base.count) << spec.to_string();
    }
  }
}
