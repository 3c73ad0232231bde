#pragma once
/**
 * @file reference_counts.hpp
 * @brief Published beta forms for low degrees, used by the verification suite.
 *
 * Values are transcribed as printed, including any misprints; see README.
 */

#include "gwfloor/degree.hpp"
#include "gwfloor/gw_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwfloor {

struct PublishedRow {
  int s = 0;
  long long h = 0;
  std::vector<long long> beta;  // coefficient of beta^(l) at index l - 1
  long long one = 0;

  BetaForm form() const {
    BetaForm f;
    f.h_coeff = h;
    for (long long c : beta) f.beta_coeffs.emplace_back(c);
    f.one_coeff = one;
    return f;
  }
};

struct PublishedBlock {
  std::string spec;
  std::vector<PublishedRow> rows;  // s = 0, 1, ...
  std::optional<long long> complex_count;

  DegreeSpec degree() const { return DegreeSpec::parse(spec); }
};

inline const std::vector<PublishedBlock>& published_blocks() {
  static const std::vector<PublishedBlock> blocks = {
      {"p2:3",
       {{0, 2, {}, 8}, {1, 2, {1}, 6}, {2, 2, {1, 0}, 4}, {3, 2, {1, 0, 0}, 2}, {4, 2, {1, 0, 0, 0}, 0}},
       12},
      {"p2:4",
       {{0, 190, {}, 240},
        {1, 190, {48}, 144},
        {2, 190, {32, 8}, 80},
        {3, 190, {20, 6, 1}, 40},
        {4, 190, {12, 4, 1, 0}, 16},
        {5, 190, {8, 2, 1, 0, 0}, 0}},
       620},
      {"p1xp1:2,2", {{0, 2, {}, 8}, {1, 2, {1}, 6}, {2, 2, {1, 0}, 4}, {3, 2, {1, 0, 0}, 2}}, std::nullopt},
      {"p1xp1:2,3",
       {{0, 24, {}, 48}, {1, 24, {8}, 32}, {2, 24, {6, 1}, 20}, {3, 24, {4, 1, 0}, 12}, {4, 24, {2, 1, 0, 0}, 8}},
       96},
      {"p1xp1:2,4",
       {{0, 192, {}, 256},
        {1, 192, {48}, 160},
        {2, 192, {32, 8}, 96},
        {3, 192, {20, 6, 1}, 56},
        {4, 192, {12, 4, 1, 0}, 32},
        {5, 192, {8, 2, 1, 0, 0}, 16}},
       640},
      {"p1xp1:2,5",
       {{0, 1280, {}, 1280},
        {1, 1280, {256}, 768},
        {2, 1280, {160, 48}, 448},
        {3, 1280, {96, 32, 8}, 256},
        {4, 1280, {56, 20, 6, 1}, 144},
        {5, 1280, {32, 12, 4, 1, 0}, 80},
        {6, 1280, {16, 8, 2, 1, 0, 0}, 48}},
       3840},
      {"bl1:3,1", {{0, 2, {}, 8}, {1, 2, {1}, 6}, {2, 2, {1, 0}, 4}, {3, 2, {1, 0, 0}, 2}}, std::nullopt},
      {"bl1:4,2",
       {{0, 24, {}, 48}, {1, 24, {8}, 32}, {2, 24, {6, 1}, 20}, {3, 24, {4, 1, 0}, 12}, {4, 24, {2, 1, 0, 0}, 8}},
       std::nullopt},
      {"bl2:4,2,2", {{0, 2, {}, 8}, {1, 2, {1}, 6}, {2, 2, {1, 0}, 4}, {3, 2, {1, 0, 0}, 2}}, std::nullopt},
      {"bl2:4,2,1",
       {{0, 24, {}, 48}, {1, 24, {8}, 32}, {2, 24, {6, 1}, 20}, {3, 24, {4, 1, 0}, 12}, {4, 24, {2, 1, 0, 0}, 8}},
       std::nullopt},
      {"bl2:4,1,1",
       {{0, 160, {}, 240},
        {1, 160, {48}, 144},
        {2, 160, {32, 8}, 80},
        {3, 160, {20, 6, 1}, 40},
        {4, 160, {12, 4, 1, 0}, 16}},
       std::nullopt},
      {"bl3:3,1,1,1", {{0, 2, {}, 8}, {1, 2, {1}, 6}, {2, 2, {1, 0}, 4}}, std::nullopt},
      {"bl3:4,1,1,2", {{0, 24, {}, 48}, {1, 24, {8}, 32}, {2, 24, {6, 1}, 20}, {3, 24, {4, 1, 0}, 12}}, std::nullopt},
  };
  return blocks;
}

inline const PublishedBlock* find_published(const std::string& spec) {
  for (const auto& b : published_blocks())
    if (b.spec == spec) return &b;
  return nullptr;
}

}  // namespace gwfloor
