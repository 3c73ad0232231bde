#pragma once
/**
 * @file twin_tree.hpp
 * @brief Summary of a twin tree: the data its multiplicity depends on.
 */

#include <utility>
#include <vector>

namespace gwfloor {

struct TwinTreeSummary {
  std::vector<int> point_indices;                  // 1-based, ascending
  std::vector<std::pair<int, int>> elevator_marks; // (weight, point index), one per twin elevator pair
  int m_root = 1;
  int unbounded_twin_elevators = 0;

  int size() const { return static_cast<int>(point_indices.size()); }
  /// Root weight plus the number of unbounded twin elevators.
  int m_circ() const { return m_root + unbounded_twin_elevators; }

  friend bool operator==(const TwinTreeSummary&, const TwinTreeSummary&) = default;
};

}  // namespace gwfloor
