#pragma once
/**
 * @file multiplicity.hpp
 * @brief Local quadratic multiplicities and their product over a merged floor diagram.
 *
 * Every formula takes the ambient parameter count s so results live in one ring.
 */

#include "gwfloor/gw_ring.hpp"
#include "gwfloor/merged_diagram.hpp"
#include "gwfloor/twin_tree.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gwfloor {

namespace detail {
inline void require_weight(int m) {
  if (m < 1) throw std::invalid_argument("multiplicity weight must be positive, got " + std::to_string(m));
}
inline void require_index(int i, int s) {
  if (i < 1 || i > s) throw std::out_of_range("point index " + std::to_string(i) + " outside 1.." + std::to_string(s));
}
inline GwMonomial mono(int sign, std::uint64_t q, std::uint32_t subset = 0) {
  return GwMonomial::make(sign, q, subset);
}
}  // namespace detail

/// The formula set used by diagram_mult. Alternative sets (for mutation tests) derive from it.
struct StandardFormulas {
  static GwElem m_a1(int m, int s) {
    detail::require_weight(m);
    const GwElem h = GwElem::hyperbolic(s);
    if (m % 2 == 0) return Integer(m / 2) * h;
    return GwElem::term(detail::mono(1, static_cast<std::uint64_t>(m)), s) + Integer((m - 1) / 2) * h;
  }

  static GwElem edge_mult(int m, int s) {
    detail::require_weight(m);
    const Integer mm = Integer(m) * m;
    const GwElem h = GwElem::hyperbolic(s);
    if (m % 2 == 0) return Integer(mm / 2) * h;
    return GwElem::one(s) + Integer((mm - 1) / 2) * h;
  }

  static GwElem twin_edge_mult(int m, int i, int s) {
    detail::require_weight(m);
    detail::require_index(i, s);
    const Integer mm = Integer(m) * m;
    const GwElem h = GwElem::hyperbolic(s);
    const GwElem split = GwElem::one(s) + GwElem::term(detail::mono(-1, 1, 1u << (i - 1)), s);
    const GwElem tail = Integer((mm * mm - mm) / 2) * h;
    if (m % 2 == 0) return Integer(mm / 2) * split + tail;
    return GwElem::one(s) + Integer((mm - 1) / 2) * split + tail;
  }

  static GwElem gamma(int m, int i, int s) {
    detail::require_weight(m);
    detail::require_index(i, s);
    const GwElem h = GwElem::hyperbolic(s);
    if (m % 2 == 0) return Integer(Integer(m) * m / 2) * h;
    const GwElem shifted = GwElem::term(detail::mono(1, 2), s) + GwElem::term(detail::mono(-1, 2, 1u << (i - 1)), s);
    return GwElem::one(s) + Integer((m - 1) / 2) * shifted + Integer(Integer(m) * (m - 1) / 2) * h;
  }

  static GwElem beta(int i, int s) {
    detail::require_index(i, s);
    return GwElem::term(detail::mono(1, 2), s) + GwElem::term(detail::mono(1, 2, 1u << (i - 1)), s);
  }

  static GwElem twin_tree_mult(const TwinTreeSummary& tree, int s) {
    if (tree.point_indices.empty()) throw std::invalid_argument("twin tree without points");
    detail::require_weight(tree.m_root);
    GwElem out = GwElem::one(s);
    for (const auto& [m, j] : tree.elevator_marks) out *= twin_edge_mult(m, j, s);

    const int t = tree.size();
    std::uint32_t points = 0;
    for (int i : tree.point_indices) {
      detail::require_index(i, s);
      points |= 1u << (i - 1);
    }
    const std::uint64_t q = (t - 1) % 2 ? 2 : 1;
    const int parity = tree.m_circ() % 2;
    GwElem sum(s);
    for (std::uint32_t sub = points;; sub = (sub - 1) & points) {
      if (std::popcount(sub) % 2 == parity) sum.add_term(GwMonomial{1, q, sub}, 1);
      if (sub == 0) break;
    }
    return out * sum;
  }
};

inline GwElem m_a1(int m, int s) { return StandardFormulas::m_a1(m, s); }
inline GwElem edge_mult(int m, int s) { return StandardFormulas::edge_mult(m, s); }
inline GwElem twin_edge_mult(int m, int i, int s) { return StandardFormulas::twin_edge_mult(m, i, s); }
inline GwElem gamma(int m, int i, int s) { return StandardFormulas::gamma(m, i, s); }
inline GwElem beta(int i, int s) { return StandardFormulas::beta(i, s); }
inline GwElem twin_tree_mult(const TwinTreeSummary& tree, int s) { return StandardFormulas::twin_tree_mult(tree, s); }

/// Product of twin tree, TypeA, Free and plain edge contributions of a classified diagram.
template <class Formulas = StandardFormulas>
GwElem diagram_mult(const MergedFloorDiagram& m) {
  if (!m.classified()) throw std::logic_error("diagram_mult needs a classified merged diagram");
  const int s = m.num_points();
  GwElem out = GwElem::one(s);
  for (const auto& tree : m.twin_trees) out *= Formulas::twin_tree_mult(tree, s);
  for (int i = 0; i < s; ++i) {
    const auto& c = m.classification[i];
    if (c.role == PairRole::TypeA) out *= Formulas::gamma(c.weight, i + 1, s);
    else if (c.role == PairRole::Free) out *= Formulas::beta(i + 1, s);
  }
  for (std::size_t k = 0; k < m.base.edges.size(); ++k) {
    if (m.twin_tree_edge[k] || m.type_a_edge[k]) continue;
    out *= Formulas::m_a1(m.base.edges[k].weight, s);
  }
  return out;
}

}  // namespace gwfloor
