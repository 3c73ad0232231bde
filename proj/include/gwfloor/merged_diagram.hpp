#pragma once
/**
 * @file merged_diagram.hpp
 * @brief Floor diagrams with pairs of adjacent positions merged into double points.
 *
 * Pairs are numbered 1..s from left to right; pair i carries the parameter d_i.
 */

#include "gwfloor/floor_diagram.hpp"
#include "gwfloor/twin_tree.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwfloor {

/// Two adjacent 0-based positions; second == first + 1.
using PositionPair = std::pair<int, int>;

/// (0,1), (2,3), ...: the leftmost disjoint pairs.
inline std::vector<PositionPair> default_pairs(int s) {
  std::vector<PositionPair> out;
  for (int i = 0; i < s; ++i) out.emplace_back(2 * i, 2 * i + 1);
  return out;
}

/// Sorts the pairs left to right; throws std::invalid_argument if they are not
/// disjoint adjacent pairs inside [0, n).
inline std::vector<PositionPair> normalize_pairs(std::vector<PositionPair> pairs, int n) {
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw std::invalid_argument("merge pair outside the diagram");
    if (b != a + 1) throw std::invalid_argument("merge pair positions are not adjacent");
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i].first <= pairs[i - 1].second) throw std::invalid_argument("merge pairs overlap");
  if (pairs.size() > static_cast<std::size_t>(kMaxParams)) throw std::invalid_argument("too many merge pairs");
  return pairs;
}

/// Every choice of s disjoint adjacent pairs among n positions, in lexicographic order.
inline std::vector<std::vector<PositionPair>> all_pair_choices(int n, int s) {
  std::vector<std::vector<PositionPair>> out;
  std::vector<PositionPair> cur;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == s) {
      out.push_back(cur);
      return;
    }
    const int still = s - static_cast<int>(cur.size());
    for (int a = from; a + 2 * still <= n; ++a) {
      cur.emplace_back(a, a + 1);
      self(self, a + 2);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

enum class PairRole : std::uint8_t { Unclassified, Free, TypeA, TwinTreeMember };

struct PairClass {
  PairRole role = PairRole::Unclassified;
  int weight = 0;  // TypeA: weight of the joining edge
  int tree = -1;   // TwinTreeMember: index into twin_trees
  friend bool operator==(const PairClass&, const PairClass&) = default;
};

struct MergedFloorDiagram {
  FloorDiagram base;
  std::vector<PositionPair> pairs;
  std::vector<PairClass> classification;    // filled by classify
  std::vector<TwinTreeSummary> twin_trees;  // filled by classify
  std::vector<bool> twin_tree_edge;         // per base edge
  std::vector<bool> type_a_edge;            // per base edge

  int num_points() const { return static_cast<int>(pairs.size()); }
  bool classified() const {
    return classification.size() == pairs.size() &&
           std::none_of(classification.begin(), classification.end(),
                        [](const PairClass& c) { return c.role == PairRole::Unclassified; });
  }
  /// 0-based pair index of every position, or -1.
  std::vector<int> pair_of_position() const {
    std::vector<int> out(base.vertices.size(), -1);
    for (int i = 0; i < num_points(); ++i) out[pairs[i].first] = out[pairs[i].second] = i;
    return out;
  }
  /// The other position of the same pair, or -1.
  std::vector<int> partner_of_position() const {
    std::vector<int> out(base.vertices.size(), -1);
    for (const auto& [a, b] : pairs) {
      out[a] = b;
      out[b] = a;
    }
    return out;
  }
};

namespace detail {

// Neighbour of a black vertex below (dir < 0) or above (dir > 0); -1 for an end.
inline int black_side(const std::vector<std::vector<std::pair<int, int>>>& adj, int v, int dir) {
  for (const auto& [u, w] : adj[v])
    if ((u - v) * dir > 0) return u;
  return -1;
}

// Traces the two strands through a black-black pair in both directions. On each side the
// strands must meet a common white, meet a merged white-white pair, both leave as ends, or
// one must stop at a floor while the other reaches strictly further.
inline bool strands_admissible(const std::vector<std::vector<std::pair<int, int>>>& adj,
                               const std::vector<int>& partner, int a, int b) {
  for (int dir : {-1, 1}) {
    const int x = black_side(adj, a, dir), y = black_side(adj, b, dir);
    if (x < 0 && y < 0) continue;
    if (x == y) continue;
    if (x >= 0 && y >= 0 && partner[x] == y) continue;
    const long far = dir * static_cast<long>(std::numeric_limits<int>::max());
    const long hx = x < 0 ? far : x, hy = y < 0 ? far : y;
    if (hx != hy) continue;
    return false;
  }
  return true;
}

}  // namespace detail

/// Builds the merged diagram, or returns nothing if some black-black pair is inadmissible.
inline std::optional<MergedFloorDiagram> merge(const FloorDiagram& d, std::vector<PositionPair> pairs) {
  MergedFloorDiagram m;
  m.pairs = normalize_pairs(std::move(pairs), d.size());
  m.base = d;
  const auto adj = d.adjacency();
  const auto partner = m.partner_of_position();
  for (const auto& [a, b] : m.pairs) {
    if (d.vertices[a].color != Color::Black || d.vertices[b].color != Color::Black) continue;
    if (!detail::strands_admissible(adj, partner, a, b)) return std::nullopt;
  }
  return m;
}

/// Minimum over all in-pair swaps of a byte encoding of the diagram.
inline std::string canonical_key(const MergedFloorDiagram& m) {
  const auto& d = m.base;
  const int n = d.size();
  const int s = m.num_points();
  std::string best;
  std::vector<int> perm(n);
  std::vector<std::uint32_t> edge_codes;
  std::string enc;
  for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
    for (int v = 0; v < n; ++v) perm[v] = v;
    for (int i = 0; i < s; ++i)
      if (mask >> i & 1u) std::swap(perm[m.pairs[i].first], perm[m.pairs[i].second]);

    std::vector<const Vertex*> at(n);
    for (int v = 0; v < n; ++v) at[perm[v]] = &d.vertices[v];
    enc.clear();
    for (int p = 0; p < n; ++p) {
      const Vertex& x = *at[p];
      enc += static_cast<char>(x.color);
      enc += static_cast<char>(x.end);
      enc += static_cast<char>(x.leaks.size());
      for (int l : x.leaks) enc += static_cast<char>(l + 2);
    }
    edge_codes.clear();
    for (const auto& e : d.edges) {
      const int a = std::min(perm[e.lower], perm[e.upper]), b = std::max(perm[e.lower], perm[e.upper]);
      edge_codes.push_back(static_cast<std::uint32_t>(a) << 24 | static_cast<std::uint32_t>(b) << 16 |
                           static_cast<std::uint32_t>(e.weight));
    }
    std::sort(edge_codes.begin(), edge_codes.end());
    enc += '\xff';
    for (std::uint32_t c : edge_codes)
      for (int shift = 24; shift >= 0; shift -= 8) enc += static_cast<char>(c >> shift & 0xffu);
    if (mask == 0 || enc < best) best = enc;
  }
  return best;
}

namespace detail {

struct TwinTreeFound {
  TwinTreeSummary summary;
  std::vector<int> vertices;  // both strands
  int root_pair = -1;
};

inline std::vector<TwinTreeFound> find_twin_trees(const MergedFloorDiagram& m) {
  const auto& d = m.base;
  const int n = d.size();
  const auto adj = d.adjacency();
  const auto partner = m.partner_of_position();
  const auto pair_of = m.pair_of_position();
  auto weight = [&](int u, int v) {
    for (const auto& [x, w] : adj[u])
      if (x == v) return w;
    return 0;
  };
  // vertices reachable from start without crossing the edge start - blocked
  auto strand = [&](int start, int blocked) {
    std::vector<int> seen{start};
    std::vector<bool> mark(n, false);
    mark[start] = true;
    for (std::size_t k = 0; k < seen.size(); ++k) {
      const int y = seen[k];
      for (const auto& [z, w] : adj[y]) {
        if (y == start && z == blocked) continue;
        if (!mark[z]) {
          mark[z] = true;
          seen.push_back(z);
        }
      }
    }
    return std::make_pair(seen, mark);
  };

  std::vector<TwinTreeFound> out;
  for (int pi = 0; pi < m.num_points(); ++pi) {
    const auto [a, b] = m.pairs[pi];
    if (d.vertices[a].color != Color::Black || d.vertices[b].color != Color::Black) continue;
    int root_white = -1;
    for (const auto& [x, w] : adj[a])
      for (const auto& [y, w2] : adj[b])
        if (x == y) root_white = x;
    if (root_white < 0 || weight(root_white, a) != weight(root_white, b)) continue;

    const auto [left, left_mark] = strand(a, root_white);
    const auto [right, right_mark] = strand(b, root_white);
    if (left.size() != right.size()) continue;
    bool twin = true;
    for (int v : left) {
      const int pv = partner[v];
      if (right_mark[v] || pv < 0 || !right_mark[pv] || !(d.vertices[v] == d.vertices[pv])) {
        twin = false;
        break;
      }
      std::set<std::pair<int, int>> mapped, actual;
      for (const auto& [z, w] : adj[v])
        if (!(v == a && z == root_white)) mapped.emplace(partner[z], w);
      for (const auto& [z, w] : adj[pv])
        if (!(pv == b && z == root_white)) actual.emplace(z, w);
      if (mapped != actual) {
        twin = false;
        break;
      }
    }
    if (!twin) continue;

    TwinTreeFound found;
    found.root_pair = pi;
    found.summary.m_root = weight(root_white, a);
    int bounded_blacks = 0, whites = 0;
    for (int v : left) {
      found.summary.point_indices.push_back(pair_of[v] + 1);
      if (d.vertices[v].color == Color::White) {
        ++whites;
        continue;
      }
      found.summary.elevator_marks.emplace_back(adj[v].front().second, pair_of[v] + 1);
      if (d.vertices[v].end != EndKind::None) ++found.summary.unbounded_twin_elevators;
      else ++bounded_blacks;
    }
    // a double component through t points has t + 1 terminal attachments
    if (bounded_blacks != whites) throw std::logic_error("twin tree violates the pinning count");
    std::sort(found.summary.point_indices.begin(), found.summary.point_indices.end());
    std::sort(found.summary.elevator_marks.begin(), found.summary.elevator_marks.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    found.vertices = left;
    found.vertices.insert(found.vertices.end(), right.begin(), right.end());
    out.push_back(std::move(found));
  }
  return out;
}

}  // namespace detail

inline std::vector<TwinTreeSummary> detect_twin_trees(const MergedFloorDiagram& m) {
  std::vector<TwinTreeSummary> out;
  for (auto& f : detail::find_twin_trees(m)) out.push_back(std::move(f.summary));
  return out;
}

/// Labels every pair as a twin tree member, a white-black edge (TypeA) or Free.
inline MergedFloorDiagram classify(MergedFloorDiagram m) {
  const auto& d = m.base;
  const int s = m.num_points();
  const auto pair_of = m.pair_of_position();
  m.classification.assign(s, PairClass{});
  m.twin_trees.clear();
  m.twin_tree_edge.assign(d.edges.size(), false);
  m.type_a_edge.assign(d.edges.size(), false);

  std::vector<bool> in_tree(d.vertices.size(), false);
  for (auto& found : detail::find_twin_trees(m)) {
    const int id = static_cast<int>(m.twin_trees.size());
    for (int v : found.vertices) {
      in_tree[v] = true;
      m.classification[pair_of[v]] = PairClass{PairRole::TwinTreeMember, 0, id};
    }
    m.twin_trees.push_back(std::move(found.summary));
  }
  for (std::size_t k = 0; k < d.edges.size(); ++k)
    if (in_tree[d.edges[k].lower] || in_tree[d.edges[k].upper]) m.twin_tree_edge[k] = true;

  for (int i = 0; i < s; ++i) {
    if (m.classification[i].role == PairRole::TwinTreeMember) continue;
    const auto [a, b] = m.pairs[i];
    const bool mixed = d.vertices[a].color != d.vertices[b].color;
    int joining = -1;
    for (std::size_t k = 0; k < d.edges.size(); ++k)
      if (d.edges[k].lower == a && d.edges[k].upper == b) joining = static_cast<int>(k);
    if (mixed && joining >= 0) {
      m.classification[i] = PairClass{PairRole::TypeA, d.edges[joining].weight, -1};
      const int black = d.vertices[a].color == Color::Black ? a : b;
      for (std::size_t k = 0; k < d.edges.size(); ++k)
        if (d.edges[k].lower == black || d.edges[k].upper == black) m.type_a_edge[k] = true;
    } else {
      m.classification[i] = PairClass{PairRole::Free, 0, -1};
    }
  }
  return m;
}

}  // namespace gwfloor
