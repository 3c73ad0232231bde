#pragma once
/**
 * @file floor_diagram.hpp
 * @brief Rational floor diagrams and their enumeration by a left-to-right position sweep.
 *
 * Positions are 0-based internally. Edges point from the lower to the higher position.
 */

#include "gwfloor/degree.hpp"
#include "gwfloor/gw_ring.hpp"
#include "gwfloor/parallel.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwfloor {

enum class Color : std::uint8_t { White, Black };
enum class EndKind : std::uint8_t { None, Incoming, Outgoing };

struct Vertex {
  Color color = Color::White;
  LeakSet leaks;                 // whites only
  EndKind end = EndKind::None;   // blacks only
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  int lower = 0;
  int upper = 0;
  int weight = 1;
  auto operator<=>(const Edge&) const = default;
};

struct FloorDiagram {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted

  int size() const { return static_cast<int>(vertices.size()); }

  /// (neighbour, weight) lists.
  std::vector<std::vector<std::pair<int, int>>> adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(vertices.size());
    for (const auto& e : edges) {
      adj[e.lower].emplace_back(e.upper, e.weight);
      adj[e.upper].emplace_back(e.lower, e.weight);
    }
    return adj;
  }

  friend bool operator==(const FloorDiagram&, const FloorDiagram&) = default;
};

/// Complex multiplicity: product of all bounded edge weights.
inline Integer complex_multiplicity(const FloorDiagram& d) {
  Integer r = 1;
  for (const auto& e : d.edges) r *= e.weight;
  return r;
}

class InvalidDiagram : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Throws InvalidDiagram naming the first violated condition.
inline void validate(const FloorDiagram& d, const DegreeSpec& spec) {
  auto fail = [](const std::string& why) { throw InvalidDiagram(why); };
  const int n = d.size();
  if (n != n_delta(spec)) fail("vertex count differs from the number of point conditions");
  if (!std::is_sorted(d.edges.begin(), d.edges.end())) fail("edges not sorted");

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> in(n, 0), out(n, 0), valence(n, 0);
  for (const auto& e : d.edges) {
    if (e.lower < 0 || e.upper >= n || e.lower >= e.upper) fail("edge endpoints out of order");
    if (e.weight < 1) fail("edge weight must be positive");
    if (d.vertices[e.lower].color == d.vertices[e.upper].color) fail("edge joins vertices of one color");
    const int a = find(e.lower), b = find(e.upper);
    if (a == b) fail("cycle");
    parent[a] = b;
    out[e.lower] += e.weight;
    in[e.upper] += e.weight;
    ++valence[e.lower];
    ++valence[e.upper];
  }
  for (int v = 1; v < n; ++v)
    if (find(v) != find(0)) fail("disconnected");

  int incoming = 0, outgoing = 0;
  std::vector<int> leaks;
  int whites = 0;
  for (int v = 0; v < n; ++v) {
    const auto& x = d.vertices[v];
    if (x.color == Color::White) {
      ++whites;
      if (x.end != EndKind::None) fail("white vertex with an end");
      if (in[v] - out[v] != leak_sum(x.leaks)) fail("white divergence differs from its leaks");
      leaks.insert(leaks.end(), x.leaks.begin(), x.leaks.end());
      continue;
    }
    if (!x.leaks.empty()) fail("black vertex with leaks");
    const int end_in = x.end == EndKind::Incoming, end_out = x.end == EndKind::Outgoing;
    incoming += end_in;
    outgoing += end_out;
    if (in[v] + end_in != out[v] + end_out) fail("black vertex with nonzero divergence");
    if (valence[v] + end_in + end_out != 2) fail("black vertex must be two-valent");
    if ((end_in || end_out) && in[v] + out[v] != 1) fail("end attached through a heavy edge");
  }
  const auto ws = white_spec(spec);
  const auto es = end_spec(spec);
  if (whites != ws.count) fail("white vertex count");
  if (incoming != es.incoming || outgoing != es.outgoing) fail("end counts");
  std::sort(leaks.begin(), leaks.end());
  std::vector<int> expected = ws.leaks;
  // a white with a canceling pair carries no 0, so only the nonzero leaks are compared
  auto strip = [](std::vector<int> v) {
    v.erase(std::remove(v.begin(), v.end(), 0), v.end());
    return v;
  };
  if (strip(leaks) != strip(expected)) fail("leak multiset");
}

namespace detail {

struct Strand {
  bool from_white = false;  // true: white -> future black, false: black -> future white
  int source = 0;
  int weight = 1;
  friend bool operator==(const Strand&, const Strand&) = default;
};

struct SweepState {
  int position = 0;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<int> parent;
  std::vector<Strand> open;
  std::vector<std::pair<LeakSet, int>> labels;
  int incoming = 0;
  int outgoing = 0;
  int blacks = 0;

  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

inline const std::vector<std::vector<int>>& partitions_of(int n) {
  thread_local std::vector<std::vector<std::vector<int>>> cache;
  if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
  auto& slot = cache[n];
  if (slot.empty()) {
    std::vector<int> cur;
    partitions(n, n, cur, slot);
  }
  return slot;
}

class Sweep {
 public:
  explicit Sweep(int n) : n_(n) {}

  /// Calls emit(state) for every complete diagram, or for every state reaching split_depth.
  template <class Emit>
  void run(const SweepState& st, Emit&& emit, int split_depth = -1) const {
    if (st.position == split_depth) {
      emit(st);
      return;
    }
    if (st.position == n_) {
      if (!st.open.empty() || st.incoming || st.outgoing || st.blacks) return;
      for (const auto& [label, left] : st.labels)
        if (left) return;
      const int root = st.find(0);
      for (int v = 1; v < n_; ++v)
        if (st.find(v) != root) return;
      emit(st);
      return;
    }
    const int open_up = static_cast<int>(
        std::count_if(st.open.begin(), st.open.end(), [](const Strand& s) { return s.from_white; }));
    if (open_up > st.blacks - st.incoming) return;

    place_white(st, emit, split_depth);
    if (st.blacks > 0) place_black(st, emit, split_depth);
  }

 private:
  template <class Emit>
  void place_white(const SweepState& st, Emit& emit, int split_depth) const {
    std::vector<int> down;
    for (int i = 0; i < static_cast<int>(st.open.size()); ++i)
      if (!st.open[i].from_white) down.push_back(i);
    const int k = static_cast<int>(down.size());

    for (std::size_t li = 0; li < st.labels.size(); ++li) {
      if (st.labels[li].second == 0) continue;
      const int leak = leak_sum(st.labels[li].first);
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> roots;
        int in_weight = 0;
        bool cyclic = false;
        for (int j = 0; j < k; ++j) {
          if (!(mask >> j & 1u)) continue;
          const auto& s = st.open[down[j]];
          const int r = st.find(s.source);
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) {
            cyclic = true;
            break;
          }
          roots.push_back(r);
          in_weight += s.weight;
        }
        if (cyclic) continue;
        const int out_weight = in_weight - leak;
        if (out_weight < 0) continue;

        SweepState base = st;
        const int p = st.position;
        base.vertices[p] = Vertex{Color::White, st.labels[li].first, EndKind::None};
        base.labels[li].second -= 1;
        std::vector<Strand> kept;
        for (int i = 0; i < static_cast<int>(st.open.size()); ++i) {
          const auto pos_in_down = std::find(down.begin(), down.end(), i);
          const bool closing = pos_in_down != down.end() && (mask >> (pos_in_down - down.begin()) & 1u);
          if (closing) {
            base.edges.push_back(Edge{st.open[i].source, p, st.open[i].weight});
          } else {
            kept.push_back(st.open[i]);
          }
        }
        for (int r : roots) base.parent[r] = p;
        base.position = p + 1;
        for (const auto& part : partitions_of(out_weight)) {
          SweepState next = base;
          next.open = kept;
          for (int w : part) next.open.push_back(Strand{true, p, w});
          run(next, emit, split_depth);
        }
      }
    }
  }

  template <class Emit>
  void place_black(const SweepState& st, Emit& emit, int split_depth) const {
    const int p = st.position;
    if (st.incoming > 0) {
      SweepState next = st;
      next.vertices[p] = Vertex{Color::Black, {}, EndKind::Incoming};
      next.open.push_back(Strand{false, p, 1});
      next.incoming -= 1;
      next.blacks -= 1;
      next.position = p + 1;
      run(next, emit, split_depth);
    }
    for (int i = 0; i < static_cast<int>(st.open.size()); ++i) {
      const Strand s = st.open[i];
      if (!s.from_white) continue;
      bool seen = false;
      for (int j = 0; j < i; ++j) seen = seen || st.open[j] == s;
      if (seen) continue;

      SweepState base = st;
      base.open.erase(base.open.begin() + i);
      base.edges.push_back(Edge{s.source, p, s.weight});
      base.parent[st.find(s.source)] = p;
      base.blacks -= 1;
      base.position = p + 1;

      SweepState splice = base;
      splice.vertices[p] = Vertex{Color::Black, {}, EndKind::None};
      splice.open.push_back(Strand{false, p, s.weight});
      run(splice, emit, split_depth);

      if (s.weight == 1 && st.outgoing > 0) {
        SweepState end = base;
        end.vertices[p] = Vertex{Color::Black, {}, EndKind::Outgoing};
        end.outgoing -= 1;
        run(end, emit, split_depth);
      }
    }
  }

  int n_;
};

inline std::vector<SweepState> initial_states(const DegreeSpec& spec) {
  const int n = n_delta(spec);
  const auto ends = end_spec(spec);
  std::vector<SweepState> out;
  for (auto& labels : white_label_options(spec)) {
    SweepState st;
    st.vertices.resize(n);
    st.parent.resize(n);
    std::iota(st.parent.begin(), st.parent.end(), 0);
    int whites = 0;
    for (const auto& [l, c] : labels) whites += c;
    st.labels = std::move(labels);
    st.incoming = ends.incoming;
    st.outgoing = ends.outgoing;
    st.blacks = n - whites;
    out.push_back(std::move(st));
  }
  return out;
}

inline FloorDiagram to_diagram(const SweepState& st) {
  FloorDiagram d;
  d.vertices = st.vertices;
  d.edges = st.edges;
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

}  // namespace detail

/// Streams every floor diagram of the degree exactly once, in sweep order.
template <class Visitor>
void for_each_diagram(const DegreeSpec& spec, Visitor&& visit) {
  const detail::Sweep sweep(n_delta(spec));
  for (const auto& st : detail::initial_states(spec))
    sweep.run(st, [&](const detail::SweepState& done) { visit(detail::to_diagram(done)); });
}

/// All floor diagrams in sweep order. The search tree is split into prefixes that are
/// processed by up to `threads` workers; output order does not depend on the worker count.
inline std::vector<FloorDiagram> enumerate(const DegreeSpec& spec, unsigned threads = 1) {
  const int n = n_delta(spec);
  const detail::Sweep sweep(n);
  if (threads <= 1) {
    std::vector<FloorDiagram> out;
    for_each_diagram(spec, [&](FloorDiagram d) { out.push_back(std::move(d)); });
    return out;
  }
  const int split = std::min(n, 3);
  std::vector<detail::SweepState> prefixes;
  for (const auto& st : detail::initial_states(spec))
    sweep.run(st, [&](const detail::SweepState& p) { prefixes.push_back(p); }, split);

  std::vector<std::vector<FloorDiagram>> parts(prefixes.size());
  parallel_for(prefixes.size(), threads, [&](std::size_t i) {
    sweep.run(prefixes[i], [&](const detail::SweepState& done) { parts[i].push_back(detail::to_diagram(done)); });
  });
  std::vector<FloorDiagram> out;
  for (auto& part : parts)
    for (auto& d : part) out.push_back(std::move(d));
  return out;
}

}  // namespace gwfloor
