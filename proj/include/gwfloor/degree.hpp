#pragma once
/**
 * @file degree.hpp
 * @brief The five toric del Pezzo degrees and the floor data derived from them.
 */

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gwfloor {

enum class SurfaceFamily { P2, P1xP1, Bl1, Bl2, Bl3 };

inline std::string family_name(SurfaceFamily f) {
  switch (f) {
    case SurfaceFamily::P2: return "p2";
    case SurfaceFamily::P1xP1: return "p1xp1";
    case SurfaceFamily::Bl1: return "bl1";
    case SurfaceFamily::Bl2: return "bl2";
    case SurfaceFamily::Bl3: return "bl3";
  }
  return "?";
}

class DegreeSpec {
 public:
  static DegreeSpec p2(int d) { return DegreeSpec(SurfaceFamily::P2, {d}); }
  static DegreeSpec p1xp1(int a1, int a2) { return DegreeSpec(SurfaceFamily::P1xP1, {a1, a2}); }
  static DegreeSpec bl1(int d, int a1) { return DegreeSpec(SurfaceFamily::Bl1, {d, a1}); }
  static DegreeSpec bl2(int d, int a1, int a2) { return DegreeSpec(SurfaceFamily::Bl2, {d, a1, a2}); }
  static DegreeSpec bl3(int d, int a1, int a2, int a3) {
    return DegreeSpec(SurfaceFamily::Bl3, {d, a1, a2, a3});
  }

  static DegreeSpec make(SurfaceFamily family, std::vector<int> params) {
    return DegreeSpec(family, std::move(params));
  }

  /// "p2:d", "p1xp1:a1,a2", "bl1:d,a1", "bl2:d,a1,a2", "bl3:d,a1,a2,a3".
  static DegreeSpec parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("degree spec needs 'family:params'");
    const std::string_view name = text.substr(0, colon);
    SurfaceFamily family;
    if (name == "p2") family = SurfaceFamily::P2;
    else if (name == "p1xp1") family = SurfaceFamily::P1xP1;
    else if (name == "bl1") family = SurfaceFamily::Bl1;
    else if (name == "bl2") family = SurfaceFamily::Bl2;
    else if (name == "bl3") family = SurfaceFamily::Bl3;
    else throw std::invalid_argument("unknown surface family '" + std::string(name) + "'");

    std::vector<int> params;
    std::string_view rest = text.substr(colon + 1);
    for (;;) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("bad degree parameter '" + std::string(tok) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return DegreeSpec(family, std::move(params));
  }

  SurfaceFamily family() const { return family_; }
  const std::vector<int>& params() const { return params_; }
  int param(std::size_t i) const { return params_.at(i); }

  std::string to_string() const {
    std::string out = family_name(family_) + ":";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(params_[i]);
    }
    return out;
  }

  friend bool operator==(const DegreeSpec&, const DegreeSpec&) = default;

 private:
  DegreeSpec(SurfaceFamily family, std::vector<int> params)
      : family_(family), params_(std::move(params)) {
    validate();
  }

  void validate() const {
    static const std::map<SurfaceFamily, std::size_t> arity = {
        {SurfaceFamily::P2, 1}, {SurfaceFamily::P1xP1, 2}, {SurfaceFamily::Bl1, 2},
        {SurfaceFamily::Bl2, 3}, {SurfaceFamily::Bl3, 4}};
    auto bad = [&](const std::string& why) {
      throw std::invalid_argument("invalid degree " + to_string() + ": " + why);
    };
    if (params_.size() != arity.at(family_))
      bad("expected " + std::to_string(arity.at(family_)) + " parameters");
    if (std::any_of(params_.begin(), params_.end(), [](int v) { return v < 1; }))
      bad("parameters must be positive");
    const auto& p = params_;
    switch (family_) {
      case SurfaceFamily::P2:
      case SurfaceFamily::P1xP1: break;
      case SurfaceFamily::Bl1:
        if (p[1] > p[0]) bad("need a1 <= d");
        break;
      case SurfaceFamily::Bl2:
        if (p[1] < p[2]) bad("need a1 >= a2");
        if (p[1] + p[2] > p[0]) bad("need a1 + a2 <= d");
        break;
      case SurfaceFamily::Bl3:
        if (p[1] < p[2]) bad("need a1 >= a2");
        if (p[1] + p[2] > p[0] || p[1] + p[3] > p[0] || p[2] + p[3] > p[0])
          bad("need a1 + a2, a1 + a3, a2 + a3 <= d");
        break;
    }
  }

  SurfaceFamily family_;
  std::vector<int> params_;
};

/// Number of point conditions: boundary lattice points of the polygon minus one.
inline int n_delta(const DegreeSpec& spec) {
  const auto& p = spec.params();
  switch (spec.family()) {
    case SurfaceFamily::P2: return 3 * p[0] - 1;
    case SurfaceFamily::P1xP1: return 2 * (p[0] + p[1]) - 1;
    case SurfaceFamily::Bl1: return 3 * p[0] - p[1] - 1;
    case SurfaceFamily::Bl2: return 3 * p[0] - p[1] - p[2] - 1;
    case SurfaceFamily::Bl3: return 3 * p[0] - p[1] - p[2] - p[3] - 1;
  }
  return 0;
}

struct WhiteSpec {
  int count = 0;
  std::vector<int> leaks;  // sorted multiset over all white vertices
  friend bool operator==(const WhiteSpec&, const WhiteSpec&) = default;
};

struct EndSpec {
  int incoming = 0;
  int outgoing = 0;
  friend bool operator==(const EndSpec&, const EndSpec&) = default;
};

namespace detail {
// Whites counted by how many carry a -1 leak and how many carry a +1 leak.
struct LeakBudget {
  int whites, minus, plus;
};

inline LeakBudget leak_budget(const DegreeSpec& spec) {
  const auto& p = spec.params();
  switch (spec.family()) {
    case SurfaceFamily::P2: return {p[0], 0, p[0]};
    case SurfaceFamily::P1xP1: return {p[0], 0, 0};
    case SurfaceFamily::Bl1: return {p[0], 0, p[0] - p[1]};
    case SurfaceFamily::Bl2: return {p[0], p[2], p[0] - p[1]};
    case SurfaceFamily::Bl3: return {p[0] - p[3], p[2], p[0] - p[1] - p[3]};
  }
  return {0, 0, 0};
}
}  // namespace detail

inline WhiteSpec white_spec(const DegreeSpec& spec) {
  const auto b = detail::leak_budget(spec);
  WhiteSpec out{b.whites, {}};
  out.leaks.insert(out.leaks.end(), b.minus, -1);
  out.leaks.insert(out.leaks.end(), b.whites - b.minus - b.plus, 0);
  out.leaks.insert(out.leaks.end(), b.plus, 1);
  return out;
}

inline EndSpec end_spec(const DegreeSpec& spec) {
  const auto& p = spec.params();
  switch (spec.family()) {
    case SurfaceFamily::P2: return {p[0], 0};
    case SurfaceFamily::P1xP1: return {p[1], p[1]};
    case SurfaceFamily::Bl1: return {p[0] - p[1], 0};
    case SurfaceFamily::Bl2: return {p[0] - p[1] - p[2], 0};
    case SurfaceFamily::Bl3: return {p[0] - p[1] - p[2], p[3]};
  }
  return {};
}

/// Leak multiset carried by one white vertex: {0}, {-1}, {1} or the canceling pair {-1, 1}.
using LeakSet = std::vector<int>;

inline int leak_sum(const LeakSet& leaks) {
  int s = 0;
  for (int v : leaks) s += v;
  return s;
}

/// Every way to distribute the leak budget over the white vertices, as (leak set, count) lists.
/// Each floor has a left and a right side; a -1 leak sits on the left, a +1 leak on the right,
/// so one floor may carry both.
inline std::vector<std::vector<std::pair<LeakSet, int>>> white_label_options(const DegreeSpec& spec) {
  const auto b = detail::leak_budget(spec);
  std::vector<std::vector<std::pair<LeakSet, int>>> out;
  for (int both = 0; both <= std::min(b.minus, b.plus); ++both) {
    const int plain = b.whites - b.minus - b.plus + both;
    if (plain < 0) continue;
    std::vector<std::pair<LeakSet, int>> option;
    auto put = [&](LeakSet leaks, int n) {
      if (n > 0) option.emplace_back(std::move(leaks), n);
    };
    put({-1}, b.minus - both);
    put({-1, 1}, both);
    put({0}, plain);
    put({1}, b.plus - both);
    std::sort(option.begin(), option.end());
    out.push_back(std::move(option));
  }
  return out;
}

}  // namespace gwfloor
