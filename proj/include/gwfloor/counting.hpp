#pragma once
/**
 * @file counting.hpp
 * @brief Quadratically enriched counts as sums over merged floor diagram classes,
 *        plus the consistency checks relating counts for different s.
 */

#include "gwfloor/degree.hpp"
#include "gwfloor/floor_diagram.hpp"
#include "gwfloor/gw_ring.hpp"
#include "gwfloor/merged_diagram.hpp"
#include "gwfloor/multiplicity.hpp"
#include "gwfloor/parallel.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gwfloor {

struct CountResult {
  DegreeSpec spec = DegreeSpec::p2(1);
  int r = 0;
  int s = 0;
  GwElem total;
  BetaForm beta_form;
  Integer rank = 0;
  Integer signature_all_positive = 0;
  Integer signature_all_negative = 0;
  std::size_t class_count = 0;
  std::size_t diagram_count = 0;
  Integer unmerged_rank = 0;  // sum of complex multiplicities before merging
};

struct DiagramClass {
  MergedFloorDiagram representative;  // classified
  GwElem mult;
  std::size_t members = 0;
};

/// Groups the merged diagrams by canonical key and evaluates each class once.
template <class Formulas = StandardFormulas>
std::vector<DiagramClass> collect_classes(const std::vector<FloorDiagram>& diagrams,
                                          const std::vector<PositionPair>& pairs, unsigned threads = 1) {
  std::vector<std::optional<MergedFloorDiagram>> merged(diagrams.size());
  std::vector<std::string> keys(diagrams.size());
  parallel_for(diagrams.size(), threads, [&](std::size_t i) {
    merged[i] = merge(diagrams[i], pairs);
    if (merged[i]) keys[i] = canonical_key(*merged[i]);
  });

  std::vector<DiagramClass> classes;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < diagrams.size(); ++i) {
    if (!merged[i]) continue;
    auto [it, fresh] = index.try_emplace(keys[i], classes.size());
    if (fresh) classes.push_back(DiagramClass{std::move(*merged[i]), GwElem(), 0});
    ++classes[it->second].members;
  }
  parallel_for(classes.size(), threads, [&](std::size_t i) {
    classes[i].representative = classify(std::move(classes[i].representative));
    classes[i].mult = diagram_mult<Formulas>(classes[i].representative);
  });
  return classes;
}

namespace detail {
inline void require_point_count(const DegreeSpec& spec, int s) {
  if (s < 0 || 2 * s > n_delta(spec))
    throw std::invalid_argument("need 0 <= 2s <= " + std::to_string(n_delta(spec)) + " for " + spec.to_string());
}
}  // namespace detail

/// Sum of class multiplicities with rank and signatures, but no beta decomposition.
template <class Formulas = StandardFormulas>
CountResult count_total(const DegreeSpec& spec, const std::vector<FloorDiagram>& diagrams, int s,
                        std::optional<std::vector<PositionPair>> pairs = std::nullopt, unsigned threads = 1) {
  detail::require_point_count(spec, s);
  const auto chosen = normalize_pairs(pairs ? *pairs : default_pairs(s), n_delta(spec));
  if (static_cast<int>(chosen.size()) != s) throw std::invalid_argument("pair count differs from s");
  const auto classes = collect_classes<Formulas>(diagrams, chosen, threads);
  CountResult out;
  out.spec = spec;
  out.s = s;
  out.r = n_delta(spec) - 2 * s;
  out.total = GwElem(s);
  for (const auto& c : classes) out.total += c.mult;
  out.class_count = classes.size();
  out.diagram_count = diagrams.size();
  for (const auto& d : diagrams) out.unmerged_rank += complex_multiplicity(d);
  out.rank = rank(out.total);
  out.signature_all_positive = signature_uniform(out.total, 1);
  out.signature_all_negative = signature_uniform(out.total, -1);
  return out;
}

template <class Formulas = StandardFormulas>
CountResult count_from(const DegreeSpec& spec, const std::vector<FloorDiagram>& diagrams, int s,
                       std::optional<std::vector<PositionPair>> pairs = std::nullopt, unsigned threads = 1) {
  CountResult out = count_total<Formulas>(spec, diagrams, s, std::move(pairs), threads);
  out.beta_form = beta_decompose(out.total);
  return out;
}

/// The count with s merged pairs (default: the leftmost pairs). Throws ResidualNotInSpan if the
/// total has no beta form.
template <class Formulas = StandardFormulas>
CountResult count(const DegreeSpec& spec, int s, std::optional<std::vector<PositionPair>> pairs = std::nullopt,
                  unsigned threads = 1) {
  detail::require_point_count(spec, s);
  return count_from<Formulas>(spec, enumerate(spec, threads), s, std::move(pairs), threads);
}

/// Number of rational degree d plane curves through 3d - 1 general points.
inline Integer kontsevich(int d) {
  if (d < 1) throw std::invalid_argument("kontsevich: degree must be positive");
  std::vector<Integer> n(d + 1);
  n[1] = 1;
  for (int k = 2; k <= d; ++k) {
    Integer sum = 0;
    for (int a = 1; a < k; ++a) {
      const int b = k - a;
      const Integer aa = Integer(a) * a, bb = Integer(b) * b;
      sum += n[a] * n[b] *
             (aa * bb * detail::binomial(3 * k - 4, 3 * a - 2) - aa * a * b * detail::binomial(3 * k - 4, 3 * a - 1));
    }
    n[k] = sum;
  }
  return n[d];
}

/// Setting d_s := 1 in the count with s pairs gives the count with s - 1 pairs.
inline bool square_substitution_holds(const GwElem& with_s, const GwElem& with_s_minus_one) {
  const int s = with_s.num_params();
  if (s == 0) return true;
  if (with_s_minus_one.num_params() != s - 1) throw std::invalid_argument("parameter counts are not adjacent");
  return equals_mod(with_num_params(substitute_square(with_s, s), s - 1), with_s_minus_one);
}

inline bool verify_square_substitution(const DegreeSpec& spec, int s, unsigned threads = 1) {
  if (s == 0) return true;
  const auto diagrams = enumerate(spec, threads);
  return square_substitution_holds(count_total(spec, diagrams, s, std::nullopt, threads).total,
                                   count_total(spec, diagrams, s - 1, std::nullopt, threads).total);
}

struct RankSignatureReport {
  std::vector<Integer> ranks;
  std::vector<Integer> signatures_positive;
  std::vector<Integer> signatures_negative;
  std::vector<Integer> one_coeffs;
  std::optional<Integer> expected_rank;  // P2 only
  bool rank_constant = true;
  bool rank_matches_expected = true;
  bool positive_signature_constant = true;
  bool negative_signature_matches_one_coeff = true;

  bool ok() const {
    return rank_constant && rank_matches_expected && positive_signature_constant &&
           negative_signature_matches_one_coeff;
  }
};

inline RankSignatureReport verify_rank_and_signatures(const DegreeSpec& spec, unsigned threads = 1) {
  RankSignatureReport rep;
  const auto diagrams = enumerate(spec, threads);
  if (spec.family() == SurfaceFamily::P2) rep.expected_rank = kontsevich(spec.param(0));
  for (int s = 0; 2 * s <= n_delta(spec); ++s) {
    const auto res = count_from(spec, diagrams, s, std::nullopt, threads);
    rep.ranks.push_back(res.rank);
    rep.signatures_positive.push_back(res.signature_all_positive);
    rep.signatures_negative.push_back(res.signature_all_negative);
    rep.one_coeffs.push_back(res.beta_form.one_coeff);
    rep.rank_constant = rep.rank_constant && res.rank == rep.ranks.front();
    rep.positive_signature_constant =
        rep.positive_signature_constant && res.signature_all_positive == rep.signatures_positive.front();
    rep.negative_signature_matches_one_coeff =
        rep.negative_signature_matches_one_coeff && res.signature_all_negative == res.beta_form.one_coeff;
    if (rep.expected_rank) rep.rank_matches_expected = rep.rank_matches_expected && res.rank == *rep.expected_rank;
  }
  return rep;
}

struct MergeInvarianceReport {
  std::size_t choices = 0;
  std::vector<std::vector<PositionPair>> mismatches;
  bool ok() const { return mismatches.empty(); }
};

inline MergeInvarianceReport merge_invariance_report(const DegreeSpec& spec, const std::vector<FloorDiagram>& diagrams,
                                                     int s, unsigned threads = 1) {
  detail::require_point_count(spec, s);
  MergeInvarianceReport rep;
  const GwElem reference = count_total(spec, diagrams, s, std::nullopt, threads).total;
  for (const auto& choice : all_pair_choices(n_delta(spec), s)) {
    ++rep.choices;
    if (!equals_mod(count_total(spec, diagrams, s, choice, threads).total, reference))
      rep.mismatches.push_back(choice);
  }
  return rep;
}

inline bool verify_merge_invariance(const DegreeSpec& spec, int s, unsigned threads = 1) {
  return merge_invariance_report(spec, enumerate(spec, threads), s, threads).ok();
}

/// Difference of the two counts with every h removed.
inline GwElem witt_compare(const DegreeSpec& a, const DegreeSpec& b, int s, unsigned threads = 1) {
  const GwElem diff = count_total(a, enumerate(a, threads), s, std::nullopt, threads).total -
                      count_total(b, enumerate(b, threads), s, std::nullopt, threads).total;
  return diff - diff.coeff(GwMonomial::minus_one()) * GwElem::hyperbolic(s);
}

/// c when e is equivalent to c<1> up to the two-shift relations, otherwise nothing.
inline std::optional<Integer> multiple_of_one(const GwElem& e) {
  const Integer c = rank(e);
  if (equals_mod(e, c * GwElem::one(e.num_params()))) return c;
  return std::nullopt;
}

}  // namespace gwfloor
