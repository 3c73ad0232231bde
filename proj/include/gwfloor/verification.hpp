#pragma once
/**
 * @file verification.hpp
 * @brief Self-check suite: rank and signature invariants, square substitution, merge
 *        invariance, class soundness and comparison against published counts.
 */

#include "gwfloor/counting.hpp"
#include "gwfloor/reference_counts.hpp"

#include <string>
#include <vector>

namespace gwfloor {

enum class VerifyScope { Quick, Full };

struct VerificationFailure {
  std::string check;
  std::string subject;
  std::string detail;
};

struct VerificationReport {
  std::size_t checks = 0;
  std::vector<VerificationFailure> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

inline std::string join(const std::vector<Integer>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + xs[i].str();
  return out;
}

inline std::string describe(const BetaForm& f) {
  std::string out = "h=" + f.h_coeff.str() + " beta=[";
  for (std::size_t i = 0; i < f.beta_coeffs.size(); ++i) out += (i ? "," : "") + f.beta_coeffs[i].str();
  return out + "] one=" + f.one_coeff.str();
}

template <class Formulas>
void verify_degree(const DegreeSpec& spec, const PublishedBlock* published, VerificationReport& rep,
                   unsigned threads) {
  const std::string subject = spec.to_string();
  auto check = [&](bool ok, const std::string& name, const std::string& detail) {
    ++rep.checks;
    if (!ok) rep.failures.push_back({name, subject, detail});
  };

  const auto diagrams = enumerate(spec, threads);
  bool valid = true;
  std::string why;
  for (const auto& d : diagrams) {
    try {
      validate(d, spec);
    } catch (const InvalidDiagram& e) {
      valid = false;
      why = e.what();
      break;
    }
  }
  check(valid, "diagram-invariants", why);

  std::vector<CountResult> rows;
  for (int s = 0; 2 * s <= n_delta(spec); ++s) rows.push_back(count_total<Formulas>(spec, diagrams, s, std::nullopt, threads));

  std::vector<Integer> ranks, sig_pos;
  for (const auto& r : rows) {
    ranks.push_back(r.rank);
    sig_pos.push_back(r.signature_all_positive);
  }
  bool constant = true;
  for (const auto& r : rows) constant = constant && r.rank == rows.front().rank;
  check(constant, "rank-constancy", "ranks over s: " + join(ranks));
  for (const auto& r : rows)
    check(r.rank == r.unmerged_rank, "rank-class-soundness",
          "s=" + std::to_string(r.s) + ": rank " + r.rank.str() + " but unmerged total " + r.unmerged_rank.str());
  if (spec.family() == SurfaceFamily::P2) {
    const Integer expected = kontsevich(spec.param(0));
    bool all = true;
    for (const auto& r : rows) all = all && r.rank == expected;
    check(all, "rank-kontsevich", "ranks over s: " + join(ranks) + ", expected " + expected.str());
  }
  constant = true;
  for (const auto& r : rows) constant = constant && r.signature_all_positive == rows.front().signature_all_positive;
  check(constant, "signature-positive-constancy", "signatures over s: " + join(sig_pos));

  for (auto& r : rows) {
    const std::string at = "s=" + std::to_string(r.s);
    try {
      r.beta_form = beta_decompose(r.total);
      check(true, "beta-decomposition", at);
      check(r.signature_all_negative == r.beta_form.one_coeff, "signature-negative-equals-one-coefficient",
            at + ": signature " + r.signature_all_negative.str() + ", <1> coefficient " + r.beta_form.one_coeff.str());
    } catch (const ResidualNotInSpan& e) {
      check(false, "beta-decomposition", at + ": " + e.what());
    }
  }
  for (std::size_t s = 1; s < rows.size(); ++s)
    check(square_substitution_holds(rows[s].total, rows[s - 1].total), "square-substitution",
          "s=" + std::to_string(s) + " to s=" + std::to_string(s - 1));

  for (int s = 1; 2 * s <= n_delta(spec); ++s) {
    const GwElem& reference = rows[s].total;
    std::size_t bad = 0, total = 0;
    for (const auto& choice : all_pair_choices(n_delta(spec), s)) {
      ++total;
      if (!equals_mod(count_total<Formulas>(spec, diagrams, s, choice, threads).total, reference)) ++bad;
    }
    check(bad == 0, "merge-invariance",
          "s=" + std::to_string(s) + ": " + std::to_string(bad) + " of " + std::to_string(total) + " pair choices differ");
  }

  if (!published) return;
  if (published->complex_count)
    check(rows.front().rank == *published->complex_count, "published-complex-count",
          "rank " + rows.front().rank.str() + ", published " + std::to_string(*published->complex_count));
  for (const auto& row : published->rows) {
    const std::string at = "s=" + std::to_string(row.s);
    if (row.s >= static_cast<int>(rows.size())) {
      check(false, "published-row", at + " outside the valid range");
      continue;
    }
    const auto& got = rows[row.s];
    check(got.total.num_params() == row.s && got.beta_form == row.form(), "published-row",
          at + ": computed " + describe(got.beta_form) + ", published " + describe(row.form()));
  }
}

}  // namespace detail

/// Quick: every property for degrees with at most 9 point conditions. Full: additionally the
/// degrees up to 13 point conditions and the published rows of every block.
template <class Formulas = StandardFormulas>
VerificationReport run_verification(VerifyScope scope, unsigned threads = 1) {
  VerificationReport rep;
  const bool full = scope == VerifyScope::Full;
  for (int d : {1, 2}) detail::verify_degree<Formulas>(DegreeSpec::p2(d), nullptr, rep, threads);
  for (const auto& block : published_blocks()) {
    const DegreeSpec spec = block.degree();
    if (!full && n_delta(spec) > 9) continue;
    detail::verify_degree<Formulas>(spec, full ? &block : nullptr, rep, threads);
  }
  return rep;
}

}  // namespace gwfloor
