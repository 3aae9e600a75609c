#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morse/gradient.hpp"
#include "morse/reduced_words.hpp"

namespace morse {

/// Closed range of proper ranks [lo, hi] of a saturated chain.
struct RankInterval {
  int lo;
  int hi;
  int height() const { return hi - lo + 1; }
  bool contains(int r) const { return lo <= r && r <= hi; }
  friend bool operator==(const RankInterval&, const RankInterval&) = default;
  friend auto operator<=>(const RankInterval&, const RankInterval&) = default;
};

/// Minimal skipped intervals of one facet and the outcome of truncating
/// them.
struct IntervalSystem {
  Chain facet;                         // elements at ranks 0..r
  std::vector<RankInterval> msis;      // ascending by lo (and by hi)
  std::vector<RankInterval> j_intervals;
  std::vector<int> j_source;           // index into msis for each J-interval
  std::optional<std::vector<int>> critical;  // rank set of the critical cell
  /// For a facet without critical cell: the lowest rank left uncovered by
  /// the (truncated) system at the level where covering first fails.
  std::optional<int> cone_rank;

  int proper_ranks() const { return static_cast<int>(facet.size()) - 2; }
  bool contributes() const { return critical.has_value(); }
  /// Dimension of the critical cell, i.e. #J-intervals - 1.
  std::optional<int> critical_dim() const;
  /// True iff the rank set meets every msi, i.e. the face lies in no earlier
  /// facet.
  bool in_piece(const std::vector<int>& ranks) const;
  /// Rank toggled by the per-facet matching for a face of the piece, or
  /// nullopt for the critical cell.
  std::optional<int> toggle_rank(const std::vector<int>& ranks) const;
};

/// Maximal chains sorted by their label sequences (ties broken by chain).
std::vector<Chain> lex_order_facets(const LabelledPoset& lp);

/// Interval system of facets[j] (0-based) against facets[0..j-1]: the
/// inclusion-minimal sets of ranks where an earlier facet differs. Throws if
/// a minimal set is not an interval. Also runs the truncation.
IntervalSystem minimal_skipped_intervals(const std::vector<Chain>& facets, std::size_t j);

/// Runs the truncation loop on sys.msis and fills j_intervals, j_source,
/// critical and cone_rank. Returns the critical rank set.
std::optional<std::vector<int>> critical_cell_of_facet(IntervalSystem& sys);

/// Rank set of a cell lying on a facet (ranks of its elements).
std::vector<int> ranks_of_cell(const Poset& p, const FacePoset& fp, CellId c);
/// Cell of facet at the given proper ranks.
CellId cell_at_ranks(const FacePoset& fp, const Chain& facet, const std::vector<int>& ranks);

/// Matching on the piece of facets[j] (faces meeting every msi).
Matching facet_matching(const FacePoset& fp, const IntervalSystem& sys);

struct LexMorseResult {
  FacePoset face_poset;
  std::vector<Chain> facets;
  std::vector<IntervalSystem> systems;
  std::vector<int> piece;  // facet index per cell
  Matching matching;
  /// Critical cell contributed by each facet, if any.
  std::vector<std::optional<CellId>> critical_by_facet;

  /// Index of the facet whose piece holds c.
  int facet_of(CellId c) const { return piece.at(c); }
};

/// The lexicographic discrete Morse function: per-facet matchings combined
/// over the lexicographic facet filtration with union_matchings.
LexMorseResult lex_morse(const LabelledPoset& lp);
Matching lex_morse_matching(const LabelledPoset& lp);

struct LabellingClassReport {
  bool least_increasing = true;
  bool least_content_increasing = true;
  bool ordered_level = true;
  std::vector<std::string> witnesses;
};

/// Exhaustive check over every interval of rank at least 2 and every level
/// of the poset.
LabellingClassReport classify_labelling(const LabelledPoset& lp);

struct EffectiveAction {
  std::optional<Chain> result;
  bool precondition_failed = false;  // no descent at rank i or bad indices
  bool ambiguous = false;            // more than one replacement element
};

/// Swaps the labels at positions i, i+1 of a saturated chain by replacing the
/// rank-i element.
EffectiveAction acts_effectively(const LabelledPoset& lp, const Chain& chain, int i);

enum class PathKind { unique_path, two_paths, not_applicable };
std::string to_string(PathKind k);

/// Down (d_r) or up (u_r) step, indexed by the rank of the removed or added
/// element.
struct Step {
  char kind;  // 'd' or 'u'
  int rank;
  friend bool operator==(const Step&, const Step&) = default;
};
std::vector<Step> step_word(const Poset& p, const FacePoset& fp, const GradientPath& path);
std::string format_steps(const std::vector<Step>& steps);

struct RedExpResult {
  PathKind kind = PathKind::not_applicable;
  Permutation pi;                 // positional permutation taking tau's labels to sigma's
  std::optional<Word> word;       // the reduced word realized by a gradient path
  std::optional<GradientPath> path;
  std::string hypothesis;         // which hypothesis was verified, or why none
  long long exhaustive_count = 0;
  bool agrees = false;            // classification matches the exhaustive count
};

/// Constructs the gradient path tau -> sigma from a reduced word acting by
/// d_r u_r steps and classifies it as unique or as the two-path exception.
/// Always cross-checked against exhaustive enumeration.
RedExpResult red_exp_path(const LabelledPoset& lp, const LexMorseResult& lm, CellId tau,
                          CellId sigma);

/// Simulates d_{i1} u_{i1} ... d_{iq} (no final up-step) from tau through the
/// matching. Returns the path when every step is legal.
std::optional<GradientPath> simulate_word(const Poset& p, const FacePoset& fp, const Matching& m,
                                          CellId tau, const Word& w);

}  // namespace morse
