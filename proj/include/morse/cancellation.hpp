#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morse/case_studies.hpp"
#include "morse/gradient.hpp"
#include "morse/lex_morse.hpp"

namespace morse {

enum class Strategy { boolean_ne, pm_greedy, explicit_pairs };
std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct CancellationReport {
  Matching matching;
  MorseVector before;
  MorseVector after;
  /// P^M matchings applied, one per round, as (lower, upper) critical cells.
  std::vector<Matching> rounds;
  std::size_t cancelled_pairs = 0;
};

/// One round: the given (lower, upper) critical pairs are cancelled at once.
CancellationReport cancel_explicit_pairs(const FacePoset& fp, const Matching& m,
                                         const std::vector<std::pair<CellId, CellId>>& pairs);

/// Repeats build_pm, greedy_pm_matching and cancel_via_pm_matching until the
/// greedy matching is empty.
CancellationReport cancel_pm_greedy(const FacePoset& fp, const Matching& m,
                                    std::size_t max_rounds = 64);

/// Critical cells sharing a family key, indexed by the set T of
/// non-essential elements each one carries.
struct BooleanFamily {
  std::vector<int> key;
  std::set<int> ne;
  std::map<std::set<int>, CellId> cells;
  /// The sets T are exactly the subsets of ne.
  bool is_boolean() const;
};

/// (family key, T) of a critical cell.
using FamilyFn = std::function<std::pair<std::vector<int>, std::set<int>>(CellId)>;

/// Groups critical cells by family key. ne is the union of the sets T.
std::vector<BooleanFamily> boolean_families(const std::vector<CellId>& critical,
                                            const FamilyFn& family);

/// Pairs T (without x0) with T + x0, x0 = min ne, in every family with
/// nonempty ne, and cancels all pairs in one round. Throws when a family is
/// not Boolean.
CancellationReport cancel_boolean_families(const FacePoset& fp, const Matching& m,
                                           const std::vector<BooleanFamily>& families);

/// Labels of the facet carrying c that come after its least label, read as
/// the first label component. Sentinel labels are ignored.
std::set<int> labels_after_minimum(const LabelledPoset& lp, const Chain& facet);

/// Family of a lex Morse critical cell of PD(1^n,q) or an interval of it: the
/// basis of its facet.
FamilyFn pd_family(const PdPoset& pd, const LabelledPoset& lp, const LexMorseResult& lm);
/// Family of a lex Morse critical cell of Pi_{S_n}: coatom word and merge tree
/// of its facet.
FamilyFn pi_family(const LabelledPoset& lp, const LexMorseResult& lm);

}  // namespace morse
