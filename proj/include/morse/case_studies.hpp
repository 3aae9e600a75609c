#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morse/lex_morse.hpp"
#include "morse/reduced_words.hpp"

namespace morse {

// ---------------------------------------------------------------- weak order

/// Right weak order on S_n: u < u s_i when the length grows, labelled [i].
/// Element ids are one-line strings such as "2143".
LabelledPoset weak_order(int n);
Permutation permutation_from_id(const std::string& id);
std::string permutation_id(const Permutation& p);

enum class WeakMsiType { type1, type2, none };
std::string to_string(WeakMsiType t);

/// type1: (j, i) with j > i+1. type2: (j+1, j, j-1, ..., i, j+1) with i <= j.
WeakMsiType weak_msi_type(const std::vector<int>& segment);

/// Block sizes n_1, ..., n_k when the inversions of p are exactly the pairs
/// inside consecutive blocks; nullopt otherwise.
std::optional<std::vector<int>> ew_blocks(const Permutation& p);
/// Dimension of the sphere predicted for a full block structure:
/// sum (n_i - 1) - 2.
int ew_sphere_dim(const std::vector<int>& blocks);

// ------------------------------------------------------------------ PD(1^n,q)

/// Normalized vector (first nonzero coordinate 1) over F_q.
struct Line {
  std::vector<int> coords;
  int q = 2;
  friend bool operator==(const Line&, const Line&) = default;
  friend auto operator<=>(const Line&, const Line&) = default;
};

/// All lines of F_q^n in lexicographic order of their normalized vectors.
std::vector<Line> all_lines(int n, int q);
bool is_prime(int q);
/// Rank of a family of vectors over F_q.
int rank_mod_q(std::vector<std::vector<int>> rows, int q);

struct PdPoset {
  int n = 0;
  int q = 2;
  std::vector<Line> lines;  // ground set in the order omega; line k has label k+1
  LabelledPoset lp;

  /// Line labels (1-based) of an element id, empty for the bottom and for
  /// the top.
  std::vector<int> element_lines(const std::string& id) const;
  std::string top_id() const { return "1"; }
};

/// PD(1^n,q) with line order omega given as a permutation of all_lines(n,q)
/// (default: lexicographic). Labels are positions in omega, covers into the
/// top carry the sentinel label.
PdPoset pd_poset(int n, int q, std::optional<std::vector<Line>> omega = std::nullopt);

/// Internally active labels of a basis (labels are 1-based positions in
/// pd.lines): l is active iff no smaller line has nonzero coefficient on l
/// in its expansion in the basis.
std::set<int> internal_activity(const PdPoset& pd, const std::vector<int>& basis);
/// All bases as sorted label vectors.
std::vector<std::vector<int>> pd_bases(const PdPoset& pd);

/// Basis of the coatom of a chain in pd.lp or an interval of it.
std::vector<int> pd_chain_basis(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain);
/// Internally active labels on the chain.
std::set<int> pd_nonessential_set(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain);
/// Labels b_m > ... > b_1 > a < c_1 < ... < c_p with every c active and a
/// not active.
bool pd_critical_shape(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain);

// ------------------------------------------------------------------- Pi_{S_n}

/// Cycles of p, each rotated to start at its minimum, sorted by minimum.
std::vector<std::vector<int>> cycles_of(const Permutation& p);
Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int n);
std::string cycle_string(const Permutation& p);

struct PiPoset {
  int n = 0;
  LabelledPoset lp;
  std::string top_id() const { return "top"; }
};

/// Permutations ordered by shuffling two cycles into one, top adjoined.
/// Label of u < v: [max(min C1, min C2), a_2, ..., a_n, min(min C1, min C2)]
/// where (1 a_2 ... a_n) is the smallest coatom above v in the order of the
/// words a_2 ... a_n. Covers into the top carry the sentinel label.
PiPoset pi_sn_poset(int n);

/// (1 a_2 ... a_n) as the word a_2 ... a_n.
std::vector<int> coatom_word(const Permutation& coatom);

using MergeTree = std::set<std::pair<int, int>>;

/// The two cycles of u merged by the cover u < v.
std::pair<std::vector<int>, std::vector<int>> merged_cycles(const Permutation& u,
                                                            const Permutation& v);
/// Tree of merge steps (min C1, min C2) along a chain; covers into the top
/// are skipped.
MergeTree merge_tree(const LabelledPoset& lp, const Chain& chain);

/// Tape merge of two cycles, each read from its minimum.
std::vector<int> lex_smallest_shuffle(const std::vector<int>& a, const std::vector<int>& b);

/// Inversions (x, y), x < y, of the merge of a and b as it appears in the
/// coatom (read from its minimum) that the lex-smallest tape merge of a and b
/// does not have. Empty iff the merge is the lex-smallest shuffle.
std::set<std::pair<int, int>> unforced_inversions(const std::vector<int>& a,
                                                  const std::vector<int>& b,
                                                  const Permutation& coatom);

/// Coatom of a chain ending at the top (the element below the top).
Permutation chain_coatom(const LabelledPoset& lp, const Chain& chain);

/// Tree edges (1, i) whose component after removing all (1, *) edges has no
/// unforced inversions with the other components.
std::set<std::pair<int, int>> pi_nonessential_set(const LabelledPoset& lp, const Chain& chain);

// ------------------------------------------------------------- monoid posets

struct MonoidSpec {
  std::vector<std::vector<int>> generators;
  std::vector<int> top;
};

/// k[ab, a^2, c, d, e, b^2] with top a^2 b^2 c d e.
MonoidSpec lex_examp_spec();
/// k[ab, cd, ef, ad, be, cf, g] with top abcdefg.
MonoidSpec two_paths_spec();

/// Divisibility interval [0, top] of the monoid generated by spec.generators:
/// elements m with m and top - m both expressible, covers m < m + g_k labelled
/// [k] (1-based). Ids are exponent vectors written "2.0.1".
LabelledPoset monoid_interval(const MonoidSpec& spec);
std::vector<int> exponent_from_id(const std::string& id);

/// Finds the maximal chain whose label sequence (simple labels) is given.
std::optional<Chain> chain_with_labels(const LabelledPoset& lp, const std::vector<int>& labels);

}  // namespace morse
