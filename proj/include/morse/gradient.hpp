#pragma once

#include <map>
#include <utility>
#include <vector>

#include "morse/matching.hpp"

namespace morse {

/// Alternating walk tau = c0 > c1 / c2 > c3 / ... > c_{2k+1} = sigma. Each
/// down-step c_{2i} > c_{2i+1} is an unmatched incidence and each up-step
/// c_{2i+1} / c_{2i+2} is a matched pair.
struct GradientPath {
  std::vector<CellId> cells;

  CellId source() const { return cells.front(); }
  CellId target() const { return cells.back(); }
  /// Number of down-steps.
  int length() const { return static_cast<int>(cells.size()) / 2; }
  friend bool operator==(const GradientPath&, const GradientPath&) = default;
  friend auto operator<=>(const GradientPath&, const GradientPath&) = default;
};

/// Checks the alternation and matching conditions of a path against m.
bool is_gradient_path(const FacePoset& fp, const Matching& m, const GradientPath& path);

/// Default cap on enumerated paths between one pair of cells.
inline constexpr std::size_t kMaxPathsPerPair = 100000;

/// All gradient paths from tau down to sigma (dim tau = dim sigma + 1), by
/// depth-first search with children in ascending cell id. Both endpoints must
/// be critical.
std::vector<GradientPath> gradient_paths(const FacePoset& fp, const Matching& m, CellId tau,
                                         CellId sigma, std::size_t cap = kMaxPathsPerPair);

/// Number of gradient paths tau -> sigma, counted by dynamic programming
/// over the (acyclic) gradient digraph without enumerating them.
long long count_gradient_paths(const FacePoset& fp, const Matching& m, CellId tau, CellId sigma);

/// Parallel edges of the multi-graph face poset between one pair of critical
/// cells: one path per edge.
struct PmEdge {
  CellId upper;
  CellId lower;
  std::vector<GradientPath> paths;
  int multiplicity() const { return static_cast<int>(paths.size()); }
};

/// Critical cells with one edge per gradient path between critical cells of
/// consecutive dimension.
struct MultiGraphFacePoset {
  std::vector<CellId> vertices;  // ascending
  std::vector<PmEdge> edges;     // ascending by (upper, lower)

  const PmEdge* edge(CellId upper, CellId lower) const;
  int multiplicity(CellId upper, CellId lower) const;
  int total_edges() const;
};

/// Builds P^M. Throws when m is not acyclic.
MultiGraphFacePoset build_pm(const FacePoset& fp, const Matching& m);

/// Acyclicity of a matching on P^M: matched edges point up, every other
/// parallel edge points down. Matched pairs must be single edges.
bool is_pm_matching_acyclic(const MultiGraphFacePoset& pm, const Matching& pm_matching);

/// Reverses one gradient path: matched up-steps become unmatched and every
/// down-step becomes matched. The result is a valid matching but need not be
/// acyclic. Throws when the path does not belong to m.
Matching reverse_path(const FacePoset& fp, const Matching& m, const GradientPath& path);

/// Pairs are (sigma_i, tau_i) with dim tau_i = dim sigma_i + 1. True iff the
/// identity is the only permutation pi with a gradient path
/// tau_i -> sigma_pi(i) for every i. Throws unless each listed pair has a
/// unique path.
bool verify_rev_many(const FacePoset& fp, const Matching& m,
                     const std::vector<std::pair<CellId, CellId>>& pairs);

/// Lifts an acyclic matching on P^M (pairs given as (lower, upper) critical
/// cells) to the face poset by reversing the gradient path of every matched
/// edge at once. Fails loudly if two chosen paths toggle the same incidence
/// or if the result is not an acyclic matching.
Matching cancel_via_pm_matching(const FacePoset& fp, const Matching& m,
                                const Matching& pm_matching);
Matching cancel_via_pm_matching(const FacePoset& fp, const Matching& m,
                                const MultiGraphFacePoset& pm, const Matching& pm_matching);

/// Greedy acyclic matching on P^M: visits single edges by descending upper
/// dimension, then ascending (upper, lower), keeping each edge whose endpoints
/// are free and whose addition leaves the P^M matching acyclic.
Matching greedy_pm_matching(const MultiGraphFacePoset& pm, const FacePoset& fp);

/// Union of per-piece matchings over a decomposition of the cells. Piece ids
/// index the elements of piece_order. Checks that every cell lies in exactly
/// one piece, that the cells in pieces below any piece form a subcomplex,
/// that each piece matching stays inside its piece, and that the union is
/// acyclic.
Matching union_matchings(const FacePoset& fp, const std::vector<int>& decomposition,
                         const Poset& piece_order, const std::map<int, Matching>& per_piece);

}  // namespace morse
