#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morse/error.hpp"

namespace morse {

/// Edge labels are integer sequences compared lexicographically. Simple
/// labels have length one; composite labels (e.g. merge index plus a coatom
/// word) are longer.
using Label = std::vector<int>;

/// Label carried by covers into an adjoined top element. Compares above every
/// real label.
inline Label sentinel_label() { return Label{std::numeric_limits<int>::max()}; }
inline bool is_sentinel(const Label& l) { return l == sentinel_label(); }

/// A chain of element indices, listed bottom to top.
using Chain = std::vector<int>;

/// Finite poset given by its cover relations. Elements carry opaque string
/// ids; all algorithms work on dense indices 0..size()-1. Immutable once
/// built.
class Poset {
 public:
  Poset() = default;

  /// Validates the cover digraph (known endpoints, acyclic, transitively
  /// reduced) and the declared bottom/top. Computes a rank function when the
  /// poset is graded; non-graded posets are accepted and only rejected by
  /// rank-dependent operations.
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& covers,
                     std::optional<std::string> bottom = std::nullopt,
                     std::optional<std::string> top = std::nullopt);

  /// Same as build() with covers given by element index.
  static Poset from_indices(std::vector<std::string> elements,
                            std::vector<std::pair<int, int>> covers,
                            std::optional<int> bottom = std::nullopt,
                            std::optional<int> top = std::nullopt);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int v) const { return ids_.at(v); }
  const std::vector<std::string>& ids() const { return ids_; }
  int index_of(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  /// Index into covers() of the pair (lower, upper), or -1.
  int cover_index(int lower, int upper) const;
  /// Upper covers of v, ascending by index.
  std::span<const int> up(int v) const { return up_.at(v); }
  std::span<const int> down(int v) const { return down_.at(v); }

  bool leq(int a, int b) const {
    return (leq_[a][b >> 6] >> (b & 63)) & 1u;
  }
  bool less(int a, int b) const { return a != b && leq(a, b); }

  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }
  /// Throws unless both bottom and top are declared.
  int require_bottom() const;
  int require_top() const;

  bool graded() const { return rank_.has_value(); }
  /// Rank with minimal elements at 0. Throws NotGraded when not graded.
  int rank(int v) const;
  int max_rank() const;

  /// Elements ordered by a fixed linear extension (ascending rank, then index).
  const std::vector<int>& linear_extension() const { return linear_; }

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::map<std::pair<int, int>, int> cover_lookup_;
  std::vector<std::vector<int>> up_;
  std::vector<std::vector<int>> down_;
  std::vector<std::vector<std::uint64_t>> leq_;
  std::optional<int> bottom_;
  std::optional<int> top_;
  std::optional<std::vector<int>> rank_;
  std::vector<int> linear_;
};

/// Labels on the covers of a poset, aligned with Poset::covers().
class EdgeLabelling {
 public:
  EdgeLabelling() = default;
  explicit EdgeLabelling(std::vector<Label> labels) : labels_(std::move(labels)) {}

  const Label& at(int cover) const { return labels_.at(cover); }
  const Label& at(const Poset& p, int lower, int upper) const;
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }

  /// Throws when the size does not match or two up-covers of one element
  /// share a label.
  void validate(const Poset& p) const;

 private:
  std::vector<Label> labels_;
};

struct LabelledPoset {
  Poset poset;
  EdgeLabelling labels;

  /// Label sequence read along a saturated chain.
  std::vector<Label> chain_labels(const Chain& chain) const;
};

/// Closed interval [x, y] with bottom x and top y. Element ids are kept.
Poset interval(const Poset& p, int x, int y);
/// Interval together with the restricted labelling.
LabelledPoset interval(const LabelledPoset& lp, int x, int y);

/// Every maximal chain from bottom to top, in depth-first order with upper
/// covers visited by ascending index.
std::vector<Chain> saturated_chains(const Poset& p);

/// Recursive Möbius number mu(bottom, top).
long long mobius(const Poset& p);
/// mu(bottom, y) for every element y above bottom (others 0).
std::vector<long long> mobius_from_bottom(const Poset& p);

/// Abstract simplicial complex stored by its facets. A face is a sorted
/// vector of vertex indices. The complex {emptyset} has a single empty
/// facet; the void complex has none.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Sorts faces, removes duplicates and non-maximal faces.
  explicit SimplicialComplex(std::vector<std::vector<int>> faces);

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  int dimension() const;

 private:
  std::vector<std::vector<int>> facets_;
};

/// Order complex of the proper part of a bounded poset. Vertices are poset
/// element indices.
SimplicialComplex order_complex(const Poset& p);

using CellId = int;

/// Face poset of a simplicial complex including the empty face (dimension
/// -1). Cells are ordered by (dimension, vertex list); the empty cell has id 0.
class FacePoset {
 public:
  FacePoset() = default;
  explicit FacePoset(const SimplicialComplex& c);

  int size() const { return static_cast<int>(cells_.size()); }
  const std::vector<int>& vertices(CellId c) const { return cells_.at(c); }
  int dim(CellId c) const { return static_cast<int>(cells_.at(c).size()) - 1; }
  int max_dim() const { return max_dim_; }
  /// Codimension-one faces, ascending by id.
  const std::vector<CellId>& facets(CellId c) const { return facets_.at(c); }
  /// Codimension-one cofaces, ascending by id.
  const std::vector<CellId>& cofacets(CellId c) const { return cofacets_.at(c); }
  bool is_incidence(CellId lower, CellId upper) const;
  std::optional<CellId> find(const std::vector<int>& vertices) const;
  CellId at(const std::vector<int>& vertices) const;
  /// Cells of the given dimension, ascending by id.
  std::vector<CellId> cells_of_dim(int d) const;
  int count_incidences() const;

 private:
  std::vector<std::vector<int>> cells_;
  std::map<std::vector<int>, CellId> lookup_;
  std::vector<std::vector<CellId>> facets_;
  std::vector<std::vector<CellId>> cofacets_;
  int max_dim_ = -1;
};

}  // namespace morse
