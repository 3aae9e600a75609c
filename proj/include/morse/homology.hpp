#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "morse/matching.hpp"
#include "morse/poset.hpp"

namespace morse {

/// Sparse column: (row, coefficient) pairs with nonzero entries, ascending by
/// row.
using SparseColumn = std::vector<std::pair<int, int>>;

/// Augmented simplicial chain complex. cells[d + 1] lists the d-faces with
/// sorted vertices; boundary[d + 1] has one column per d-face giving its
/// boundary in the (d-1)-faces. The augmentation is boundary[1] (vertices
/// onto the empty face); boundary[0] is empty.
struct ChainComplex {
  std::vector<std::vector<std::vector<int>>> cells;
  std::vector<std::vector<SparseColumn>> boundary;

  int max_dim() const { return static_cast<int>(cells.size()) - 2; }
  std::size_t cells_of_dim(int d) const;
  /// Dense copy of the boundary of dimension d, rows indexed by (d-1)-faces.
  std::vector<std::vector<int>> dense_boundary(int d) const;
};

/// Boundary with sign (-1)^k for deleting the k-th smallest vertex.
ChainComplex chain_complex(const SimplicialComplex& c);
ChainComplex chain_complex(const FacePoset& fp);

/// Coefficient field: characteristic 0 (rationals) or a prime p.
struct Field {
  int characteristic = 0;
  static Field rationals() { return {0}; }
  static Field prime(int p);
};

/// Rank of a sparse integer matrix over the field, by exact elimination.
int matrix_rank(const std::vector<SparseColumn>& columns, Field f);

/// Reduced Betti numbers, indexed from dimension -1. The void complex has
/// all Betti numbers zero.
BettiVector betti(const ChainComplex& cc, Field f = Field::rationals());
BettiVector betti(const SimplicialComplex& c, Field f = Field::rationals());

/// Reduced Euler characteristic sum_{d >= -1} (-1)^d f_d.
long long euler_characteristic(const ChainComplex& cc);
long long euler_characteristic(const SimplicialComplex& c);

/// b~_i = 0 for every i != top_dim.
bool is_wedge_of_top_spheres(const BettiVector& b, int top_dim);

/// Checks that every composite boundary vanishes; returns the first
/// dimension d where boundary(d-1) * boundary(d) != 0.
std::optional<int> boundary_squared_violation(const ChainComplex& cc);

}  // namespace morse
