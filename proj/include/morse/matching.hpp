#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "morse/poset.hpp"

namespace morse {

/// Partial pairing of face-poset cover edges, stored as (lower, upper) cell
/// pairs. Acyclicity is a property checked separately.
class Matching {
 public:
  using Pair = std::pair<CellId, CellId>;

  Matching() = default;
  explicit Matching(std::set<Pair> pairs) : pairs_(std::move(pairs)) {}

  const std::set<Pair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(CellId lower, CellId upper) const { return pairs_.count({lower, upper}) > 0; }

  void add(CellId lower, CellId upper) { pairs_.emplace(lower, upper); }
  void remove(CellId lower, CellId upper) { pairs_.erase({lower, upper}); }

  /// Partner table indexed by cell id (-1 when unmatched). Assumes the
  /// matching is valid.
  std::vector<CellId> partners(int num_cells) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::set<Pair> pairs_;
};

/// Reduced Morse numbers m~_i, indexed from dimension -1.
struct MorseVector {
  std::vector<long long> counts;  // counts[0] is dimension -1

  long long at(int dim) const;
  int max_dim() const { return static_cast<int>(counts.size()) - 2; }
  long long total() const;
};

/// Reduced Betti numbers b~_i, indexed from dimension -1.
struct BettiVector {
  std::vector<long long> counts;  // counts[0] is dimension -1

  long long at(int dim) const;
  int max_dim() const { return static_cast<int>(counts.size()) - 2; }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

struct MatchingReport {
  bool valid = true;
  std::vector<std::string> violations;
};

MatchingReport check_matching(const FacePoset& fp, const Matching& m);
bool verify_matching(const FacePoset& fp, const Matching& m);

struct AcyclicityResult {
  bool acyclic = true;
  /// Closed walk c0 -> c1 -> ... -> c0 in the modified Hasse digraph when a
  /// cycle exists (first vertex not repeated at the end).
  std::vector<CellId> cycle;
};

/// Directs matched edges upward and all other incidences downward and
/// searches for a directed cycle. DFS roots and neighbours are visited in
/// ascending cell id, so the certificate is deterministic. Throws on an
/// invalid matching.
AcyclicityResult is_acyclic(const FacePoset& fp, const Matching& m);

std::vector<CellId> critical_cells(const FacePoset& fp, const Matching& m);
MorseVector morse_numbers(const FacePoset& fp, const Matching& m);

struct MorseInequalityReport {
  bool weak_pass = true;         // m~_j >= b~_j
  bool strong_pass = true;       // alternating partial sums
  bool euler_pass = true;        // equality at the top dimension
  std::vector<std::string> failures;
  bool pass() const { return weak_pass && strong_pass && euler_pass; }
};

/// Checks m~_j >= b~_j for every j >= -1, the strong inequalities
/// sum_{i=0}^{j+1} (-1)^i m~_{j-i} >= sum (-1)^i b~_{j-i} for j >= 0, and
/// equality of that sum at the top dimension.
MorseInequalityReport check_morse_inequalities(const MorseVector& m, const BettiVector& b);

/// sum_{i >= -1} (-1)^i m~_i, which equals mu(0,1) for an order complex.
long long mobius_from_morse(const MorseVector& m);

/// Connectivity guaranteed by the Morse numbers: j-1 where j >= 0 is the
/// least dimension with a critical cell. nullopt when nothing is critical in
/// dimensions >= 0.
std::optional<int> connectivity_bound(const MorseVector& m);

/// Injective integer discrete Morse function whose induced matching is m.
/// Values come from a topological order of the modified Hasse digraph, so
/// they strictly decrease along every digraph edge. Throws when m is cyclic.
std::vector<long long> realize_morse_function(const FacePoset& fp, const Matching& m);

/// Pairs (sigma, tau) with sigma a facet of tau and f(sigma) >= f(tau).
Matching induced_matching(const FacePoset& fp, const std::vector<long long>& f);

/// Forman's conditions: every cell has at most one "wrong-way" facet and at
/// most one wrong-way cofacet.
bool is_discrete_morse_function(const FacePoset& fp, const std::vector<long long>& f);

}  // namespace morse
