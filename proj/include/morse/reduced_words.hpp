#pragma once

#include <set>
#include <utility>
#include <vector>

namespace morse {

/// One-line notation with values 1..n.
using Permutation = std::vector<int>;
/// Letters i stand for the adjacent transposition s_i = (i, i+1).
using Word = std::vector<int>;

inline constexpr int kMaxExhaustiveN = 8;

Permutation identity_permutation(int n);
bool is_permutation(const Permutation& p);
Permutation inverse(const Permutation& p);

/// Position pairs (i, j), 1-based, with i < j and p(i) > p(j).
std::vector<std::pair<int, int>> inversions(const Permutation& p);
int inversion_count(const Permutation& p);

/// Starts from the identity and swaps positions i, i+1 for each letter, left
/// to right.
Permutation apply_word(const Word& w, int n);

/// Each letter is in [1, n-1] and strictly increases the inversion count.
bool is_reduced(const Word& w, int n);

/// Every reduced word of p. Throws SizeGuard for n > 8.
std::set<Word> all_reduced_words(const Permutation& p);

/// Closure of w under s_i s_j <-> s_j s_i for |i - j| > 1.
std::set<Word> commutation_class(const Word& w);

/// True when some word in the commutation class of w contains consecutive
/// letters i+1, i, i+1. With allow_final set, an occurrence in the last
/// three positions is ignored.
bool class_has_braid_pattern(const Word& w, bool allow_final = false);

/// The three conditions characterizing the lexicographically first reduced
/// word: no letter j directly followed by i < j-1, no consecutive i+1, i, i+1,
/// and no such triple anywhere in the commutation class.
bool lexfirst_conditions(const Word& w);

/// Mirror form: no letter i directly followed by j > i+1 and no i+1, i, i+1
/// in the commutation class. With allow_final, the triple may occur as the
/// last three letters.
bool ascending_form_conditions(const Word& w, bool allow_final = false);

/// Lexicographically first reduced word, from the largest-value-first
/// sorting procedure.
Word canonical_lexfirst(const Permutation& p);

/// (m_1, ..., m_{n-1}) where m_i counts the letter i.
std::vector<int> type_vector(const Word& w, int n);

/// 0 <= m_{n-1} <= 1 and 0 <= m_i <= m_{i+1} + 1.
bool satisfies_type_bounds(const std::vector<int>& m);

bool is_321_avoiding(const Permutation& p);

/// All permutations of 1..n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace morse
