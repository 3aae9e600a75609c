#include "morse/reduced_words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "morse/error.hpp"

namespace morse {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

bool is_permutation(const Permutation& p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = static_cast<int>(i) + 1;
  return q;
}

std::vector<std::pair<int, int>> inversions(const Permutation& p) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p[i] > p[j]) out.emplace_back(i + 1, j + 1);
  return out;
}

int inversion_count(const Permutation& p) { return static_cast<int>(inversions(p).size()); }

Permutation apply_word(const Word& w, int n) {
  Permutation p = identity_permutation(n);
  for (int i : w) {
    if (i < 1 || i >= n) throw Error("letter out of range: " + std::to_string(i));
    std::swap(p[i - 1], p[i]);
  }
  return p;
}

bool is_reduced(const Word& w, int n) {
  Permutation p = identity_permutation(n);
  for (int i : w) {
    if (i < 1 || i >= n) return false;
    if (p[i - 1] > p[i]) return false;
    std::swap(p[i - 1], p[i]);
  }
  return true;
}

namespace {

void collect_words(Permutation& p, Word& suffix, std::set<Word>& out) {
  bool any = false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) continue;
    any = true;
    std::swap(p[i], p[i + 1]);
    suffix.push_back(static_cast<int>(i) + 1);
    collect_words(p, suffix, out);
    suffix.pop_back();
    std::swap(p[i], p[i + 1]);
  }
  if (!any) out.insert(Word(suffix.rbegin(), suffix.rend()));
}

bool has_triple(const Word& w, std::size_t limit) {
  for (std::size_t k = 0; k + 2 < limit; ++k)
    if (w[k] == w[k + 2] && w[k + 1] == w[k] - 1) return true;
  return false;
}

}  // namespace

std::set<Word> all_reduced_words(const Permutation& p) {
  if (!is_permutation(p)) throw Error("not a permutation");
  if (static_cast<int>(p.size()) > kMaxExhaustiveN)
    throw SizeGuard("reduced-word enumeration limited to n <= 8");
  std::set<Word> out;
  Permutation q = p;
  Word suffix;
  collect_words(q, suffix, out);
  return out;
}

std::set<Word> commutation_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    Word cur = std::move(todo.front());
    todo.pop_front();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (std::abs(cur[k] - cur[k + 1]) <= 1) continue;
      Word nxt = cur;
      std::swap(nxt[k], nxt[k + 1]);
      if (seen.insert(nxt).second) todo.push_back(std::move(nxt));
    }
  }
  return seen;
}

bool class_has_braid_pattern(const Word& w, bool allow_final) {
  for (const Word& v : commutation_class(w)) {
    std::size_t limit = v.size();
    if (allow_final && limit >= 3) {
      // A triple ending at the last letter is tolerated; earlier ones are not.
      if (has_triple(v, limit - 1)) return true;
      continue;
    }
    if (has_triple(v, limit)) return true;
  }
  return false;
}

bool lexfirst_conditions(const Word& w) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k + 1] < w[k] - 1) return false;
  return !has_triple(w, w.size()) && !class_has_braid_pattern(w);
}

bool ascending_form_conditions(const Word& w, bool allow_final) {
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k + 1] > w[k] + 1) return false;
  return !class_has_braid_pattern(w, allow_final);
}

Word canonical_lexfirst(const Permutation& p) {
  if (!is_permutation(p)) throw Error("not a permutation");
  Permutation q = p;
  Word sorting;
  const int n = static_cast<int>(q.size());
  for (int v = n; v >= 1; --v) {
    int pos = static_cast<int>(std::find(q.begin(), q.end(), v) - q.begin());
    for (; pos < v - 1; ++pos) {
      std::swap(q[pos], q[pos + 1]);
      sorting.push_back(pos + 1);
    }
  }
  return Word(sorting.rbegin(), sorting.rend());
}

std::vector<int> type_vector(const Word& w, int n) {
  std::vector<int> m(std::max(n - 1, 0), 0);
  for (int i : w) {
    if (i < 1 || i >= n) throw Error("letter out of range: " + std::to_string(i));
    ++m[i - 1];
  }
  return m;
}

bool satisfies_type_bounds(const std::vector<int>& m) {
  if (m.empty()) return true;
  if (m.back() < 0 || m.back() > 1) return false;
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (m[i] < 0 || m[i] > m[i + 1] + 1) return false;
  return true;
}

bool is_321_avoiding(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  for (int j = 1; j + 1 < n; ++j) {
    bool left = false, right = false;
    for (int i = 0; i < j && !left; ++i) left = p[i] > p[j];
    for (int k = j + 1; k < n && !right; ++k) right = p[k] < p[j];
    if (left && right) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p = identity_permutation(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace morse
