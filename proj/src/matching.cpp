#include "morse/matching.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace morse {

std::vector<CellId> Matching::partners(int num_cells) const {
  std::vector<CellId> p(num_cells, -1);
  for (const auto& [lo, hi] : pairs_) {
    p.at(lo) = hi;
    p.at(hi) = lo;
  }
  return p;
}

long long MorseVector::at(int dim) const {
  int k = dim + 1;
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[k];
}

long long MorseVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0LL);
}

long long BettiVector::at(int dim) const {
  int k = dim + 1;
  if (k < 0 || k >= static_cast<int>(counts.size())) return 0;
  return counts[k];
}

MatchingReport check_matching(const FacePoset& fp, const Matching& m) {
  MatchingReport r;
  std::vector<int> uses(fp.size(), 0);
  for (const auto& [lo, hi] : m.pairs()) {
    if (!fp.is_incidence(lo, hi)) {
      std::ostringstream os;
      os << "pair (" << lo << ", " << hi << ") is not a face-poset incidence";
      r.violations.push_back(os.str());
      r.valid = false;
      continue;
    }
    for (CellId c : {lo, hi}) {
      if (++uses[c] == 2) {
        std::ostringstream os;
        os << "cell " << c << " appears in more than one pair";
        r.violations.push_back(os.str());
        r.valid = false;
      }
    }
  }
  return r;
}

bool verify_matching(const FacePoset& fp, const Matching& m) { return check_matching(fp, m).valid; }

namespace {

void require_valid(const FacePoset& fp, const Matching& m) {
  auto r = check_matching(fp, m);
  if (!r.valid) throw Error("invalid matching: " + r.violations.front());
}

/// Successors in the modified Hasse digraph, ascending by id.
std::vector<CellId> successors(const FacePoset& fp, const std::vector<CellId>& partner, CellId c) {
  std::vector<CellId> out;
  for (CellId f : fp.facets(c)) {
    if (partner[c] != f) out.push_back(f);
  }
  CellId p = partner[c];
  if (p >= 0 && fp.dim(p) > fp.dim(c)) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AcyclicityResult is_acyclic(const FacePoset& fp, const Matching& m) {
  require_valid(fp, m);
  const int n = fp.size();
  const auto partner = m.partners(n);
  std::vector<std::vector<CellId>> succ(n);
  for (CellId c = 0; c < n; ++c) succ[c] = successors(fp, partner, c);

  enum : char { White, Gray, Black };
  std::vector<char> color(n, White);
  std::vector<CellId> stack;
  std::vector<std::size_t> pos;
  for (CellId root = 0; root < n; ++root) {
    if (color[root] != White) continue;
    stack = {root};
    pos = {0};
    color[root] = Gray;
    while (!stack.empty()) {
      CellId v = stack.back();
      std::size_t& k = pos.back();
      if (k < succ[v].size()) {
        CellId w = succ[v][k++];
        if (color[w] == Gray) {
          AcyclicityResult r;
          r.acyclic = false;
          auto it = std::find(stack.begin(), stack.end(), w);
          r.cycle.assign(it, stack.end());
          return r;
        }
        if (color[w] == White) {
          color[w] = Gray;
          stack.push_back(w);
          pos.push_back(0);
        }
      } else {
        color[v] = Black;
        stack.pop_back();
        pos.pop_back();
      }
    }
  }
  return {};
}

std::vector<CellId> critical_cells(const FacePoset& fp, const Matching& m) {
  require_valid(fp, m);
  const auto partner = m.partners(fp.size());
  std::vector<CellId> out;
  for (CellId c = 0; c < fp.size(); ++c)
    if (partner[c] < 0) out.push_back(c);
  return out;
}

MorseVector morse_numbers(const FacePoset& fp, const Matching& m) {
  MorseVector mv;
  mv.counts.assign(fp.max_dim() + 2, 0);
  for (CellId c : critical_cells(fp, m)) ++mv.counts[fp.dim(c) + 1];
  return mv;
}

MorseInequalityReport check_morse_inequalities(const MorseVector& m, const BettiVector& b) {
  MorseInequalityReport r;
  const int top = std::max(m.max_dim(), b.max_dim());
  for (int j = -1; j <= top; ++j) {
    if (m.at(j) < b.at(j)) {
      r.weak_pass = false;
      r.failures.push_back("m~_" + std::to_string(j) + " = " + std::to_string(m.at(j)) +
                           " < b~_" + std::to_string(j) + " = " + std::to_string(b.at(j)));
    }
  }
  for (int j = 0; j <= top; ++j) {
    long long sm = 0, sb = 0;
    for (int i = 0; i <= j + 1; ++i) {
      long long sign = (i % 2 == 0) ? 1 : -1;
      sm += sign * m.at(j - i);
      sb += sign * b.at(j - i);
    }
    if (sm < sb) {
      r.strong_pass = false;
      r.failures.push_back("alternating sum at j = " + std::to_string(j) + ": " +
                           std::to_string(sm) + " < " + std::to_string(sb));
    }
    if (j == top && sm != sb) {
      r.euler_pass = false;
      r.failures.push_back("alternating sums differ at top dimension " + std::to_string(j));
    }
  }
  return r;
}

long long mobius_from_morse(const MorseVector& m) {
  long long s = 0;
  for (int d = -1; d <= m.max_dim(); ++d) s += (d % 2 == 0 ? 1 : -1) * m.at(d);
  return s;
}

std::optional<int> connectivity_bound(const MorseVector& m) {
  for (int j = 0; j <= m.max_dim(); ++j) {
    if (m.at(j) != 0) return j - 1;
  }
  return std::nullopt;
}

std::vector<long long> realize_morse_function(const FacePoset& fp, const Matching& m) {
  require_valid(fp, m);
  const int n = fp.size();
  const auto partner = m.partners(n);
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<CellId>> succ(n);
  for (CellId c = 0; c < n; ++c) {
    succ[c] = successors(fp, partner, c);
    for (CellId w : succ[c]) ++indeg[w];
  }
  std::priority_queue<CellId, std::vector<CellId>, std::greater<>> ready;
  for (CellId c = 0; c < n; ++c)
    if (indeg[c] == 0) ready.push(c);
  std::vector<long long> f(n, 0);
  long long value = n;
  int seen = 0;
  while (!ready.empty()) {
    CellId c = ready.top();
    ready.pop();
    f[c] = value--;
    ++seen;
    for (CellId w : succ[c])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (seen != n) throw Error("matching is not acyclic; no Morse function realizes it");
  return f;
}

Matching induced_matching(const FacePoset& fp, const std::vector<long long>& f) {
  Matching m;
  for (CellId c = 0; c < fp.size(); ++c) {
    for (CellId s : fp.facets(c)) {
      if (f.at(s) >= f.at(c)) m.add(s, c);
    }
  }
  return m;
}

bool is_discrete_morse_function(const FacePoset& fp, const std::vector<long long>& f) {
  for (CellId c = 0; c < fp.size(); ++c) {
    int down = 0, up = 0;
    for (CellId s : fp.facets(c))
      if (f.at(s) >= f.at(c)) ++down;
    for (CellId t : fp.cofacets(c))
      if (f.at(t) <= f.at(c)) ++up;
    if (down > 1 || up > 1) return false;
  }
  return true;
}

}  // namespace morse
