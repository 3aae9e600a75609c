#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "morse/matching.hpp"
#include "morse/poset.hpp"

/// Brute-force reference implementations. None of them calls into the
/// library algorithms they are compared against.
namespace oracle {

inline constexpr long long kBigPrimeA = 1000003;
inline constexpr long long kBigPrimeB = 998244353;

inline long long mod_pow(long long a, long long e, long long p) {
  long long r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = static_cast<long long>(static_cast<__int128>(r) * a % p);
    a = static_cast<long long>(static_cast<__int128>(a) * a % p);
    e >>= 1;
  }
  return r;
}

/// Dense row reduction modulo a prime.
inline int dense_rank(std::vector<std::vector<long long>> a, long long p) {
  int rank = 0;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const long long inv = mod_pow(a[rank][c], p - 2, p);
    for (int r = rank + 1; r < rows; ++r) {
      if (!a[r][c]) continue;
      const long long f = static_cast<long long>(static_cast<__int128>(a[r][c]) * inv % p);
      for (int k = c; k < cols; ++k)
        a[r][k] = ((a[r][k] - static_cast<long long>(static_cast<__int128>(f) * a[rank][k] % p)) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

/// Every nonempty subset of every facet, plus the empty face, grouped by
/// dimension + 1.
inline std::vector<std::vector<std::vector<int>>> all_faces(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  for (const auto& f : facets) {
    const int k = static_cast<int>(f.size());
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i)
        if (mask >> i & 1u) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& s : faces) {
    if (out.size() <= s.size()) out.resize(s.size() + 1);
    out[s.size()].push_back(s);
  }
  return out;
}

/// Reduced Betti numbers modulo p (use a large prime as a stand-in for the
/// rationals), indexed from dimension -1.
inline std::vector<long long> betti(const std::vector<std::vector<int>>& facets, long long p) {
  if (facets.empty()) return {0};
  const auto faces = all_faces(facets);
  const int top = static_cast<int>(faces.size());
  std::vector<int> rank(top + 1, 0);
  for (int k = 1; k < top; ++k) {
    std::map<std::vector<int>, int> row;
    for (std::size_t r = 0; r < faces[k - 1].size(); ++r) row[faces[k - 1][r]] = static_cast<int>(r);
    std::vector<std::vector<long long>> a(faces[k - 1].size(), std::vector<long long>(faces[k].size(), 0));
    for (std::size_t c = 0; c < faces[k].size(); ++c) {
      const auto& s = faces[k][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto t = s;
        t.erase(t.begin() + static_cast<long>(i));
        a[row.at(t)][c] = i % 2 ? -1 : 1;
      }
    }
    rank[k] = dense_rank(a, p);
  }
  std::vector<long long> b(top);
  for (int k = 0; k < top; ++k)
    b[k] = static_cast<long long>(faces[k].size()) - rank[k] - rank[k + 1];
  return b;
}

/// Möbius number as the reduced Euler characteristic of the chain complex of
/// the proper part: sum over chains bottom < x_1 < ... < x_k < top of (-1)^k.
inline long long mobius_by_chains(const morse::Poset& p) {
  const int b = p.require_bottom(), t = p.require_top();
  if (b == t) return 1;
  std::vector<int> order = p.linear_extension();
  std::map<int, std::vector<long long>> by_len;
  std::vector<std::vector<long long>> cnt(p.size());
  cnt[b] = {1};
  for (int y : order) {
    if (y == b) continue;
    std::vector<long long> c;
    for (int x : order) {
      if (!p.less(x, y) || cnt[x].empty()) continue;
      if (c.size() < cnt[x].size() + 1) c.resize(cnt[x].size() + 1, 0);
      for (std::size_t k = 0; k < cnt[x].size(); ++k) c[k + 1] += cnt[x][k];
    }
    cnt[y] = c;
  }
  long long mu = 0;
  for (std::size_t k = 0; k < cnt[t].size(); ++k) mu += (k % 2 ? -1 : 1) * cnt[t][k];
  return mu;
}

/// Acyclicity by Kahn's algorithm on the modified Hasse digraph.
inline bool acyclic(const morse::FacePoset& fp, const morse::Matching& m) {
  const int n = fp.size();
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int l : fp.facets(u)) {
      if (m.contains(l, u)) {
        out[l].push_back(u);
        ++indeg[u];
      } else {
        out[u].push_back(l);
        ++indeg[l];
      }
    }
  std::queue<int> q;
  for (int v = 0; v < n; ++v)
    if (!indeg[v]) q.push(v);
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int w : out[v])
      if (!--indeg[w]) q.push(w);
  }
  return seen == n;
}

/// Independence over F_q by counting distinct linear combinations.
inline bool independent(const std::vector<std::vector<int>>& vecs, int q) {
  if (vecs.empty()) return true;
  const std::size_t dim = vecs[0].size();
  std::set<std::vector<int>> seen;
  std::vector<int> coef(vecs.size(), 0);
  long long total = 1;
  for (std::size_t k = 0; k < vecs.size(); ++k) total *= q;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    std::vector<int> v(dim, 0);
    for (const auto& w : vecs) {
      const int a = static_cast<int>(c % q);
      c /= q;
      for (std::size_t i = 0; i < dim; ++i) v[i] = (v[i] + a * w[i]) % q;
    }
    seen.insert(v);
  }
  return static_cast<long long>(seen.size()) == total;
}

/// l in B is internally active iff no smaller line t outside B makes
/// B - l + t a basis.
inline std::set<int> internal_activity(const std::vector<std::vector<int>>& lines,
                                       const std::vector<int>& basis, int q) {
  std::set<int> active;
  for (int l : basis) {
    bool act = true;
    for (int t = 1; t < l && act; ++t) {
      if (std::find(basis.begin(), basis.end(), t) != basis.end()) continue;
      std::vector<std::vector<int>> vecs;
      for (int b : basis) vecs.push_back(lines[(b == l ? t : b) - 1]);
      if (independent(vecs, q)) act = false;
    }
    if (act) active.insert(l);
  }
  return active;
}

/// Value-pair inversions {a < b} with b placed before a.
inline std::set<std::pair<int, int>> value_inversions(const std::vector<int>& p) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) out.emplace(p[j], p[i]);
  return out;
}

/// Lexicographically smallest reduced word by depth-first search over
/// letters in increasing order. Prefixes whose inversion set leaves that of
/// p are abandoned since no extension can reach p.
inline std::vector<int> lexmin_reduced_word(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  const auto target = value_inversions(p);
  std::vector<int> cur(n), word;
  for (int k = 0; k < n; ++k) cur[k] = k + 1;
  std::function<bool()> dfs = [&]() {
    if (cur == p) return true;
    for (int i = 1; i < n; ++i) {
      if (cur[i - 1] > cur[i]) continue;
      if (!target.count({cur[i - 1], cur[i]})) continue;
      std::swap(cur[i - 1], cur[i]);
      word.push_back(i);
      if (dfs()) return true;
      word.pop_back();
      std::swap(cur[i - 1], cur[i]);
    }
    return false;
  };
  dfs();
  return word;
}

/// Unsigned Stirling numbers of the first kind c(n, k).
inline long long stirling1(int n, int k) {
  std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
  c[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int j = 1; j <= m; ++j) c[m][j] = c[m - 1][j - 1] + (m - 1) * c[m - 1][j];
  return k >= 0 && k <= n ? c[n][k] : 0;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace oracle
