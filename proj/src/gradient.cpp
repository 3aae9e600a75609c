#include "morse/gradient.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

namespace morse {

namespace {

void require_acyclic(const FacePoset& fp, const Matching& m) {
  auto r = is_acyclic(fp, m);
  if (!r.acyclic) throw Error("matching is not acyclic");
}

/// Upward partner of c, or -1 when c is critical or matched downward.
CellId up_partner(const FacePoset& fp, const std::vector<CellId>& partner, CellId c) {
  CellId p = partner[c];
  return (p >= 0 && fp.dim(p) > fp.dim(c)) ? p : -1;
}

/// Depth-first enumeration of gradient paths leaving tau. Calls visit at
/// every critical endpoint reached.
void walk_paths(const FacePoset& fp, const std::vector<CellId>& partner, CellId tau,
                const std::function<bool(CellId)>& accept,
                const std::function<void(const std::vector<CellId>&)>& visit) {
  std::vector<CellId> path{tau};
  std::function<void(CellId)> down = [&](CellId upper) {
    for (CellId f : fp.facets(upper)) {
      if (partner[upper] == f) continue;
      path.push_back(f);
      if (partner[f] < 0) {
        if (accept(f)) visit(path);
      } else if (CellId nxt = up_partner(fp, partner, f); nxt >= 0) {
        path.push_back(nxt);
        down(nxt);
        path.pop_back();
      }
      path.pop_back();
    }
  };
  down(tau);
}

}  // namespace

bool is_gradient_path(const FacePoset& fp, const Matching& m, const GradientPath& path) {
  const auto& c = path.cells;
  if (c.size() < 2 || c.size() % 2 != 0) return false;
  for (CellId x : c)
    if (x < 0 || x >= fp.size()) return false;
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) {
    if (!fp.is_incidence(c[i + 1], c[i]) || m.contains(c[i + 1], c[i])) return false;
    if (i + 2 < c.size() && !m.contains(c[i + 1], c[i + 2])) return false;
  }
  return true;
}

std::vector<GradientPath> gradient_paths(const FacePoset& fp, const Matching& m, CellId tau,
                                         CellId sigma, std::size_t cap) {
  require_acyclic(fp, m);
  const auto partner = m.partners(fp.size());
  if (partner[tau] >= 0 || partner[sigma] >= 0)
    throw Error("gradient path endpoints must be critical");
  if (fp.dim(tau) != fp.dim(sigma) + 1) return {};
  std::vector<GradientPath> out;
  walk_paths(
      fp, partner, tau, [&](CellId c) { return c == sigma; },
      [&](const std::vector<CellId>& p) {
        if (out.size() >= cap) throw SizeGuard("too many gradient paths between one pair");
        out.push_back({p});
      });
  return out;
}

long long count_gradient_paths(const FacePoset& fp, const Matching& m, CellId tau, CellId sigma) {
  require_acyclic(fp, m);
  const auto partner = m.partners(fp.size());
  if (fp.dim(tau) != fp.dim(sigma) + 1) return 0;
  std::vector<long long> memo(fp.size(), -1);
  std::function<long long(CellId)> from_lower = [&](CellId c) -> long long {
    if (c == sigma) return 1;
    if (memo[c] >= 0) return memo[c];
    long long total = 0;
    if (CellId nxt = up_partner(fp, partner, c); nxt >= 0) {
      for (CellId f : fp.facets(nxt))
        if (f != c) total += from_lower(f);
    }
    return memo[c] = total;
  };
  long long total = 0;
  for (CellId f : fp.facets(tau))
    if (partner[tau] != f) total += from_lower(f);
  return total;
}

const PmEdge* MultiGraphFacePoset::edge(CellId upper, CellId lower) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(upper, lower),
                             [](const PmEdge& e, const std::pair<CellId, CellId>& k) {
                               return std::make_pair(e.upper, e.lower) < k;
                             });
  if (it == edges.end() || it->upper != upper || it->lower != lower) return nullptr;
  return &*it;
}

int MultiGraphFacePoset::multiplicity(CellId upper, CellId lower) const {
  const PmEdge* e = edge(upper, lower);
  return e ? e->multiplicity() : 0;
}

int MultiGraphFacePoset::total_edges() const {
  int n = 0;
  for (const auto& e : edges) n += e.multiplicity();
  return n;
}

MultiGraphFacePoset build_pm(const FacePoset& fp, const Matching& m) {
  require_acyclic(fp, m);
  const auto partner = m.partners(fp.size());
  MultiGraphFacePoset pm;
  for (CellId c = 0; c < fp.size(); ++c)
    if (partner[c] < 0) pm.vertices.push_back(c);
  for (CellId tau : pm.vertices) {
    if (fp.dim(tau) < 0) continue;
    std::map<CellId, std::vector<GradientPath>> by_target;
    std::size_t total = 0;
    walk_paths(
        fp, partner, tau, [](CellId) { return true; },
        [&](const std::vector<CellId>& p) {
          if (++total > kMaxPathsPerPair) throw SizeGuard("too many gradient paths from one cell");
          by_target[p.back()].push_back({p});
        });
    for (auto& [sigma, paths] : by_target) pm.edges.push_back({tau, sigma, std::move(paths)});
  }
  return pm;
}

bool is_pm_matching_acyclic(const MultiGraphFacePoset& pm, const Matching& pm_matching) {
  std::map<CellId, int> idx;
  for (std::size_t i = 0; i < pm.vertices.size(); ++i) idx[pm.vertices[i]] = static_cast<int>(i);
  const int n = static_cast<int>(pm.vertices.size());
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (const auto& e : pm.edges) {
    int u = idx.at(e.upper), l = idx.at(e.lower);
    if (pm_matching.contains(e.lower, e.upper)) {
      if (e.multiplicity() != 1) return false;
      succ[l].push_back(u);
      ++indeg[u];
    } else {
      succ[u].push_back(l);
      ++indeg[l];
    }
  }
  std::vector<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : succ[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

Matching reverse_path(const FacePoset& fp, const Matching& m, const GradientPath& path) {
  if (!is_gradient_path(fp, m, path)) throw Error("not a gradient path of the matching");
  const auto partner = m.partners(fp.size());
  if (partner[path.source()] >= 0 || partner[path.target()] >= 0)
    throw Error("path endpoints must be critical");
  Matching out = m;
  const auto& c = path.cells;
  for (std::size_t i = 1; i + 1 < c.size(); i += 2) out.remove(c[i], c[i + 1]);
  for (std::size_t i = 0; i + 1 < c.size(); i += 2) out.add(c[i + 1], c[i]);
  return out;
}

bool verify_rev_many(const FacePoset& fp, const Matching& m,
                     const std::vector<std::pair<CellId, CellId>>& pairs) {
  const int r = static_cast<int>(pairs.size());
  for (const auto& [sigma, tau] : pairs) {
    if (count_gradient_paths(fp, m, tau, sigma) != 1) {
      std::ostringstream os;
      os << "pair (" << sigma << ", " << tau << ") does not have a unique gradient path";
      throw Error(os.str());
    }
  }
  std::vector<std::vector<char>> e(r, std::vector<char>(r, 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      e[i][j] = count_gradient_paths(fp, m, pairs[i].second, pairs[j].first) > 0;
  std::vector<char> used(r, 0);
  int found = 0;
  std::function<void(int)> extend = [&](int i) {
    if (found > 1) return;
    if (i == r) {
      ++found;
      return;
    }
    for (int j = 0; j < r; ++j) {
      if (used[j] || !e[i][j]) continue;
      used[j] = 1;
      extend(i + 1);
      used[j] = 0;
    }
  };
  extend(0);
  return found == 1;
}

Matching cancel_via_pm_matching(const FacePoset& fp, const Matching& m,
                                const Matching& pm_matching) {
  return cancel_via_pm_matching(fp, m, build_pm(fp, m), pm_matching);
}

Matching cancel_via_pm_matching(const FacePoset& fp, const Matching& m,
                                const MultiGraphFacePoset& pm, const Matching& pm_matching) {
  std::set<CellId> used;
  std::vector<const GradientPath*> chosen;
  for (const auto& [lo, hi] : pm_matching.pairs()) {
    const PmEdge* e = pm.edge(hi, lo);
    std::ostringstream os;
    os << "(" << lo << ", " << hi << ")";
    if (!e) throw Error("P^M matching pair " + os.str() + " is not an edge of P^M");
    if (e->multiplicity() != 1)
      throw Error("P^M matching pair " + os.str() + " has multiplicity " +
                  std::to_string(e->multiplicity()));
    if (!used.insert(lo).second || !used.insert(hi).second)
      throw Error("P^M matching uses a critical cell twice");
    chosen.push_back(&e->paths.front());
  }
  if (!is_pm_matching_acyclic(pm, pm_matching)) throw Error("P^M matching is not acyclic");

  std::set<std::pair<CellId, CellId>> touched;
  std::vector<std::pair<CellId, CellId>> removals, additions;
  for (const GradientPath* p : chosen) {
    const auto& c = p->cells;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      std::pair<CellId, CellId> inc = (i % 2 == 0) ? std::make_pair(c[i + 1], c[i])
                                                   : std::make_pair(c[i], c[i + 1]);
      if (!touched.insert(inc).second) {
        std::ostringstream os;
        os << "incidence (" << inc.first << ", " << inc.second << ") toggled by two paths";
        throw Error(os.str());
      }
      (i % 2 == 0 ? additions : removals).push_back(inc);
    }
  }
  Matching out = m;
  for (const auto& [lo, hi] : removals) out.remove(lo, hi);
  for (const auto& [lo, hi] : additions) out.add(lo, hi);
  auto rep = check_matching(fp, out);
  if (!rep.valid) throw Error("cancellation produced an invalid matching: " + rep.violations.front());
  if (!is_acyclic(fp, out).acyclic) throw Error("cancellation produced a cyclic matching");
  return out;
}

Matching greedy_pm_matching(const MultiGraphFacePoset& pm, const FacePoset& fp) {
  std::vector<const PmEdge*> cand;
  for (const auto& e : pm.edges)
    if (e.multiplicity() == 1) cand.push_back(&e);
  std::stable_sort(cand.begin(), cand.end(), [&](const PmEdge* a, const PmEdge* b) {
    return fp.dim(a->upper) > fp.dim(b->upper);
  });
  Matching out;
  std::set<CellId> used;
  for (const PmEdge* e : cand) {
    if (used.count(e->upper) || used.count(e->lower)) continue;
    out.add(e->lower, e->upper);
    if (is_pm_matching_acyclic(pm, out)) {
      used.insert(e->upper);
      used.insert(e->lower);
    } else {
      out.remove(e->lower, e->upper);
    }
  }
  return out;
}

Matching union_matchings(const FacePoset& fp, const std::vector<int>& decomposition,
                         const Poset& piece_order, const std::map<int, Matching>& per_piece) {
  if (static_cast<int>(decomposition.size()) != fp.size())
    throw Error("decomposition must assign a piece to every cell");
  for (int q : decomposition)
    if (q < 0 || q >= piece_order.size()) throw Error("unknown piece id in decomposition");
  for (CellId c = 0; c < fp.size(); ++c) {
    for (CellId f : fp.facets(c)) {
      if (!piece_order.leq(decomposition[f], decomposition[c])) {
        std::ostringstream os;
        os << "face " << f << " of cell " << c << " lies in a piece not below the cell's piece";
        throw Error(os.str());
      }
    }
  }
  Matching out;
  for (const auto& [q, m] : per_piece) {
    for (const auto& [lo, hi] : m.pairs()) {
      if (lo < 0 || hi < 0 || lo >= fp.size() || hi >= fp.size() || decomposition[lo] != q ||
          decomposition[hi] != q)
        throw Error("piece matching leaves its piece");
      out.add(lo, hi);
    }
  }
  auto rep = check_matching(fp, out);
  if (!rep.valid) throw Error("union is not a matching: " + rep.violations.front());
  if (!is_acyclic(fp, out).acyclic) throw Error("union of piece matchings is cyclic");
  return out;
}

}  // namespace morse
