#include "morse/lex_morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace morse {

namespace {

constexpr int kMaxProperRanks = 24;
constexpr std::size_t kMaxWitnesses = 8;

struct Tracked {
  RankInterval iv;
  int source;
};

/// Truncates every interval after I_1 = cur.front() to ranks above its top,
/// drops I_1 and then every interval strictly containing another.
std::vector<Tracked> truncate_after_first(const std::vector<Tracked>& cur) {
  const int b = cur.front().iv.hi;
  std::vector<Tracked> cut;
  for (std::size_t k = 1; k < cur.size(); ++k) {
    Tracked t = cur[k];
    t.iv.lo = std::max(t.iv.lo, b + 1);
    if (t.iv.lo <= t.iv.hi) cut.push_back(t);
  }
  std::vector<Tracked> out;
  for (const auto& t : cut) {
    bool contains_other = false;
    for (const auto& u : cut) {
      if (&t == &u) continue;
      if (t.iv.lo <= u.iv.lo && u.iv.hi <= t.iv.hi && t.iv != u.iv) contains_other = true;
    }
    if (!contains_other) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Tracked& x, const Tracked& y) { return x.iv < y.iv; });
  return out;
}

std::optional<int> lowest_uncovered(const std::vector<Tracked>& cur, int from, int to) {
  for (int r = from; r <= to; ++r) {
    bool covered = false;
    for (const auto& t : cur) covered = covered || t.iv.contains(r);
    if (!covered) return r;
  }
  return std::nullopt;
}

std::vector<Tracked> tracked(const std::vector<RankInterval>& msis) {
  std::vector<Tracked> out;
  for (std::size_t k = 0; k < msis.size(); ++k) out.push_back({msis[k], static_cast<int>(k)});
  return out;
}

std::string chain_string(const Poset& p, const Chain& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " < " : "") + p.id(c[k]);
  return s;
}

std::string labels_string(const std::vector<Label>& ls) {
  std::ostringstream os;
  for (std::size_t k = 0; k < ls.size(); ++k) {
    os << (k ? "," : "");
    if (is_sentinel(ls[k])) {
      os << "*";
      continue;
    }
    for (std::size_t t = 0; t < ls[k].size(); ++t) os << (t ? ":" : "") << ls[k][t];
  }
  return os.str();
}

}  // namespace

std::optional<int> IntervalSystem::critical_dim() const {
  if (!critical) return std::nullopt;
  return static_cast<int>(critical->size()) - 1;
}

bool IntervalSystem::in_piece(const std::vector<int>& ranks) const {
  for (const auto& iv : msis) {
    bool hit = false;
    for (int r : ranks) hit = hit || iv.contains(r);
    if (!hit) return false;
  }
  return true;
}

std::optional<int> IntervalSystem::toggle_rank(const std::vector<int>& ranks) const {
  const int top = proper_ranks();
  auto has = [&](int r) { return std::find(ranks.begin(), ranks.end(), r) != ranks.end(); };
  std::vector<Tracked> cur = tracked(msis);
  int from = 1;
  while (from <= top) {
    if (auto c = lowest_uncovered(cur, from, top)) return c;
    const RankInterval i1 = cur.front().iv;
    bool only_lowest = has(i1.lo);
    for (int r = i1.lo + 1; r <= i1.hi && only_lowest; ++r) only_lowest = !has(r);
    if (!only_lowest) return i1.lo;
    cur = truncate_after_first(cur);
    from = i1.hi + 1;
  }
  return std::nullopt;
}

std::vector<Chain> lex_order_facets(const LabelledPoset& lp) {
  std::vector<std::pair<std::vector<Label>, Chain>> keyed;
  for (auto& c : saturated_chains(lp.poset)) keyed.emplace_back(lp.chain_labels(c), std::move(c));
  std::sort(keyed.begin(), keyed.end());
  std::vector<Chain> out;
  for (auto& [k, c] : keyed) out.push_back(std::move(c));
  return out;
}

std::optional<std::vector<int>> critical_cell_of_facet(IntervalSystem& sys) {
  const int top = sys.proper_ranks();
  sys.j_intervals.clear();
  sys.j_source.clear();
  sys.critical.reset();
  sys.cone_rank.reset();
  std::vector<Tracked> cur = tracked(sys.msis);
  std::vector<int> crit;
  int from = 1;
  while (from <= top) {
    if (auto c = lowest_uncovered(cur, from, top)) {
      sys.cone_rank = c;
      return std::nullopt;
    }
    sys.j_intervals.push_back(cur.front().iv);
    sys.j_source.push_back(cur.front().source);
    crit.push_back(cur.front().iv.lo);
    from = cur.front().iv.hi + 1;
    cur = truncate_after_first(cur);
  }
  sys.critical = crit;
  return crit;
}

IntervalSystem minimal_skipped_intervals(const std::vector<Chain>& facets, std::size_t j) {
  IntervalSystem sys;
  sys.facet = facets.at(j);
  const int top = sys.proper_ranks();
  std::vector<std::vector<int>> diffs;
  for (std::size_t i = 0; i < j; ++i) {
    if (facets[i].size() != sys.facet.size()) throw NotGraded("maximal chains of different lengths");
    std::vector<int> d;
    for (int r = 1; r <= top; ++r)
      if (facets[i][r] != sys.facet[r]) d.push_back(r);
    diffs.push_back(std::move(d));
  }
  std::sort(diffs.begin(), diffs.end());
  diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
  for (const auto& d : diffs) {
    bool minimal = true;
    for (const auto& e : diffs) {
      if (&d == &e || e.size() >= d.size()) continue;
      if (std::includes(d.begin(), d.end(), e.begin(), e.end())) minimal = false;
    }
    if (!minimal) continue;
    if (d.empty() || d.back() - d.front() + 1 != static_cast<int>(d.size()))
      throw Error("minimal skipped set is not an interval");
    sys.msis.push_back({d.front(), d.back()});
  }
  std::sort(sys.msis.begin(), sys.msis.end());
  critical_cell_of_facet(sys);
  return sys;
}

std::vector<int> ranks_of_cell(const Poset& p, const FacePoset& fp, CellId c) {
  std::vector<int> out;
  for (int v : fp.vertices(c)) out.push_back(p.rank(v));
  std::sort(out.begin(), out.end());
  return out;
}

CellId cell_at_ranks(const FacePoset& fp, const Chain& facet, const std::vector<int>& ranks) {
  std::vector<int> verts;
  for (int r : ranks) verts.push_back(facet.at(r));
  std::sort(verts.begin(), verts.end());
  return fp.at(verts);
}

namespace {

template <typename F>
void for_each_piece_face(const IntervalSystem& sys, F&& f) {
  const int top = sys.proper_ranks();
  if (top < 0) return;
  if (top > kMaxProperRanks) throw SizeGuard("chain too long for exhaustive face enumeration");
  for (std::uint32_t mask = 0; mask < (1u << top); ++mask) {
    std::vector<int> ranks;
    for (int r = 1; r <= top; ++r)
      if (mask & (1u << (r - 1))) ranks.push_back(r);
    if (sys.in_piece(ranks)) f(ranks);
  }
}

}  // namespace

Matching facet_matching(const FacePoset& fp, const IntervalSystem& sys) {
  Matching m;
  for_each_piece_face(sys, [&](const std::vector<int>& ranks) {
    auto t = sys.toggle_rank(ranks);
    if (!t || std::find(ranks.begin(), ranks.end(), *t) != ranks.end()) return;
    std::vector<int> up = ranks;
    up.insert(std::upper_bound(up.begin(), up.end(), *t), *t);
    m.add(cell_at_ranks(fp, sys.facet, ranks), cell_at_ranks(fp, sys.facet, up));
  });
  return m;
}

LexMorseResult lex_morse(const LabelledPoset& lp) {
  const Poset& p = lp.poset;
  LexMorseResult res;
  res.face_poset = FacePoset(order_complex(p));
  const FacePoset& fp = res.face_poset;
  res.facets = lex_order_facets(lp);
  if (fp.size() == 0) return res;
  res.piece.assign(fp.size(), -1);
  std::map<int, Matching> per_piece;
  for (std::size_t j = 0; j < res.facets.size(); ++j) {
    IntervalSystem sys = minimal_skipped_intervals(res.facets, j);
    for_each_piece_face(sys, [&](const std::vector<int>& ranks) {
      CellId c = cell_at_ranks(fp, sys.facet, ranks);
      if (res.piece[c] >= 0) throw Error("face assigned to two facet pieces");
      res.piece[c] = static_cast<int>(j);
    });
    per_piece[static_cast<int>(j)] = facet_matching(fp, sys);
    res.critical_by_facet.push_back(
        sys.critical ? std::optional<CellId>(cell_at_ranks(fp, sys.facet, *sys.critical))
                     : std::nullopt);
    res.systems.push_back(std::move(sys));
  }
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> covers;
  for (std::size_t j = 0; j < res.facets.size(); ++j) {
    ids.push_back(std::to_string(j));
    if (j > 0) covers.emplace_back(static_cast<int>(j) - 1, static_cast<int>(j));
  }
  Poset order = Poset::from_indices(ids, covers);
  res.matching = union_matchings(fp, res.piece, order, per_piece);
  return res;
}

Matching lex_morse_matching(const LabelledPoset& lp) { return lex_morse(lp).matching; }

LabellingClassReport classify_labelling(const LabelledPoset& lp) {
  const Poset& p = lp.poset;
  LabellingClassReport rep;
  auto witness = [&](std::string s) {
    if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(std::move(s));
  };
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y) || p.rank(y) - p.rank(x) < 2) continue;
      std::vector<std::vector<Label>> seqs;
      std::vector<Chain> chains;
      Chain cur{x};
      std::function<void(int)> walk = [&](int v) {
        if (v == y) {
          chains.push_back(cur);
          seqs.push_back(lp.chain_labels(cur));
          return;
        }
        for (int w : p.up(v)) {
          if (!p.leq(w, y)) continue;
          cur.push_back(w);
          walk(w);
          cur.pop_back();
        }
      };
      walk(x);
      std::size_t best = 0;
      for (std::size_t k = 1; k < seqs.size(); ++k)
        if (seqs[k] < seqs[best]) best = k;
      const auto& first = seqs[best];
      const std::string where = "[" + p.id(x) + ", " + p.id(y) + "]";
      if (!std::is_sorted(first.begin(), first.end())) {
        rep.least_increasing = false;
        rep.least_content_increasing = false;
        witness("least-increasing fails on " + where + ": lex-first chain " +
                chain_string(p, chains[best]) + " has labels " + labels_string(first));
        continue;
      }
      for (std::size_t k = 0; k < seqs.size(); ++k) {
        auto sorted = seqs[k];
        std::sort(sorted.begin(), sorted.end());
        if (sorted < first) {
          rep.least_content_increasing = false;
          witness("least-content-increasing fails on " + where + ": chain " +
                  chain_string(p, chains[k]) + " sorts to " + labels_string(sorted));
          break;
        }
      }
    }
  }
  for (int k = 1; k <= (p.size() ? p.max_rank() : 0); ++k) {
    std::vector<int> level;
    for (int v = 0; v < p.size(); ++v)
      if (p.rank(v) == k) level.push_back(v);
    std::map<int, int> pos;
    for (std::size_t a = 0; a < level.size(); ++a) pos[level[a]] = static_cast<int>(a);
    const std::size_t n = level.size();
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int u = 0; u < p.size(); ++u) {
      if (p.rank(u) != k - 1) continue;
      for (int v : p.up(u))
        for (int w : p.up(u))
          if (v != w && lp.labels.at(p, u, v) < lp.labels.at(p, u, w)) reach[pos[v]][pos[w]] = 1;
    }
    for (std::size_t m = 0; m < n; ++m)
      for (std::size_t a = 0; a < n; ++a)
        if (reach[a][m])
          for (std::size_t b = 0; b < n; ++b)
            if (reach[m][b]) reach[a][b] = 1;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a == b || !reach[a][b]) continue;
        const int v = level[a], w = level[b];
        for (int u : p.down(v)) {
          if (p.cover_index(u, w) < 0) continue;
          if (!(lp.labels.at(p, u, v) < lp.labels.at(p, u, w))) {
            rep.ordered_level = false;
            witness("ordered level fails: " + p.id(v) + " precedes " + p.id(w) +
                    " along a level but not above " + p.id(u));
          }
        }
      }
    }
  }
  return rep;
}

EffectiveAction acts_effectively(const LabelledPoset& lp, const Chain& chain, int i) {
  EffectiveAction out;
  const Poset& p = lp.poset;
  if (i < 1 || i + 1 >= static_cast<int>(chain.size())) {
    out.precondition_failed = true;
    return out;
  }
  const int a = chain[i - 1], v = chain[i], b = chain[i + 1];
  if (p.cover_index(a, v) < 0 || p.cover_index(v, b) < 0) {
    out.precondition_failed = true;
    return out;
  }
  const Label& l1 = lp.labels.at(p, a, v);
  const Label& l2 = lp.labels.at(p, v, b);
  if (!(l2 < l1)) {
    out.precondition_failed = true;
    return out;
  }
  std::vector<int> cands;
  for (int w : p.up(a)) {
    if (w == v || p.cover_index(w, b) < 0) continue;
    if (lp.labels.at(p, a, w) == l2 && lp.labels.at(p, w, b) == l1) cands.push_back(w);
  }
  if (cands.size() > 1) out.ambiguous = true;
  if (cands.size() == 1) {
    Chain c = chain;
    c[i] = cands.front();
    out.result = std::move(c);
  }
  return out;
}

std::string to_string(PathKind k) {
  switch (k) {
    case PathKind::unique_path: return "unique_path";
    case PathKind::two_paths: return "two_paths";
    case PathKind::not_applicable: return "not_applicable";
  }
  return "?";
}

std::vector<Step> step_word(const Poset& p, const FacePoset& fp, const GradientPath& path) {
  std::vector<Step> out;
  for (std::size_t k = 0; k + 1 < path.cells.size(); ++k) {
    const auto& a = fp.vertices(path.cells[k]);
    const auto& b = fp.vertices(path.cells[k + 1]);
    const bool down = b.size() < a.size();
    const auto& big = down ? a : b;
    const auto& small = down ? b : a;
    std::vector<int> diff;
    std::set_difference(big.begin(), big.end(), small.begin(), small.end(),
                        std::back_inserter(diff));
    out.push_back({down ? 'd' : 'u', p.rank(diff.at(0))});
  }
  return out;
}

std::string format_steps(const std::vector<Step>& steps) {
  std::string s;
  for (const auto& st : steps) s += st.kind + std::to_string(st.rank);
  return s;
}

std::optional<GradientPath> simulate_word(const Poset& p, const FacePoset& fp, const Matching& m,
                                          CellId tau, const Word& w) {
  const auto partner = m.partners(fp.size());
  GradientPath path{{tau}};
  CellId cur = tau;
  for (std::size_t k = 0; k < w.size(); ++k) {
    const int r = w[k];
    std::vector<int> verts = fp.vertices(cur);
    auto it = std::find_if(verts.begin(), verts.end(), [&](int v) { return p.rank(v) == r; });
    if (it == verts.end()) return std::nullopt;
    verts.erase(it);
    auto lower = fp.find(verts);
    if (!lower || partner[cur] == *lower) return std::nullopt;
    path.cells.push_back(*lower);
    cur = *lower;
    if (k + 1 == w.size()) break;
    CellId up = partner[cur];
    if (up < 0 || fp.dim(up) < fp.dim(cur)) return std::nullopt;
    std::vector<int> added;
    const auto& uv = fp.vertices(up);
    std::set_difference(uv.begin(), uv.end(), verts.begin(), verts.end(),
                        std::back_inserter(added));
    if (added.size() != 1 || p.rank(added.front()) != r) return std::nullopt;
    path.cells.push_back(up);
    cur = up;
  }
  if (w.empty()) return std::nullopt;
  return path;
}

RedExpResult red_exp_path(const LabelledPoset& lp, const LexMorseResult& lm, CellId tau,
                          CellId sigma) {
  const Poset& p = lp.poset;
  const FacePoset& fp = lm.face_poset;
  const Matching& m = lm.matching;
  const auto partner = m.partners(fp.size());
  if (partner.at(tau) >= 0 || partner.at(sigma) >= 0) throw Error("tau and sigma must be critical");
  if (fp.dim(tau) != fp.dim(sigma) + 1) throw Error("dim tau must equal dim sigma + 1");

  RedExpResult res;
  res.exhaustive_count = count_gradient_paths(fp, m, tau, sigma);
  const auto lt = lp.chain_labels(lm.facets.at(lm.facet_of(tau)));
  const auto ls = lp.chain_labels(lm.facets.at(lm.facet_of(sigma)));
  auto ct = lt, cs = ls;
  std::sort(ct.begin(), ct.end());
  std::sort(cs.begin(), cs.end());
  if (ct != cs) {
    res.hypothesis = "label contents differ";
    return res;
  }
  const auto cls = classify_labelling(lp);
  if (cls.least_content_increasing)
    res.hypothesis = "least-content-increasing, equal content";
  else if (cls.ordered_level)
    res.hypothesis = "ordered level property";
  else {
    res.hypothesis = "neither least-content-increasing nor ordered level";
    return res;
  }
  std::vector<char> used(lt.size(), 0);
  for (const auto& l : ls) {
    for (std::size_t t = 0; t < lt.size(); ++t) {
      if (!used[t] && lt[t] == l) {
        used[t] = 1;
        res.pi.push_back(static_cast<int>(t) + 1);
        break;
      }
    }
  }
  if (static_cast<int>(res.pi.size()) > kMaxExhaustiveN) {
    res.hypothesis += "; chain too long for word enumeration";
    return res;
  }
  for (const Word& w : all_reduced_words(res.pi)) {
    if (!ascending_form_conditions(w, true)) continue;
    auto path = simulate_word(p, fp, m, tau, w);
    if (!path || path->target() != sigma) continue;
    res.word = w;
    res.path = path;
    res.kind = class_has_braid_pattern(w) ? PathKind::two_paths : PathKind::unique_path;
    break;
  }
  if (!res.word) {
    res.hypothesis += "; no reduced word of pi is realized by a gradient path";
    return res;
  }
  const long long expected = res.kind == PathKind::two_paths ? 2 : 1;
  res.agrees = expected == res.exhaustive_count;
  return res;
}

}  // namespace morse
