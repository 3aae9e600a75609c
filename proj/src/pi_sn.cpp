#include <algorithm>
#include <functional>
#include <map>

#include "morse/case_studies.hpp"

namespace morse {

namespace {

std::vector<int> rotate_to_min(std::vector<int> c) {
  std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  return c;
}

/// Every cycle obtained by interleaving a cyclic shift of a with a cyclic
/// shift of b, rotated to start at its minimum.
std::set<std::vector<int>> shuffles(const std::vector<int>& a, const std::vector<int>& b) {
  std::set<std::vector<int>> out;
  const std::size_t n = a.size() + b.size();
  for (std::size_t ra = 0; ra < a.size(); ++ra) {
    std::vector<int> sa = a;
    std::rotate(sa.begin(), sa.begin() + ra, sa.end());
    for (std::size_t rb = 0; rb < b.size(); ++rb) {
      std::vector<int> sb = b;
      std::rotate(sb.begin(), sb.begin() + rb, sb.end());
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size()) continue;
        std::vector<int> merged;
        std::size_t ia = 0, ib = 0;
        for (std::size_t k = 0; k < n; ++k) merged.push_back((mask >> k) & 1u ? sa[ia++] : sb[ib++]);
        out.insert(rotate_to_min(merged));
      }
    }
  }
  return out;
}

std::set<std::vector<int>> cycle_set(const Permutation& p) {
  auto cs = cycles_of(p);
  return {cs.begin(), cs.end()};
}

}  // namespace

std::vector<std::vector<int>> cycles_of(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n + 1, 0);
  std::vector<std::vector<int>> out;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> c;
    for (int x = s; !seen[x]; x = p[x - 1]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(c);
  }
  return out;
}

Permutation permutation_from_cycles(const std::vector<std::vector<int>>& cycles, int n) {
  Permutation p = identity_permutation(n);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) p[c[k] - 1] = c[(k + 1) % c.size()];
  if (!is_permutation(p)) throw Error("cycles do not form a permutation");
  return p;
}

std::string cycle_string(const Permutation& p) {
  std::string s;
  for (const auto& c : cycles_of(p)) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k]);
    s += ")";
  }
  return s;
}

std::vector<int> coatom_word(const Permutation& coatom) {
  auto cs = cycles_of(coatom);
  if (cs.size() != 1) throw Error("not an n-cycle");
  return {cs.front().begin() + 1, cs.front().end()};
}

std::pair<std::vector<int>, std::vector<int>> merged_cycles(const Permutation& u,
                                                            const Permutation& v) {
  const auto cu = cycle_set(u), cv = cycle_set(v);
  std::vector<std::vector<int>> gone;
  for (const auto& c : cu)
    if (!cv.count(c)) gone.push_back(c);
  if (gone.size() != 2) throw Error("not a single merge of two cycles");
  return {gone[0], gone[1]};
}

PiPoset pi_sn_poset(int n) {
  if (n < 2 || n > 5) throw SizeGuard("Pi_{S_n} generator limited to 2 <= n <= 5");
  PiPoset out;
  out.n = n;
  const auto perms = all_permutations(n);
  std::vector<std::string> ids;
  for (const auto& p : perms) ids.push_back(permutation_id(p));
  ids.push_back(out.top_id());
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& u : perms) {
    auto cs = cycles_of(u);
    if (cs.size() == 1) {
      covers.emplace_back(permutation_id(u), out.top_id());
      continue;
    }
    std::set<Permutation> ups;
    for (std::size_t a = 0; a < cs.size(); ++a) {
      for (std::size_t b = a + 1; b < cs.size(); ++b) {
        for (const auto& merged : shuffles(cs[a], cs[b])) {
          std::vector<std::vector<int>> next;
          for (std::size_t k = 0; k < cs.size(); ++k)
            if (k != a && k != b) next.push_back(cs[k]);
          next.push_back(merged);
          ups.insert(permutation_from_cycles(next, n));
        }
      }
    }
    for (const auto& v : ups) covers.emplace_back(permutation_id(u), permutation_id(v));
  }
  Poset p = Poset::build(ids, covers, permutation_id(identity_permutation(n)), out.top_id());
  const int top = p.require_top();
  std::vector<int> coatoms(p.down(top).begin(), p.down(top).end());
  std::vector<Label> labels(p.covers().size());
  for (std::size_t k = 0; k < p.covers().size(); ++k) {
    const auto [lo, hi] = p.covers()[k];
    if (hi == top) {
      labels[k] = sentinel_label();
      continue;
    }
    const Permutation u = permutation_from_id(p.id(lo));
    const Permutation v = permutation_from_id(p.id(hi));
    const auto [c1, c2] = merged_cycles(u, v);
    const int m1 = c1.front(), m2 = c2.front();
    std::optional<std::vector<int>> best;
    for (int w : coatoms) {
      if (!p.leq(hi, w)) continue;
      auto word = coatom_word(permutation_from_id(p.id(w)));
      if (!best || word < *best) best = word;
    }
    Label l{std::max(m1, m2)};
    l.insert(l.end(), best->begin(), best->end());
    l.push_back(std::min(m1, m2));
    labels[k] = std::move(l);
  }
  EdgeLabelling el(std::move(labels));
  el.validate(p);
  out.lp = {std::move(p), std::move(el)};
  return out;
}

MergeTree merge_tree(const LabelledPoset& lp, const Chain& chain) {
  MergeTree t;
  const auto top = lp.poset.top();
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    if (top && chain[k + 1] == *top) continue;
    const auto [c1, c2] = merged_cycles(permutation_from_id(lp.poset.id(chain[k])),
                                        permutation_from_id(lp.poset.id(chain[k + 1])));
    t.emplace(std::min(c1.front(), c2.front()), std::max(c1.front(), c2.front()));
  }
  return t;
}

std::vector<int> lex_smallest_shuffle(const std::vector<int>& a, const std::vector<int>& b) {
  const auto ta = rotate_to_min(a), tb = rotate_to_min(b);
  std::vector<int> out;
  std::size_t ia = 0, ib = 0;
  while (ia < ta.size() || ib < tb.size()) {
    if (ib == tb.size() || (ia < ta.size() && ta[ia] < tb[ib]))
      out.push_back(ta[ia++]);
    else
      out.push_back(tb[ib++]);
  }
  return out;
}

std::set<std::pair<int, int>> unforced_inversions(const std::vector<int>& a,
                                                  const std::vector<int>& b,
                                                  const Permutation& coatom) {
  const auto cs = cycles_of(coatom);
  if (cs.size() != 1) throw Error("not an n-cycle");
  const std::set<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::vector<int> ra, rb, merged;
  for (int x : cs.front()) {
    if (sa.count(x)) ra.push_back(x);
    if (sb.count(x)) rb.push_back(x);
    if (sa.count(x) || sb.count(x)) merged.push_back(x);
  }
  if (ra.size() != sa.size() || rb.size() != sb.size() || ra.empty() || rb.empty())
    throw Error("cycles are not disjoint parts of the coatom");
  merged = rotate_to_min(merged);
  const auto tape = lex_smallest_shuffle(ra, rb);
  std::map<int, int> pos_m, pos_t;
  for (std::size_t k = 0; k < merged.size(); ++k) {
    pos_m[merged[k]] = static_cast<int>(k);
    pos_t[tape[k]] = static_cast<int>(k);
  }
  std::set<std::pair<int, int>> out;
  for (int x : merged)
    for (int y : merged)
      if (x < y && pos_m[y] < pos_m[x] && pos_t[x] < pos_t[y]) out.emplace(x, y);
  return out;
}

Permutation chain_coatom(const LabelledPoset& lp, const Chain& chain) {
  if (chain.empty()) throw Error("empty chain");
  int last = chain.back();
  if (lp.poset.top() && last == *lp.poset.top()) {
    if (chain.size() < 2) throw Error("chain has no coatom");
    last = chain[chain.size() - 2];
  }
  return permutation_from_id(lp.poset.id(last));
}

std::set<std::pair<int, int>> pi_nonessential_set(const LabelledPoset& lp, const Chain& chain) {
  const MergeTree tree = merge_tree(lp, chain);
  const Permutation coatom = chain_coatom(lp, chain);
  const int n = static_cast<int>(coatom.size());
  std::vector<int> comp(n + 1);
  for (int v = 1; v <= n; ++v) comp[v] = v;
  std::function<int(int)> find = [&](int v) { return comp[v] == v ? v : comp[v] = find(comp[v]); };
  for (const auto& [i, j] : tree)
    if (i != 1) comp[find(j)] = find(i);
  std::map<int, std::vector<int>> blocks;
  for (int v = 2; v <= n; ++v) blocks[find(v)].push_back(v);
  std::set<std::pair<int, int>> out;
  for (const auto& [i, j] : tree) {
    if (i != 1) continue;
    const auto& mine = blocks.at(find(j));
    bool clean = true;
    for (const auto& [root, other] : blocks) {
      if (root == find(j)) continue;
      if (!unforced_inversions(mine, other, coatom).empty()) clean = false;
    }
    if (clean) out.emplace(i, j);
  }
  return out;
}

}  // namespace morse
