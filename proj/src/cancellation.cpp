#include "morse/cancellation.hpp"

#include <algorithm>

namespace morse {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::boolean_ne: return "boolean-ne";
    case Strategy::pm_greedy: return "pm-greedy";
    case Strategy::explicit_pairs: return "explicit-pairs";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "boolean-ne") return Strategy::boolean_ne;
  if (s == "pm-greedy") return Strategy::pm_greedy;
  if (s == "explicit-pairs") return Strategy::explicit_pairs;
  throw Error("unknown cancellation strategy: " + s);
}

CancellationReport cancel_explicit_pairs(const FacePoset& fp, const Matching& m,
                                         const std::vector<std::pair<CellId, CellId>>& pairs) {
  CancellationReport rep;
  rep.before = morse_numbers(fp, m);
  Matching pm_matching;
  for (const auto& [lo, hi] : pairs) pm_matching.add(lo, hi);
  rep.matching = pairs.empty() ? m : cancel_via_pm_matching(fp, m, pm_matching);
  if (!pairs.empty()) rep.rounds.push_back(pm_matching);
  rep.cancelled_pairs = pm_matching.size();
  rep.after = morse_numbers(fp, rep.matching);
  return rep;
}

CancellationReport cancel_pm_greedy(const FacePoset& fp, const Matching& m,
                                    std::size_t max_rounds) {
  CancellationReport rep;
  rep.before = morse_numbers(fp, m);
  rep.matching = m;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    const auto pm = build_pm(fp, rep.matching);
    const Matching chosen = greedy_pm_matching(pm, fp);
    if (chosen.empty()) break;
    rep.matching = cancel_via_pm_matching(fp, rep.matching, pm, chosen);
    rep.cancelled_pairs += chosen.size();
    rep.rounds.push_back(chosen);
  }
  rep.after = morse_numbers(fp, rep.matching);
  return rep;
}

bool BooleanFamily::is_boolean() const {
  if (ne.size() >= 31) return false;
  if (cells.size() != (std::size_t{1} << ne.size())) return false;
  for (const auto& [t, c] : cells)
    if (!std::includes(ne.begin(), ne.end(), t.begin(), t.end())) return false;
  return true;
}

std::vector<BooleanFamily> boolean_families(const std::vector<CellId>& critical,
                                            const FamilyFn& family) {
  std::map<std::vector<int>, BooleanFamily> groups;
  for (CellId c : critical) {
    auto [key, t] = family(c);
    auto& g = groups[key];
    g.key = key;
    g.ne.insert(t.begin(), t.end());
    if (!g.cells.emplace(t, c).second) throw Error("two critical cells share a family and a set T");
  }
  std::vector<BooleanFamily> out;
  for (auto& [k, g] : groups) out.push_back(std::move(g));
  return out;
}

CancellationReport cancel_boolean_families(const FacePoset& fp, const Matching& m,
                                           const std::vector<BooleanFamily>& families) {
  std::vector<std::pair<CellId, CellId>> pairs;
  for (const auto& g : families) {
    if (g.ne.empty()) continue;
    if (!g.is_boolean()) throw Error("critical cells of a family do not form a Boolean algebra");
    const int x0 = *g.ne.begin();
    for (const auto& [t, c] : g.cells) {
      if (t.count(x0)) continue;
      auto with = t;
      with.insert(x0);
      const CellId d = g.cells.at(with);
      if (fp.dim(c) + 1 == fp.dim(d))
        pairs.emplace_back(c, d);
      else if (fp.dim(d) + 1 == fp.dim(c))
        pairs.emplace_back(d, c);
      else
        throw Error("Boolean partners differ in dimension by more than one");
    }
  }
  return cancel_explicit_pairs(fp, m, pairs);
}

std::set<int> labels_after_minimum(const LabelledPoset& lp, const Chain& facet) {
  std::vector<Label> ls;
  for (auto& l : lp.chain_labels(facet))
    if (!is_sentinel(l)) ls.push_back(l);
  std::set<int> out;
  if (ls.empty()) return out;
  const auto a = std::min_element(ls.begin(), ls.end());
  for (auto it = a + 1; it != ls.end(); ++it) out.insert(it->at(0));
  return out;
}

FamilyFn pd_family(const PdPoset& pd, const LabelledPoset& lp, const LexMorseResult& lm) {
  return [&pd, &lp, &lm](CellId c) {
    const Chain& facet = lm.facets.at(lm.facet_of(c));
    return std::pair{pd_chain_basis(pd, lp, facet), labels_after_minimum(lp, facet)};
  };
}

FamilyFn pi_family(const LabelledPoset& lp, const LexMorseResult& lm) {
  return [&lp, &lm](CellId c) {
    const Chain& facet = lm.facets.at(lm.facet_of(c));
    std::vector<int> key = coatom_word(chain_coatom(lp, facet));
    for (const auto& [i, j] : merge_tree(lp, facet)) {
      key.push_back(i);
      key.push_back(j);
    }
    return std::pair{key, labels_after_minimum(lp, facet)};
  };
}

}  // namespace morse
