#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "morse/case_studies.hpp"

namespace morse {

namespace {

constexpr std::size_t kMaxMonoidElements = 5000;

std::string vector_id(const std::vector<int>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "." : "") + std::to_string(v[k]);
  return s;
}

bool leq_vec(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::vector<int> minus(std::vector<int> a, const std::vector<int>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

}  // namespace

MonoidSpec lex_examp_spec() {
  // alphabet a, b, c, d, e
  return {{{1, 1, 0, 0, 0},
           {2, 0, 0, 0, 0},
           {0, 0, 1, 0, 0},
           {0, 0, 0, 1, 0},
           {0, 0, 0, 0, 1},
           {0, 2, 0, 0, 0}},
          {2, 2, 1, 1, 1}};
}

MonoidSpec two_paths_spec() {
  // alphabet a, b, c, d, e, f, g
  return {{{1, 1, 0, 0, 0, 0, 0},
           {0, 0, 1, 1, 0, 0, 0},
           {0, 0, 0, 0, 1, 1, 0},
           {1, 0, 0, 1, 0, 0, 0},
           {0, 1, 0, 0, 1, 0, 0},
           {0, 0, 1, 0, 0, 1, 0},
           {0, 0, 0, 0, 0, 0, 1}},
          {1, 1, 1, 1, 1, 1, 1}};
}

std::vector<int> exponent_from_id(const std::string& id) {
  std::vector<int> out;
  std::stringstream ss(id);
  std::string tok;
  while (std::getline(ss, tok, '.')) out.push_back(std::stoi(tok));
  return out;
}

LabelledPoset monoid_interval(const MonoidSpec& spec) {
  const std::size_t dim = spec.top.size();
  if (spec.generators.empty()) throw Error("monoid needs at least one generator");
  for (const auto& g : spec.generators) {
    if (g.size() != dim) throw Error("generator length differs from top");
    if (std::all_of(g.begin(), g.end(), [](int x) { return x == 0; }))
      throw Error("zero generator");
    if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; }))
      throw Error("negative exponent in generator");
  }
  const std::vector<int> zero(dim, 0);
  std::set<std::vector<int>> reachable{zero};
  std::deque<std::vector<int>> todo{zero};
  while (!todo.empty()) {
    auto m = todo.front();
    todo.pop_front();
    for (const auto& g : spec.generators) {
      auto next = plus(m, g);
      if (!leq_vec(next, spec.top)) continue;
      if (reachable.insert(next).second) {
        if (reachable.size() > 4 * kMaxMonoidElements) throw SizeGuard("monoid interval too large");
        todo.push_back(std::move(next));
      }
    }
  }
  if (!reachable.count(spec.top)) throw Error("top is not expressible by the generators");
  std::vector<std::vector<int>> elems;
  for (const auto& m : reachable)
    if (reachable.count(minus(spec.top, m))) elems.push_back(m);
  if (elems.size() > kMaxMonoidElements) throw SizeGuard("monoid interval too large");
  const std::set<std::vector<int>> members(elems.begin(), elems.end());
  std::vector<std::string> ids;
  for (const auto& m : elems) ids.push_back(vector_id(m));
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Label> cover_labels;
  for (const auto& m : elems) {
    for (std::size_t k = 0; k < spec.generators.size(); ++k) {
      auto next = plus(m, spec.generators[k]);
      if (!members.count(next)) continue;
      covers.emplace_back(vector_id(m), vector_id(next));
      cover_labels.push_back({static_cast<int>(k) + 1});
    }
  }
  Poset p = Poset::build(ids, covers, vector_id(zero), vector_id(spec.top));
  std::vector<Label> labels(p.covers().size());
  for (std::size_t k = 0; k < covers.size(); ++k)
    labels[p.cover_index(p.index_of(covers[k].first), p.index_of(covers[k].second))] =
        cover_labels[k];
  EdgeLabelling el(std::move(labels));
  el.validate(p);
  return {std::move(p), std::move(el)};
}

std::optional<Chain> chain_with_labels(const LabelledPoset& lp, const std::vector<int>& labels) {
  const Poset& p = lp.poset;
  if (!p.bottom()) return std::nullopt;
  Chain c{*p.bottom()};
  std::function<bool(std::size_t)> walk = [&](std::size_t k) {
    if (k == labels.size()) return !p.top() || c.back() == *p.top();
    for (int w : p.up(c.back())) {
      const Label& l = lp.labels.at(p, c.back(), w);
      if (l.size() != 1 || l[0] != labels[k]) continue;
      c.push_back(w);
      if (walk(k + 1)) return true;
      c.pop_back();
    }
    return false;
  };
  if (walk(0)) return c;
  return std::nullopt;
}

}  // namespace morse
