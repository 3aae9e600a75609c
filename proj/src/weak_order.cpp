#include <algorithm>

#include "morse/case_studies.hpp"

namespace morse {

Permutation permutation_from_id(const std::string& id) {
  Permutation p;
  for (char ch : id) {
    if (ch < '1' || ch > '9') throw Error("bad permutation id: " + id);
    p.push_back(ch - '0');
  }
  if (!is_permutation(p)) throw Error("bad permutation id: " + id);
  return p;
}

std::string permutation_id(const Permutation& p) {
  std::string s;
  for (int v : p) s += static_cast<char>('0' + v);
  return s;
}

LabelledPoset weak_order(int n) {
  if (n < 1 || n > 6) throw SizeGuard("weak order generator limited to 1 <= n <= 6");
  const auto perms = all_permutations(n);
  std::vector<std::string> ids;
  for (const auto& p : perms) ids.push_back(permutation_id(p));
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Label> cover_labels;
  for (const auto& u : perms) {
    for (int i = 1; i < n; ++i) {
      if (u[i - 1] > u[i]) continue;
      Permutation v = u;
      std::swap(v[i - 1], v[i]);
      covers.emplace_back(permutation_id(u), permutation_id(v));
      cover_labels.push_back({i});
    }
  }
  Permutation w0(n);
  for (int k = 0; k < n; ++k) w0[k] = n - k;
  Poset p = Poset::build(ids, covers, permutation_id(identity_permutation(n)), permutation_id(w0));
  std::vector<Label> labels(p.covers().size());
  for (std::size_t k = 0; k < covers.size(); ++k)
    labels[p.cover_index(p.index_of(covers[k].first), p.index_of(covers[k].second))] =
        cover_labels[k];
  EdgeLabelling el(std::move(labels));
  el.validate(p);
  return {std::move(p), std::move(el)};
}

std::string to_string(WeakMsiType t) {
  switch (t) {
    case WeakMsiType::type1: return "type1";
    case WeakMsiType::type2: return "type2";
    case WeakMsiType::none: return "none";
  }
  return "?";
}

WeakMsiType weak_msi_type(const std::vector<int>& seg) {
  if (seg.size() == 2 && seg[0] > seg[1] + 1) return WeakMsiType::type1;
  if (seg.size() >= 3 && seg.front() == seg.back()) {
    for (std::size_t k = 1; k + 1 < seg.size(); ++k)
      if (seg[k] != seg[0] - static_cast<int>(k)) return WeakMsiType::none;
    return WeakMsiType::type2;
  }
  return WeakMsiType::none;
}

std::optional<std::vector<int>> ew_blocks(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> blocks;
  int start = 0;
  while (start < n) {
    int end = start;
    while (end + 1 < n && p[end + 1] == p[end] - 1) ++end;
    if (p[start] != end + 1) return std::nullopt;
    blocks.push_back(end - start + 1);
    start = end + 1;
  }
  return blocks;
}

int ew_sphere_dim(const std::vector<int>& blocks) {
  int s = 0;
  for (int b : blocks) s += b - 1;
  return s - 2;
}

}  // namespace morse
