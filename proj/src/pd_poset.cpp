#include <algorithm>
#include <functional>
#include <sstream>

#include "morse/case_studies.hpp"

namespace morse {

namespace {

int mod(long long a, int q) { return static_cast<int>(((a % q) + q) % q); }

int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(static_cast<long long>(a) * x, q) == 1) return x;
  throw Error("no inverse modulo " + std::to_string(q));
}

/// Solves sum_k c_k basis[k] = v over F_q. Throws when v is outside the
/// span or the basis is dependent.
std::vector<int> coordinates(const std::vector<std::vector<int>>& basis,
                             const std::vector<int>& v, int q) {
  const int n = static_cast<int>(v.size());
  const int m = static_cast<int>(basis.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(m + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < m; ++c) a[r][c] = mod(basis[c][r], q);
    a[r][m] = mod(v[r], q);
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int c = 0; c < m; ++c) {
    int piv = -1;
    for (int r = row; r < n && piv < 0; ++r)
      if (a[r][c]) piv = r;
    if (piv < 0) throw Error("dependent basis");
    std::swap(a[row], a[piv]);
    const int inv = inv_mod(a[row][c], q);
    for (int k = 0; k <= m; ++k) a[row][k] = mod(static_cast<long long>(a[row][k]) * inv, q);
    for (int r = 0; r < n; ++r) {
      if (r == row || !a[r][c]) continue;
      const int f = a[r][c];
      for (int k = 0; k <= m; ++k) a[r][k] = mod(a[r][k] - static_cast<long long>(f) * a[row][k], q);
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int r = row; r < n; ++r)
    if (a[r][m]) throw Error("vector outside the span");
  std::vector<int> out(m);
  for (int k = 0; k < m; ++k) out[pivot_col[k]] = a[k][m];
  return out;
}

std::string set_id(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

int rank_mod_q(std::vector<std::vector<int>> rows, int q) {
  int rank = 0;
  const int cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()) && piv < 0; ++r)
      if (mod(rows[r][c], q)) piv = r;
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    const int inv = inv_mod(mod(rows[rank][c], q), q);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || !mod(rows[r][c], q)) continue;
      const long long f = static_cast<long long>(mod(rows[r][c], q)) * inv;
      for (int k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[rank][k], q);
    }
    ++rank;
  }
  return rank;
}

std::vector<Line> all_lines(int n, int q) {
  std::vector<Line> out;
  std::vector<int> v(n, 0);
  std::function<void(int)> fill = [&](int k) {
    if (k == n) {
      auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
      if (it != v.end() && *it == 1) out.push_back({v, q});
      return;
    }
    for (int x = 0; x < q; ++x) {
      v[k] = x;
      fill(k + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<int> PdPoset::element_lines(const std::string& id) const {
  std::vector<int> out;
  if (id.size() < 2 || id.front() != '{') return out;
  std::stringstream ss(id.substr(1, id.size() - 2));
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

PdPoset pd_poset(int n, int q, std::optional<std::vector<Line>> omega) {
  if (!is_prime(q)) throw Error("q must be prime");
  if (n < 1) throw Error("n must be positive");
  long long size = 1;
  for (int k = 0; k < n; ++k) size *= q;
  if (size > 100) throw SizeGuard("PD generator limited to q^n <= 100");
  PdPoset pd;
  pd.n = n;
  pd.q = q;
  pd.lines = all_lines(n, q);
  if (omega) {
    auto a = *omega, b = pd.lines;
    std::sort(a.begin(), a.end());
    if (a != b) throw Error("line order must be a permutation of all lines");
    pd.lines = *omega;
  }
  const int L = static_cast<int>(pd.lines.size());

  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int from) {
    sets.push_back(cur);
    if (static_cast<int>(cur.size()) == n) return;
    for (int l = from; l <= L; ++l) {
      cur.push_back(l);
      std::vector<std::vector<int>> rows;
      for (int x : cur) rows.push_back(pd.lines[x - 1].coords);
      if (rank_mod_q(rows, q) == static_cast<int>(cur.size())) grow(l + 1);
      cur.pop_back();
    }
  };
  grow(1);

  std::vector<std::string> ids;
  for (const auto& s : sets) ids.push_back(set_id(s));
  ids.push_back(pd.top_id());
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<Label> cover_labels;
  for (const auto& s : sets) {
    if (static_cast<int>(s.size()) == n) {
      covers.emplace_back(set_id(s), pd.top_id());
      cover_labels.push_back(sentinel_label());
      continue;
    }
    for (const auto& t : sets) {
      if (t.size() != s.size() + 1 || !std::includes(t.begin(), t.end(), s.begin(), s.end()))
        continue;
      std::vector<int> added;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(added));
      covers.emplace_back(set_id(s), set_id(t));
      cover_labels.push_back({added.front()});
    }
  }
  Poset p = Poset::build(ids, covers, set_id({}), pd.top_id());
  std::vector<Label> labels(p.covers().size());
  for (std::size_t k = 0; k < covers.size(); ++k)
    labels[p.cover_index(p.index_of(covers[k].first), p.index_of(covers[k].second))] =
        cover_labels[k];
  EdgeLabelling el(std::move(labels));
  el.validate(p);
  pd.lp = {std::move(p), std::move(el)};
  return pd;
}

std::set<int> internal_activity(const PdPoset& pd, const std::vector<int>& basis) {
  std::vector<std::vector<int>> vecs;
  for (int b : basis) vecs.push_back(pd.lines.at(b - 1).coords);
  if (rank_mod_q(vecs, pd.q) != pd.n || static_cast<int>(basis.size()) != pd.n)
    throw Error("not a basis");
  std::set<int> active(basis.begin(), basis.end());
  for (int t = 1; t <= static_cast<int>(pd.lines.size()); ++t) {
    const auto c = coordinates(vecs, pd.lines[t - 1].coords, pd.q);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (t < basis[k] && c[k] != 0) active.erase(basis[k]);
  }
  return active;
}

std::vector<std::vector<int>> pd_bases(const PdPoset& pd) {
  std::vector<std::vector<int>> out;
  for (const auto& id : pd.lp.poset.ids()) {
    auto s = pd.element_lines(id);
    if (static_cast<int>(s.size()) == pd.n) out.push_back(s);
  }
  return out;
}

std::vector<int> pd_chain_basis(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain) {
  if (chain.empty()) throw Error("empty chain");
  int last = chain.back();
  if (lp.poset.id(last) == pd.top_id()) {
    if (chain.size() < 2) throw Error("chain has no coatom");
    last = chain[chain.size() - 2];
  }
  return pd.element_lines(lp.poset.id(last));
}

namespace {

std::vector<int> simple_labels(const LabelledPoset& lp, const Chain& chain) {
  std::vector<int> out;
  for (const auto& l : lp.chain_labels(chain))
    if (!is_sentinel(l)) out.push_back(l.at(0));
  return out;
}

}  // namespace

std::set<int> pd_nonessential_set(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain) {
  const auto active = internal_activity(pd, pd_chain_basis(pd, lp, chain));
  std::set<int> out;
  for (int l : simple_labels(lp, chain))
    if (active.count(l)) out.insert(l);
  return out;
}

bool pd_critical_shape(const PdPoset& pd, const LabelledPoset& lp, const Chain& chain) {
  const auto ls = simple_labels(lp, chain);
  if (ls.empty()) return false;
  const auto active = internal_activity(pd, pd_chain_basis(pd, lp, chain));
  const std::size_t a = std::min_element(ls.begin(), ls.end()) - ls.begin();
  for (std::size_t k = 0; k < a; ++k)
    if (ls[k] <= ls[k + 1]) return false;
  for (std::size_t k = a; k + 1 < ls.size(); ++k)
    if (ls[k] >= ls[k + 1]) return false;
  if (active.count(ls[a])) return false;
  for (std::size_t k = a + 1; k < ls.size(); ++k)
    if (!active.count(ls[k])) return false;
  return true;
}

}  // namespace morse
