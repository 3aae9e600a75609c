#include "morse/poset.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace morse {

namespace {

std::vector<std::uint64_t> empty_row(int n) {
  return std::vector<std::uint64_t>((n + 63) / 64, 0);
}

void set_bit(std::vector<std::uint64_t>& row, int b) {
  row[b >> 6] |= (std::uint64_t{1} << (b & 63));
}

}  // namespace

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& covers,
                   std::optional<std::string> bottom, std::optional<std::string> top) {
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(elements.size()); ++i) {
    if (!index.emplace(elements[i], i).second) {
      throw Error("duplicate element id '" + elements[i] + "'");
    }
  }
  auto lookup = [&](const std::string& id) {
    auto it = index.find(id);
    if (it == index.end()) throw Error("cover references unknown element '" + id + "'");
    return it->second;
  };
  std::vector<std::pair<int, int>> idx_covers;
  idx_covers.reserve(covers.size());
  for (const auto& [a, b] : covers) idx_covers.emplace_back(lookup(a), lookup(b));
  std::optional<int> b, t;
  if (bottom) b = lookup(*bottom);
  if (top) t = lookup(*top);
  return from_indices(std::move(elements), std::move(idx_covers), b, t);
}

Poset Poset::from_indices(std::vector<std::string> elements,
                          std::vector<std::pair<int, int>> covers,
                          std::optional<int> bottom, std::optional<int> top) {
  Poset p;
  const int n = static_cast<int>(elements.size());
  p.ids_ = std::move(elements);
  for (int i = 0; i < n; ++i) {
    if (!p.index_.emplace(p.ids_[i], i).second) {
      throw Error("duplicate element id '" + p.ids_[i] + "'");
    }
  }
  p.up_.assign(n, {});
  p.down_.assign(n, {});
  for (const auto& [a, b] : covers) {
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error("cover references unknown element");
    if (a == b) throw Error("cycle detected: self-cover on '" + p.ids_[a] + "'");
    if (!p.cover_lookup_.emplace(std::make_pair(a, b), static_cast<int>(p.covers_.size())).second) {
      throw Error("duplicate cover (" + p.ids_[a] + ", " + p.ids_[b] + ")");
    }
    p.covers_.emplace_back(a, b);
    p.up_[a].push_back(b);
    p.down_[b].push_back(a);
  }
  for (auto& v : p.up_) std::sort(v.begin(), v.end());
  for (auto& v : p.down_) std::sort(v.begin(), v.end());

  // Kahn's algorithm; leftover vertices sit on a cycle.
  std::vector<int> indeg(n, 0);
  for (const auto& c : p.covers_) ++indeg[c.second];
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> depth(n, 0);
  std::set<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (int w : p.up_[v]) {
      depth[w] = std::max(depth[w], depth[v] + 1);
      if (--indeg[w] == 0) ready.insert(w);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    for (int v = 0; v < n; ++v) {
      if (indeg[v] > 0) throw Error("cycle detected through element '" + p.ids_[v] + "'");
    }
  }

  p.leq_.assign(n, empty_row(n));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    set_bit(p.leq_[v], v);
    for (int w : p.up_[v]) {
      for (std::size_t k = 0; k < p.leq_[v].size(); ++k) p.leq_[v][k] |= p.leq_[w][k];
    }
  }

  for (const auto& [a, b] : p.covers_) {
    for (int v : p.up_[a]) {
      if (v != b && p.leq(v, b)) {
        throw Error("cover (" + p.ids_[a] + ", " + p.ids_[b] +
                    ") is not transitively reduced: path through '" + p.ids_[v] + "'");
      }
    }
  }

  if (bottom) {
    if (*bottom < 0 || *bottom >= n) throw Error("unknown bottom element");
    for (int v = 0; v < n; ++v) {
      if (!p.leq(*bottom, v)) {
        throw Error("declared bottom '" + p.ids_[*bottom] + "' is not below '" + p.ids_[v] + "'");
      }
    }
    p.bottom_ = bottom;
  }
  if (top) {
    if (*top < 0 || *top >= n) throw Error("unknown top element");
    for (int v = 0; v < n; ++v) {
      if (!p.leq(v, *top)) {
        throw Error("declared top '" + p.ids_[*top] + "' is not above '" + p.ids_[v] + "'");
      }
    }
    p.top_ = top;
  }

  bool graded = true;
  for (const auto& [a, b] : p.covers_) {
    if (depth[b] != depth[a] + 1) {
      graded = false;
      break;
    }
  }
  if (graded) p.rank_ = depth;

  p.linear_.resize(n);
  std::iota(p.linear_.begin(), p.linear_.end(), 0);
  std::stable_sort(p.linear_.begin(), p.linear_.end(),
                   [&](int a, int b) { return depth[a] < depth[b]; });
  return p;
}

int Poset::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error("unknown element '" + id + "'");
  return it->second;
}

std::optional<int> Poset::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int Poset::cover_index(int lower, int upper) const {
  auto it = cover_lookup_.find({lower, upper});
  return it == cover_lookup_.end() ? -1 : it->second;
}

int Poset::require_bottom() const {
  if (!bottom_) throw Error("poset has no declared bottom element");
  return *bottom_;
}

int Poset::require_top() const {
  if (!top_) throw Error("poset has no declared top element");
  return *top_;
}

int Poset::rank(int v) const {
  if (!rank_) throw NotGraded("poset is not graded");
  return (*rank_).at(v);
}

int Poset::max_rank() const {
  if (!rank_) throw NotGraded("poset is not graded");
  if (rank_->empty()) return -1;
  return *std::max_element(rank_->begin(), rank_->end());
}

const Label& EdgeLabelling::at(const Poset& p, int lower, int upper) const {
  int c = p.cover_index(lower, upper);
  if (c < 0) throw Error("(" + p.id(lower) + ", " + p.id(upper) + ") is not a cover");
  return labels_.at(c);
}

void EdgeLabelling::validate(const Poset& p) const {
  if (labels_.size() != p.covers().size()) {
    throw Error("labelling has " + std::to_string(labels_.size()) + " labels for " +
                std::to_string(p.covers().size()) + " covers");
  }
  for (int u = 0; u < p.size(); ++u) {
    std::set<Label> seen;
    for (int v : p.up(u)) {
      if (!seen.insert(at(p, u, v)).second) {
        throw Error("two upper covers of '" + p.id(u) + "' share a label");
      }
    }
  }
}

std::vector<Label> LabelledPoset::chain_labels(const Chain& chain) const {
  std::vector<Label> out;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    out.push_back(labels.at(poset, chain[k], chain[k + 1]));
  }
  return out;
}

namespace {

std::pair<Poset, std::vector<int>> interval_impl(const Poset& p, int x, int y) {
  if (!p.leq(x, y)) throw Error("interval: '" + p.id(x) + "' is not below '" + p.id(y) + "'");
  std::vector<int> keep;
  std::vector<int> remap(p.size(), -1);
  for (int v = 0; v < p.size(); ++v) {
    if (p.leq(x, v) && p.leq(v, y)) {
      remap[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  std::vector<std::string> ids;
  for (int v : keep) ids.push_back(p.id(v));
  std::vector<std::pair<int, int>> covers;
  std::vector<int> cover_src;
  for (int c = 0; c < static_cast<int>(p.covers().size()); ++c) {
    auto [a, b] = p.covers()[c];
    if (remap[a] >= 0 && remap[b] >= 0) {
      covers.emplace_back(remap[a], remap[b]);
      cover_src.push_back(c);
    }
  }
  return {Poset::from_indices(std::move(ids), std::move(covers), remap[x], remap[y]),
          std::move(cover_src)};
}

}  // namespace

Poset interval(const Poset& p, int x, int y) { return interval_impl(p, x, y).first; }

LabelledPoset interval(const LabelledPoset& lp, int x, int y) {
  auto [sub, src] = interval_impl(lp.poset, x, y);
  std::vector<Label> labels;
  labels.reserve(src.size());
  for (int c : src) labels.push_back(lp.labels.at(c));
  return {std::move(sub), EdgeLabelling(std::move(labels))};
}

std::vector<Chain> saturated_chains(const Poset& p) {
  std::vector<Chain> out;
  if (p.size() == 0) return out;
  const int b = p.require_bottom();
  const int t = p.require_top();
  Chain current{b};
  // Iterative DFS keeps deep chains off the call stack.
  std::vector<std::size_t> next{0};
  while (!current.empty()) {
    int v = current.back();
    if (v == t) {
      out.push_back(current);
      current.pop_back();
      next.pop_back();
      continue;
    }
    auto ups = p.up(v);
    std::size_t& k = next.back();
    if (k < ups.size()) {
      int w = ups[k++];
      current.push_back(w);
      next.push_back(0);
    } else {
      current.pop_back();
      next.pop_back();
    }
  }
  return out;
}

std::vector<long long> mobius_from_bottom(const Poset& p) {
  const int b = p.require_bottom();
  std::vector<long long> mu(p.size(), 0);
  for (int y : p.linear_extension()) {
    if (!p.leq(b, y)) continue;
    if (y == b) {
      mu[y] = 1;
      continue;
    }
    long long s = 0;
    for (int z = 0; z < p.size(); ++z) {
      if (p.leq(b, z) && p.less(z, y)) s += mu[z];
    }
    mu[y] = -s;
  }
  return mu;
}

long long mobius(const Poset& p) {
  const int t = p.require_top();
  return mobius_from_bottom(p)[t];
}

SimplicialComplex::SimplicialComplex(std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              return a < b;
            });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (auto& f : faces) {
    bool contained = false;
    for (const auto& g : facets_) {
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        contained = true;
        break;
      }
    }
    if (!contained) facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dimension() const {
  int d = -2;
  for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

SimplicialComplex order_complex(const Poset& p) {
  const int b = p.require_bottom();
  const int t = p.require_top();
  std::vector<std::vector<int>> faces;
  if (b == t) return SimplicialComplex(std::move(faces));
  for (const auto& chain : saturated_chains(p)) {
    faces.emplace_back(chain.begin() + 1, chain.end() - 1);
  }
  return SimplicialComplex(std::move(faces));
}

FacePoset::FacePoset(const SimplicialComplex& c) {
  std::set<std::vector<int>> all;
  for (const auto& f : c.facets()) {
    const int k = static_cast<int>(f.size());
    if (k > 24) throw SizeGuard("facet too large for face enumeration");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (std::uint32_t{1} << i)) face.push_back(f[i]);
      all.insert(std::move(face));
    }
  }
  cells_.assign(all.begin(), all.end());
  std::stable_sort(cells_.begin(), cells_.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
    lookup_.emplace(cells_[i], i);
    max_dim_ = std::max(max_dim_, static_cast<int>(cells_[i].size()) - 1);
  }
  facets_.assign(cells_.size(), {});
  cofacets_.assign(cells_.size(), {});
  for (int i = 0; i < static_cast<int>(cells_.size()); ++i) {
    const auto& v = cells_[i];
    for (std::size_t k = 0; k < v.size(); ++k) {
      std::vector<int> face;
      face.reserve(v.size() - 1);
      for (std::size_t j = 0; j < v.size(); ++j)
        if (j != k) face.push_back(v[j]);
      int f = lookup_.at(face);
      facets_[i].push_back(f);
      cofacets_[f].push_back(i);
    }
  }
  for (auto& v : facets_) std::sort(v.begin(), v.end());
  for (auto& v : cofacets_) std::sort(v.begin(), v.end());
}

bool FacePoset::is_incidence(CellId lower, CellId upper) const {
  if (lower < 0 || upper < 0 || lower >= size() || upper >= size()) return false;
  const auto& f = facets_[upper];
  return std::binary_search(f.begin(), f.end(), lower);
}

std::optional<CellId> FacePoset::find(const std::vector<int>& vertices) const {
  auto it = lookup_.find(vertices);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

CellId FacePoset::at(const std::vector<int>& vertices) const {
  auto c = find(vertices);
  if (!c) {
    std::ostringstream os;
    os << "no cell with vertices {";
    for (std::size_t i = 0; i < vertices.size(); ++i) os << (i ? "," : "") << vertices[i];
    os << "}";
    throw Error(os.str());
  }
  return *c;
}

std::vector<CellId> FacePoset::cells_of_dim(int d) const {
  std::vector<CellId> out;
  for (int i = 0; i < size(); ++i)
    if (dim(i) == d) out.push_back(i);
  return out;
}

int FacePoset::count_incidences() const {
  int n = 0;
  for (const auto& f : facets_) n += static_cast<int>(f.size());
  return n;
}

}  // namespace morse
