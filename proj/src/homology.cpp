#include "morse/homology.hpp"

#include <algorithm>
#include <map>

#include <boost/multiprecision/gmp.hpp>

#include "morse/case_studies.hpp"

namespace morse {

namespace {

using Rational = boost::multiprecision::mpq_rational;

/// Column-by-column reduction against pivots keyed by their lowest row.
template <class T, class Ops>
int sparse_rank(const std::vector<SparseColumn>& columns, const Ops& ops) {
  std::map<int, std::vector<std::pair<int, T>>> pivots;
  int rank = 0;
  for (const auto& col : columns) {
    std::map<int, T> v;
    for (const auto& [r, x] : col) {
      T t = ops.from_int(x);
      if (!ops.is_zero(t)) v[r] = t;
    }
    while (!v.empty()) {
      auto last = std::prev(v.end());
      auto it = pivots.find(last->first);
      if (it == pivots.end()) break;
      const T factor = ops.div(last->second, it->second.back().second);
      for (const auto& [r, x] : it->second) {
        T nv = ops.sub(v.count(r) ? v[r] : ops.from_int(0), ops.mul(factor, x));
        if (ops.is_zero(nv))
          v.erase(r);
        else
          v[r] = nv;
      }
    }
    if (v.empty()) continue;
    pivots.emplace(std::prev(v.end())->first, std::vector<std::pair<int, T>>(v.begin(), v.end()));
    ++rank;
  }
  return rank;
}

struct RationalOps {
  Rational from_int(int x) const { return Rational(x); }
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational div(const Rational& a, const Rational& b) const { return a / b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
};

struct PrimeOps {
  long long p;
  long long norm(long long x) const { return ((x % p) + p) % p; }
  long long from_int(int x) const { return norm(x); }
  bool is_zero(long long x) const { return x == 0; }
  long long inv(long long a) const {
    long long r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  long long div(long long a, long long b) const { return a * inv(b) % p; }
  long long mul(long long a, long long b) const { return a * b % p; }
  long long sub(long long a, long long b) const { return norm(a - b); }
};

ChainComplex build(std::vector<std::vector<std::vector<int>>> cells) {
  ChainComplex cc;
  cc.cells = std::move(cells);
  cc.boundary.assign(cc.cells.size(), {});
  for (std::size_t k = 1; k < cc.cells.size(); ++k) {
    std::map<std::vector<int>, int> below;
    for (std::size_t i = 0; i < cc.cells[k - 1].size(); ++i)
      below.emplace(cc.cells[k - 1][i], static_cast<int>(i));
    for (const auto& face : cc.cells[k]) {
      SparseColumn col;
      for (std::size_t j = 0; j < face.size(); ++j) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < face.size(); ++i)
          if (i != j) sub.push_back(face[i]);
        col.emplace_back(below.at(sub), j % 2 ? -1 : 1);
      }
      std::sort(col.begin(), col.end());
      cc.boundary[k].push_back(std::move(col));
    }
  }
  return cc;
}

}  // namespace

std::size_t ChainComplex::cells_of_dim(int d) const {
  if (d < -1 || d + 1 >= static_cast<int>(cells.size())) return 0;
  return cells[d + 1].size();
}

std::vector<std::vector<int>> ChainComplex::dense_boundary(int d) const {
  std::vector<std::vector<int>> out(cells_of_dim(d - 1), std::vector<int>(cells_of_dim(d), 0));
  if (d < 0 || d + 1 >= static_cast<int>(boundary.size())) return out;
  for (std::size_t c = 0; c < boundary[d + 1].size(); ++c)
    for (const auto& [r, x] : boundary[d + 1][c]) out[r][c] = x;
  return out;
}

ChainComplex chain_complex(const FacePoset& fp) {
  std::vector<std::vector<std::vector<int>>> cells(fp.size() ? fp.max_dim() + 2 : 0);
  for (CellId c = 0; c < fp.size(); ++c) cells[fp.dim(c) + 1].push_back(fp.vertices(c));
  return build(std::move(cells));
}

ChainComplex chain_complex(const SimplicialComplex& c) { return chain_complex(FacePoset(c)); }

Field Field::prime(int p) {
  if (!is_prime(p)) throw Error("field characteristic must be prime");
  return {p};
}

int matrix_rank(const std::vector<SparseColumn>& columns, Field f) {
  if (f.characteristic == 0) return sparse_rank<Rational>(columns, RationalOps{});
  return sparse_rank<long long>(columns, PrimeOps{f.characteristic});
}

BettiVector betti(const ChainComplex& cc, Field f) {
  BettiVector b;
  const std::size_t levels = cc.cells.size();
  if (levels == 0) {
    b.counts = {0};
    return b;
  }
  std::vector<int> rank(levels + 1, 0);
  for (std::size_t k = 1; k < levels; ++k) rank[k] = matrix_rank(cc.boundary[k], f);
  for (std::size_t k = 0; k < levels; ++k)
    b.counts.push_back(static_cast<long long>(cc.cells[k].size()) - rank[k] - rank[k + 1]);
  return b;
}

BettiVector betti(const SimplicialComplex& c, Field f) { return betti(chain_complex(c), f); }

long long euler_characteristic(const ChainComplex& cc) {
  long long chi = 0;
  for (std::size_t k = 0; k < cc.cells.size(); ++k)
    chi += (k % 2 ? 1 : -1) * static_cast<long long>(cc.cells[k].size());
  return chi;
}

long long euler_characteristic(const SimplicialComplex& c) {
  return euler_characteristic(chain_complex(c));
}

bool is_wedge_of_top_spheres(const BettiVector& b, int top_dim) {
  for (int d = -1; d <= b.max_dim(); ++d)
    if (d != top_dim && b.at(d) != 0) return false;
  return true;
}

std::optional<int> boundary_squared_violation(const ChainComplex& cc) {
  for (std::size_t k = 2; k < cc.cells.size(); ++k) {
    for (const auto& col : cc.boundary[k]) {
      std::map<int, long long> acc;
      for (const auto& [r, x] : col)
        for (const auto& [r2, y] : cc.boundary[k - 1][r]) acc[r2] += static_cast<long long>(x) * y;
      for (const auto& [r, v] : acc)
        if (v != 0) return static_cast<int>(k) - 1;
    }
  }
  return std::nullopt;
}

}  // namespace morse
