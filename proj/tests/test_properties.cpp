#include <doctest.h>

#include <random>

#include "morse/cancellation.hpp"
#include "morse/homology.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

SimplicialComplex random_complex(std::mt19937& rng, int vertices, int triangles) {
  std::uniform_int_distribution<int> pick(0, vertices - 1);
  std::vector<std::vector<int>> faces;
  for (int k = 0; k < triangles; ++k) {
    std::set<int> s;
    const int size = std::uniform_int_distribution<int>(1, 3)(rng);
    while (static_cast<int>(s.size()) < size) s.insert(pick(rng));
    faces.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex(faces);
}

std::vector<std::pair<CellId, CellId>> incidences(const FacePoset& fp) {
  std::vector<std::pair<CellId, CellId>> out;
  for (CellId u = 0; u < fp.size(); ++u)
    for (CellId l : fp.facets(u)) out.emplace_back(l, u);
  return out;
}

Matching random_matching(std::mt19937& rng, const FacePoset& fp, bool keep_acyclic) {
  auto inc = incidences(fp);
  std::shuffle(inc.begin(), inc.end(), rng);
  std::vector<char> used(fp.size(), 0);
  Matching m;
  for (auto [l, u] : inc) {
    if (used[l] || used[u]) continue;
    m.add(l, u);
    if (keep_acyclic && !oracle::acyclic(fp, m)) {
      m.remove(l, u);
      continue;
    }
    used[l] = used[u] = 1;
  }
  return m;
}

void check_structure(const FacePoset& fp, const Matching& m, const BettiVector& b) {
  REQUIRE(verify_matching(fp, m));
  REQUIRE(is_acyclic(fp, m).acyclic);
  const auto f = realize_morse_function(fp, m);
  CHECK(is_discrete_morse_function(fp, f));
  CHECK(induced_matching(fp, f) == m);
  const auto mv = morse_numbers(fp, m);
  CHECK(check_morse_inequalities(mv, b).pass());
  CHECK(mobius_from_morse(mv) == euler_characteristic(chain_complex(fp)));
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("random complexes: acyclicity certificate matches Kahn's algorithm") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    const auto c = random_complex(rng, 7, 6);
    FacePoset fp(c);
    const Matching m = random_matching(rng, fp, false);
    const auto r = is_acyclic(fp, m);
    CHECK(r.acyclic == oracle::acyclic(fp, m));
    if (!r.acyclic) {
      for (std::size_t k = 0; k < r.cycle.size(); ++k) {
        const CellId a = r.cycle[k], b = r.cycle[(k + 1) % r.cycle.size()];
        CHECK((m.contains(a, b) || (fp.is_incidence(b, a) && !m.contains(b, a))));
      }
    }
  }
}

TEST_CASE("random complexes: greedy acyclic matchings satisfy the Morse theory invariants") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto c = random_complex(rng, 8, 7);
    FacePoset fp(c);
    const auto cc = chain_complex(c);
    CHECK_FALSE(boundary_squared_violation(cc).has_value());
    const auto b = betti(cc);
    CHECK(b.counts == oracle::betti(c.facets(), oracle::kBigPrimeA));
    const Matching m = random_matching(rng, fp, true);
    check_structure(fp, m, b);
    const auto r = cancel_pm_greedy(fp, m);
    check_structure(fp, r.matching, b);
    CHECK(r.before.total() - r.after.total() == 2 * static_cast<long long>(r.cancelled_pairs));
  }
}

TEST_CASE("lexicographic matchings on every interval of the case studies") {
  std::vector<LabelledPoset> posets{weak_order(4), pd_poset(2, 3).lp, pi_sn_poset(3).lp,
                                    monoid_interval(two_paths_spec())};
  for (const auto& whole : posets) {
    const Poset& p = whole.poset;
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.less(x, y)) continue;
        const auto lp = interval(whole, x, y);
        const auto lm = lex_morse(lp);
        const auto& fp = lm.face_poset;
        CHECK(oracle::acyclic(fp, lm.matching));
        const auto b = betti(order_complex(lp.poset));
        check_structure(fp, lm.matching, b);
        CHECK(mobius_from_morse(morse_numbers(fp, lm.matching)) == mobius(lp.poset));
        CHECK(mobius(lp.poset) == oracle::mobius_by_chains(lp.poset));
      }
  }
}

TEST_CASE("realized functions are injective") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto lm = lex_morse(lp);
  auto f = realize_morse_function(lm.face_poset, lm.matching);
  std::sort(f.begin(), f.end());
  CHECK(std::adjacent_find(f.begin(), f.end()) == f.end());
}

TEST_CASE("reduced words: every word of the canonical length passing the conditions is canonical") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const auto w = canonical_lexfirst(p);
      CHECK(static_cast<int>(w.size()) == inversion_count(p));
      CHECK(lexfirst_conditions(w));
      for (const auto& v : all_reduced_words(p))
        if (v != w) CHECK(v > w);
    }
}

}  // TEST_SUITE
