#include <doctest.h>

#include "morse/case_studies.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

std::vector<int> simple(const LabelledPoset& lp, const Chain& c) {
  std::vector<int> out;
  for (const auto& l : lp.chain_labels(c))
    if (!is_sentinel(l)) out.push_back(l.at(0));
  return out;
}

std::size_t facet_index(const LexMorseResult& lm, const Chain& c) {
  for (std::size_t j = 0; j < lm.facets.size(); ++j)
    if (lm.facets[j] == c) return j;
  FAIL("chain is not a facet");
  return 0;
}

CellId critical_of(const LabelledPoset& lp, const LexMorseResult& lm, const std::vector<int>& labels) {
  const auto c = chain_with_labels(lp, labels);
  REQUIRE(c.has_value());
  const auto crit = lm.critical_by_facet[facet_index(lm, *c)];
  REQUIRE(crit.has_value());
  return *crit;
}

}  // namespace

TEST_SUITE("lex_morse") {

TEST_CASE("running example interval systems") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto lm = lex_morse(lp);
  const auto c23654 = chain_with_labels(lp, {2, 3, 6, 5, 4});
  const auto c26543 = chain_with_labels(lp, {2, 6, 5, 4, 3});
  REQUIRE(c23654.has_value());
  REQUIRE(c26543.has_value());

  const auto& s1 = lm.systems[facet_index(lm, *c23654)];
  CHECK(s1.msis == std::vector<RankInterval>{{1, 2}, {3, 3}, {4, 4}});
  CHECK(s1.critical == std::vector<int>{1, 3, 4});
  CHECK(s1.critical_dim() == 2);
  const auto& s2 = lm.systems[facet_index(lm, *c26543)];
  CHECK(s2.msis == std::vector<RankInterval>{{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  CHECK(s2.critical == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("chain 11354 precedes chain 23654") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto facets = lex_order_facets(lp);
  const auto a = chain_with_labels(lp, {1, 1, 3, 5, 4});
  const auto b = chain_with_labels(lp, {2, 3, 6, 5, 4});
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  const auto pos = [&](const Chain& x) { return std::find(facets.begin(), facets.end(), x) - facets.begin(); };
  CHECK(pos(*a) < pos(*b));
  CHECK(simple(lp, facets.front()) == std::vector<int>{1, 1, 3, 4, 5});
}

TEST_CASE("facets are sorted by label sequence") {
  const auto lp = monoid_interval(two_paths_spec());
  const auto facets = lex_order_facets(lp);
  for (std::size_t j = 1; j < facets.size(); ++j)
    CHECK(lp.chain_labels(facets[j - 1]) <= lp.chain_labels(facets[j]));
}

TEST_CASE("a 2-chain gives one vertex matched with the empty cell") {
  Poset p = Poset::build({"0", "x", "1"}, {{"0", "x"}, {"x", "1"}}, "0", "1");
  LabelledPoset lp{p, EdgeLabelling({{1}, {2}})};
  const auto lm = lex_morse(lp);
  CHECK(lm.facets.size() == 1);
  CHECK(lm.face_poset.size() == 2);
  CHECK(lm.matching.size() == 1);
  CHECK(critical_cells(lm.face_poset, lm.matching).empty());
}

TEST_CASE("matching is valid, acyclic and one critical cell per contributing facet") {
  for (const auto& lp : {monoid_interval(lex_examp_spec()), monoid_interval(two_paths_spec()), weak_order(4),
                         pd_poset(2, 3).lp, pi_sn_poset(4).lp}) {
    const auto lm = lex_morse(lp);
    const auto& fp = lm.face_poset;
    CHECK(verify_matching(fp, lm.matching));
    CHECK(oracle::acyclic(fp, lm.matching));
    std::size_t contributing = 0;
    for (std::size_t j = 0; j < lm.facets.size(); ++j) {
      const auto& sys = lm.systems[j];
      CHECK(sys.contributes() == lm.critical_by_facet[j].has_value());
      if (!sys.contributes()) continue;
      ++contributing;
      const CellId c = *lm.critical_by_facet[j];
      CHECK(fp.dim(c) == *sys.critical_dim());
      CHECK(ranks_of_cell(lp.poset, fp, c) == *sys.critical);
      CHECK(lm.facet_of(c) == static_cast<int>(j));
    }
    CHECK(critical_cells(fp, lm.matching).size() == contributing);
  }
}

TEST_CASE("every msi of every weak order interval has type 1 or type 2") {
  for (int n : {3, 4}) {
    const auto w = weak_order(n);
    const Poset& p = w.poset;
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!p.less(x, y) || p.rank(y) - p.rank(x) < 2) continue;
        const auto lp = interval(w, x, y);
        const auto facets = lex_order_facets(lp);
        for (std::size_t j = 0; j < facets.size(); ++j) {
          const auto sys = minimal_skipped_intervals(facets, j);
          const auto labels = simple(lp, facets[j]);
          for (const auto& r : sys.msis) {
            const std::vector<int> seg(labels.begin() + r.lo - 1, labels.begin() + r.hi + 1);
            CHECK(weak_msi_type(seg) != WeakMsiType::none);
          }
        }
      }
  }
}

TEST_CASE("weak S4 leaves one critical cell of dimension 1") {
  const auto w = weak_order(4);
  const auto lm = lex_morse(w);
  const auto crit = critical_cells(lm.face_poset, lm.matching);
  REQUIRE(crit.size() == 1);
  CHECK(lm.face_poset.dim(crit[0]) == 1);
  CHECK(simple(w, lm.facets[lm.facet_of(crit[0])]) == std::vector<int>{3, 2, 1, 3, 2, 3});
}

TEST_CASE("monoid labellings are least-content-increasing") {
  CHECK(classify_labelling(monoid_interval(lex_examp_spec())).least_content_increasing);
  CHECK(classify_labelling(monoid_interval(two_paths_spec())).least_content_increasing);
  CHECK(classify_labelling(pi_sn_poset(3).lp).least_content_increasing);
  CHECK(classify_labelling(pd_poset(2, 3).lp).least_content_increasing);
}

TEST_CASE("effective actions swap exactly two adjacent labels") {
  const auto lp = monoid_interval(lex_examp_spec());
  int applied = 0;
  for (const auto& c : saturated_chains(lp.poset)) {
    const auto labels = lp.chain_labels(c);
    for (int i = 0; i <= static_cast<int>(c.size()); ++i) {
      const auto act = acts_effectively(lp, c, i);
      if (!act.result) continue;
      ++applied;
      auto expect = labels;
      std::swap(expect[i - 1], expect[i]);
      CHECK(lp.chain_labels(*act.result) == expect);
      for (std::size_t k = 0; k < c.size(); ++k)
        if (static_cast<int>(k) != i) CHECK((*act.result)[k] == c[k]);
    }
  }
  CHECK(applied > 0);
  CHECK(acts_effectively(lp, saturated_chains(lp.poset).front(), 0).precondition_failed);
}

TEST_CASE("gradient path of the running example follows s4 s3 s2") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto lm = lex_morse(lp);
  const CellId tau = critical_of(lp, lm, {2, 6, 5, 4, 3});
  const CellId sigma = critical_of(lp, lm, {2, 3, 6, 5, 4});
  const auto paths = gradient_paths(lm.face_poset, lm.matching, tau, sigma);
  REQUIRE(paths.size() == 1);
  CHECK(format_steps(step_word(lp.poset, lm.face_poset, paths[0])) == "d4u4d3u3d2");
  const auto r = red_exp_path(lp, lm, tau, sigma);
  CHECK(r.kind == PathKind::unique_path);
  CHECK(r.word == Word{4, 3, 2});
  CHECK(r.agrees);
  CHECK(r.exhaustive_count == 1);
  const auto sim = simulate_word(lp.poset, lm.face_poset, lm.matching, tau, {4, 3, 2});
  REQUIRE(sim.has_value());
  CHECK(*sim == paths[0]);
}

TEST_CASE("two-paths example has two gradient paths") {
  const auto lp = monoid_interval(two_paths_spec());
  const auto lm = lex_morse(lp);
  const CellId tau = critical_of(lp, lm, {7, 6, 5, 4});
  const CellId sigma = critical_of(lp, lm, {7, 4, 5, 6});
  CHECK(count_gradient_paths(lm.face_poset, lm.matching, tau, sigma) == 2);
  const auto r = red_exp_path(lp, lm, tau, sigma);
  CHECK(r.kind == PathKind::two_paths);
  CHECK(r.agrees);
}

}  // TEST_SUITE
