#include <doctest.h>

#include "morse/case_studies.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

Poset boolean_b2() {
  return Poset::build({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "0", "1");
}

Poset chain_poset(int len) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  for (int k = 0; k <= len; ++k) ids.push_back(std::to_string(k));
  for (int k = 0; k < len; ++k) covers.emplace_back(ids[k], ids[k + 1]);
  return Poset::build(ids, covers, ids.front(), ids.back());
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("build validates covers") {
  CHECK_THROWS_AS(Poset::build({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "z"}}), Error);
  CHECK_THROWS_AS(Poset::build({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
  CHECK_THROWS_AS(Poset::build({"a"}, {{"a", "a"}}), Error);
  CHECK_THROWS_AS(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}), Error);
  CHECK_THROWS_AS(Poset::build({"a", "b", "c"}, {{"a", "b"}}, "a"), Error);
  CHECK_THROWS_AS(Poset::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}, "a", "b"), Error);
}

TEST_CASE("non-graded posets are accepted but rank throws") {
  Poset p = Poset::build({"0", "x", "y", "z", "1"}, {{"0", "x"}, {"x", "y"}, {"y", "1"}, {"0", "z"}, {"z", "1"}},
                         "0", "1");
  CHECK_FALSE(p.graded());
  CHECK_THROWS_AS(p.rank(0), NotGraded);
}

TEST_CASE("order relation and ranks of B2") {
  Poset p = boolean_b2();
  CHECK(p.size() == 4);
  CHECK(p.graded());
  CHECK(p.max_rank() == 2);
  CHECK(p.leq(p.index_of("0"), p.index_of("1")));
  CHECK_FALSE(p.leq(p.index_of("a"), p.index_of("b")));
  CHECK(p.rank(p.index_of("a")) == 1);
  CHECK(p.cover_index(p.index_of("a"), p.index_of("b")) == -1);
}

TEST_CASE("labelling rejects repeated up-labels") {
  Poset p = boolean_b2();
  EdgeLabelling bad({{1}, {1}, {2}, {2}});
  CHECK_THROWS_AS(bad.validate(p), Error);
  EdgeLabelling short_one(std::vector<Label>{{1}});
  CHECK_THROWS_AS(short_one.validate(p), Error);
}

TEST_CASE("saturated chains and Möbius of small posets") {
  CHECK(saturated_chains(boolean_b2()).size() == 2);
  CHECK(mobius(boolean_b2()) == 1);
  CHECK(mobius(chain_poset(1)) == -1);
  CHECK(mobius(chain_poset(3)) == 0);
  CHECK(order_complex(chain_poset(1)).facets().size() == 1);
  CHECK(order_complex(chain_poset(1)).facets()[0].empty());
}

TEST_CASE("Möbius agrees with chain counting on case-study intervals") {
  auto w = weak_order(4);
  const Poset& p = w.poset;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) {
        Poset iv = interval(p, x, y);
        REQUIRE(mobius(iv) == oracle::mobius_by_chains(iv));
      }
  auto pi = pi_sn_poset(4);
  CHECK(mobius(pi.lp.poset) == oracle::mobius_by_chains(pi.lp.poset));
  auto pd = pd_poset(3, 2);
  CHECK(mobius(pd.lp.poset) == oracle::mobius_by_chains(pd.lp.poset));
}

TEST_CASE("mobius_from_bottom matches interval Möbius") {
  auto pd = pd_poset(2, 3);
  const Poset& p = pd.lp.poset;
  const auto mu = mobius_from_bottom(p);
  for (int y = 0; y < p.size(); ++y) CHECK(mu[y] == mobius(interval(p, *p.bottom(), y)));
}

TEST_CASE("face poset of the hexagon") {
  SimplicialComplex hex({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  FacePoset fp(hex);
  CHECK(fp.size() == 13);
  CHECK(fp.dim(0) == -1);
  CHECK(fp.cells_of_dim(0).size() == 6);
  CHECK(fp.cells_of_dim(1).size() == 6);
  CHECK(fp.count_incidences() == 6 + 12);
  CHECK(fp.is_incidence(fp.at({0}), fp.at({0, 1})));
  CHECK_FALSE(fp.is_incidence(fp.at({2}), fp.at({0, 1})));
}

TEST_CASE("simplicial complex keeps only maximal faces") {
  SimplicialComplex c({{0, 1, 2}, {1, 0}, {3}, {3}});
  CHECK(c.facets().size() == 2);
  CHECK(c.dimension() == 2);
  CHECK(SimplicialComplex(std::vector<std::vector<int>>{}).facets().empty());
}

TEST_CASE("interval keeps ids and restricts labels") {
  auto w = weak_order(3);
  const Poset& p = w.poset;
  auto iv = interval(w, p.index_of("123"), p.index_of("231"));
  CHECK(iv.poset.size() == 3);
  CHECK(iv.poset.id(*iv.poset.bottom()) == "123");
  CHECK(iv.chain_labels(saturated_chains(iv.poset).front()) == std::vector<Label>{{1}, {2}});
  CHECK_THROWS_AS(interval(p, p.index_of("213"), p.index_of("132")), Error);
}

}  // TEST_SUITE
