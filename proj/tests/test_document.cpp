#include <doctest.h>

#include "morse/cancellation.hpp"
#include "morse/case_studies.hpp"
#include "morse/document.hpp"

using namespace morse;

namespace {

int count(const std::string& s, const std::string& needle) {
  int n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

LabelledPoset boolean_b2() {
  Poset p = Poset::build({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}, "0", "1");
  EdgeLabelling el({{1}, {2}, {2}, {1}});
  el.validate(p);
  return {p, el};
}

}  // namespace

TEST_SUITE("document") {

TEST_CASE("poset documents round-trip byte for byte") {
  for (const auto& [lp, family] : std::vector<std::pair<LabelledPoset, std::string>>{
           {weak_order(3), "weak"}, {pi_sn_poset(3).lp, "pisn"}, {pd_poset(2, 2).lp, "pd"}, {boolean_b2(), ""}}) {
    const auto doc = PosetDocument::from_poset(lp, family, Json{{"n", 3}});
    const std::string text = doc.serialize();
    const auto again = PosetDocument::parse(text);
    CHECK(again.serialize() == text);
    const auto back = again.to_poset();
    CHECK(back.poset.ids() == lp.poset.ids());
    CHECK(back.poset.covers() == lp.poset.covers());
    CHECK(back.labels.labels() == lp.labels.labels());
    CHECK(back.poset.bottom() == lp.poset.bottom());
    CHECK(back.poset.top() == lp.poset.top());
    CHECK(again.family == family);
  }
}

TEST_CASE("malformed documents raise Error") {
  CHECK_THROWS_AS(PosetDocument::parse("{"), Error);
  CHECK_THROWS_AS(PosetDocument::parse(R"({"format":"matching","pairs":[]})"), Error);
  CHECK_THROWS_AS(PosetDocument::parse(R"({"format":"poset","elements":["a"]})"), Error);
  CHECK_THROWS_AS(
      PosetDocument::parse(
          R"({"format":"poset","elements":["a","b"],"covers":[{"lower":"a","upper":"c","label":[1]}]})")
          .to_poset(),
      Error);
  CHECK_THROWS_AS(MatchingDocument::parse("[]"), Error);
}

TEST_CASE("matching documents round-trip and reject non-incidences") {
  const auto lp = weak_order(3);
  const auto lm = lex_morse(lp);
  const auto doc = MatchingDocument::from_matching(lp.poset, lm.face_poset, lm.matching);
  const auto text = doc.serialize();
  CHECK(MatchingDocument::parse(text).serialize() == text);
  CHECK(MatchingDocument::parse(text).to_matching(lp.poset, lm.face_poset) == lm.matching);

  MatchingDocument bad;
  bad.pairs.push_back({{"213"}, {"132", "231"}});
  CHECK_THROWS_AS(bad.to_matching(lp.poset, lm.face_poset), Error);
  MatchingDocument unknown;
  unknown.pairs.push_back({{"999"}, {"213", "231"}});
  CHECK_THROWS_AS(unknown.to_matching(lp.poset, lm.face_poset), Error);
}

TEST_CASE("critical pairs are read without the incidence check") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto lm = lex_morse(lp);
  MatchingDocument doc;
  doc.pairs.push_back({{"2.0.0.0.0", "2.2.1.0.0", "2.2.1.0.1"},
                       {"2.0.0.0.0", "2.2.0.0.0", "2.2.0.0.1", "2.2.0.1.1"}});
  CHECK_THROWS_AS(doc.to_matching(lp.poset, lm.face_poset), Error);
  const auto pairs = doc.to_pairs(lp.poset, lm.face_poset);
  REQUIRE(pairs.size() == 1);
  CHECK(lm.face_poset.dim(pairs[0].first) == 2);
  CHECK(lm.face_poset.dim(pairs[0].second) == 3);
  CHECK(cancel_explicit_pairs(lm.face_poset, lm.matching, pairs).cancelled_pairs == 1);
}

TEST_CASE("cell ids are listed bottom to top") {
  const auto lp = weak_order(3);
  FacePoset fp(order_complex(lp.poset));
  const CellId c = cell_from_ids(lp.poset, fp, {"231", "213"});
  CHECK(cell_ids(lp.poset, fp, c) == std::vector<std::string>{"213", "231"});
}

TEST_CASE("report skeleton") {
  const auto r = make_report("betti", Json{{"field", "Q"}});
  CHECK(r["tool"] == "morse");
  CHECK(r["version"] == kToolVersion);
  CHECK(r["command"] == "betti");
  CHECK(r["params"]["field"] == "Q");
}

TEST_CASE("Hasse diagram of B2") {
  const auto dot = hasse_dot(boolean_b2());
  CHECK(dot.rfind("digraph hasse {", 0) == 0);
  CHECK(count(dot, " -> ") == 4);
  CHECK(count(dot, ";\n") - count(dot, " -> ") - 1 == 4);
}

TEST_CASE("labels are formatted for display") {
  CHECK(format_label({3}) == "3");
  CHECK(format_label({2, 3, 4, 1}) == "(2,3,4,1)");
  CHECK(format_label(sentinel_label()) == "*");
}

TEST_CASE("P^M drawing marks matched edges") {
  const auto lp = monoid_interval(lex_examp_spec());
  const auto lm = lex_morse(lp);
  const auto pm = build_pm(lm.face_poset, lm.matching);
  const auto g = greedy_pm_matching(pm, lm.face_poset);
  const auto dot = pm_dot(lp.poset, lm.face_poset, pm, g);
  CHECK(count(dot, " -> ") == pm.total_edges());
  CHECK(count(dot, "style=bold") == static_cast<int>(g.size()));
  CHECK(count(dot, "comment=") == static_cast<int>(pm.vertices.size()));
  const auto empty = pm_dot(lp.poset, lm.face_poset, MultiGraphFacePoset{});
  CHECK(count(empty, " -> ") == 0);
}

}  // TEST_SUITE
