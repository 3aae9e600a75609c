#include <doctest.h>

#include "morse/reduced_words.hpp"
#include "oracles.hpp"

using namespace morse;

TEST_SUITE("reduced_words") {

TEST_CASE("basic permutation helpers") {
  CHECK(identity_permutation(3) == Permutation{1, 2, 3});
  CHECK(is_permutation({2, 3, 1}));
  CHECK_FALSE(is_permutation({1, 1, 3}));
  CHECK(inverse({2, 3, 1}) == Permutation{3, 1, 2});
  CHECK(inversion_count({3, 2, 1}) == 3);
  CHECK(inversions({2, 1, 3}) == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(apply_word({1, 2, 1}, 3) == Permutation{3, 2, 1});
  CHECK(is_reduced({1, 2, 1}, 3));
  CHECK_FALSE(is_reduced({1, 1}, 3));
  CHECK_THROWS_AS(apply_word({3}, 3), Error);
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("reduced words of the longest element of S3 and S4") {
  CHECK(all_reduced_words({3, 2, 1}) == std::set<Word>{{1, 2, 1}, {2, 1, 2}});
  CHECK(all_reduced_words({4, 3, 2, 1}).size() == 16);
  CHECK_THROWS_AS(all_reduced_words(identity_permutation(9)), SizeGuard);
}

TEST_CASE("commutation classes and braid patterns") {
  CHECK(commutation_class({1, 3}) == std::set<Word>{{1, 3}, {3, 1}});
  CHECK(commutation_class({1, 2, 1}).size() == 1);
  CHECK(class_has_braid_pattern({2, 1, 2}));
  CHECK_FALSE(class_has_braid_pattern({1, 2, 1}));
  CHECK_FALSE(class_has_braid_pattern({2, 1, 2}, true));
  CHECK(class_has_braid_pattern({2, 3, 1, 2}) == false);
}

TEST_CASE("lex-first word of the longest element") {
  CHECK(canonical_lexfirst({4, 3, 2, 1}) == Word{1, 2, 1, 3, 2, 1});
  CHECK(canonical_lexfirst(identity_permutation(4)).empty());
  CHECK(lexfirst_conditions({1, 2, 1, 3, 2, 1}));
  CHECK_FALSE(lexfirst_conditions({3, 1}));
  CHECK_FALSE(lexfirst_conditions({2, 1, 2}));
}

TEST_CASE("canonical lex-first word matches brute force for n <= 5") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& p : all_permutations(n)) {
      const Word w = canonical_lexfirst(p);
      REQUIRE(w == oracle::lexmin_reduced_word(p));
      CHECK(apply_word(w, n) == p);
      CHECK(is_reduced(w, n));
      CHECK(satisfies_type_bounds(type_vector(w, n)));
      int passing = 0;
      for (const auto& v : all_reduced_words(p)) passing += lexfirst_conditions(v);
      CHECK(passing == 1);
    }
}

TEST_CASE("type vectors") {
  CHECK(type_vector({1, 2, 1, 3, 2, 1}, 4) == std::vector<int>{3, 2, 1});
  CHECK(satisfies_type_bounds({3, 2, 1}));
  CHECK_FALSE(satisfies_type_bounds({0, 0, 2}));
  CHECK_FALSE(satisfies_type_bounds({2, 0, 0}));
}

TEST_CASE("321-avoidance") {
  CHECK(is_321_avoiding({2, 1, 4, 3}));
  CHECK_FALSE(is_321_avoiding({3, 2, 1}));
  int count = 0;
  for (const auto& p : all_permutations(5)) count += is_321_avoiding(p);
  CHECK(count == 42);
}

TEST_CASE("ascending form conditions") {
  CHECK(ascending_form_conditions({1, 2}));
  CHECK_FALSE(ascending_form_conditions({1, 3}));
  CHECK_FALSE(ascending_form_conditions({2, 1, 2}));
  CHECK(ascending_form_conditions({2, 1, 2}, true));
}

}  // TEST_SUITE
