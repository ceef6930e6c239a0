#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ramsey/clauses.hpp"

using namespace ramsey;

TEST_CASE("clause construction is validated") {
  ClauseSystem cs;
  cs.num_vars = 4;
  CHECK_THROWS_AS(cs.add_clique({}), std::invalid_argument);
  CHECK_THROWS_AS(cs.add_indep({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}), std::invalid_argument);
  CHECK_THROWS_AS(cs.add_clique({4}), std::invalid_argument);
  cs.add_clique({0, 1});
  cs.add_indep({2});
  cs.build_occurrence_lists();
  CHECK(cs.occ_clique[0].size() == 1);
  CHECK(cs.occ_clique[2].empty());
  CHECK(cs.occ_indep[2].size() == 1);
}

TEST_CASE("satisfies checks both clause kinds") {
  ClauseSystem cs;
  cs.num_vars = 2;
  cs.add_clique({0, 1});  // not both
  cs.add_indep({0, 1});   // at least one
  cs.build_occurrence_lists();
  VarSet a;
  CHECK(!satisfies(cs, a));  // all false violates the hit clause
  a.set(0);
  CHECK(satisfies(cs, a));
  a.set(1);
  CHECK(!satisfies(cs, a));  // all true violates the clique clause
  CHECK(enumerate_satisfying(cs).size() == 2);
}

TEST_CASE("shuffled systems keep the same clauses") {
  ClauseSystem cs;
  cs.num_vars = 6;
  cs.add_clique({0, 1, 2});
  cs.add_clique({3, 4});
  cs.add_indep({1, 5});
  cs.add_indep({2});
  cs.build_occurrence_lists();
  ClauseSystem sh = shuffled(cs, 99);
  CHECK(sh.clique.size() == cs.clique.size());
  CHECK(sh.indep.size() == cs.indep.size());
  CHECK(enumerate_satisfying(sh) == enumerate_satisfying(cs));
}

TEST_CASE("the exhaustive oracle refuses oversized universes") {
  ClauseSystem cs;
  cs.num_vars = 30;
  cs.build_occurrence_lists();
  CHECK_THROWS_AS(enumerate_satisfying(cs), std::invalid_argument);
}
