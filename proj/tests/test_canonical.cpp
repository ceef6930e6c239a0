#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"
#include "ramsey/canonical.hpp"

using namespace ramsey;
using namespace ramsey::testing;

TEST_CASE("automorphism group sizes") {
  long long factorial = 1;
  for (int d = 0; d <= 5; ++d) {
    if (d > 0) factorial *= d;
    CHECK(automorphisms(Graph::empty(d)).size() == static_cast<std::size_t>(factorial));
  }
  CHECK(automorphisms(make_cycle(5)).size() == 10);
  // the vertex-transitive quartic graph of order 8 with the largest group
  CHECK(automorphisms(make_complete_bipartite(4, 4)).size() == 1152);
}

TEST_CASE("automorphisms agree with permutation brute force") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 20; ++it) {
    int n = 1 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n);
    CHECK(automorphisms(g) == naive_automorphisms(g));
  }
}

TEST_CASE("canonical bytes are invariant under relabelling") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n);
    std::string bytes = canonical_form(g).bytes;
    Perm p = random_perm(rng, n);
    CHECK(canonical_form(apply_perm(g, p)).bytes == bytes);
  }
}

TEST_CASE("the canonical permutation realizes the canonical bytes") {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 30; ++it) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
    CanonicalForm cf = canonical_form(g);
    Graph rep = apply_perm(g, cf.perm);
    CHECK(canonical_form(rep).bytes == cf.bytes);
    // the representative of a representative is itself
    CHECK(canonical_representative(rep) == rep);
  }
}

TEST_CASE("every reported automorphism fixes the graph and the set is closed") {
  std::mt19937_64 rng(15);
  for (int it = 0; it < 15; ++it) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
    auto auts = automorphisms(g);
    std::set<Perm> group(auts.begin(), auts.end());
    for (const Perm& p : auts) CHECK(apply_perm(g, p) == g);
    for (const Perm& p : auts)
      for (const Perm& q : auts) CHECK(group.count(compose(p, q)) == 1);
  }
}

TEST_CASE("non-isomorphic graphs get distinct bytes") {
  CHECK(canonical_form(make_path(4)).bytes != canonical_form(make_cycle(4)).bytes);
  CHECK(canonical_form(make_cycle(6)).bytes !=
        canonical_form(make_complete_bipartite(3, 3)).bytes);
}
