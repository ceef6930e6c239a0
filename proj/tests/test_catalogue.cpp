#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "helpers.hpp"
#include "ramsey/catalogue.hpp"
#include "ramsey/graph6.hpp"

using namespace ramsey;
using namespace ramsey::testing;

namespace {

// Canonical dedup over every labelled graph of order n, walking the edge
// masks in gray-code order so each step flips a single edge.
long long count_good_classes(int n, int s, int t) {
  std::vector<std::pair<int, int>> pair_of_bit;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_of_bit.emplace_back(u, v);
  Graph g = Graph::empty(n);
  std::set<std::string> reps;
  if (is_good(g, s, t)) reps.insert(canonical_form(g).bytes);
  std::uint64_t steps = (std::uint64_t{1} << pair_of_bit.size()) - 1;
  for (std::uint64_t k = 1; k <= steps; ++k) {
    auto [u, v] = pair_of_bit[static_cast<std::size_t>(std::countr_zero(k))];
    g.set_edge(u, v, !g.has_edge(u, v));
    if (is_good(g, s, t)) reps.insert(canonical_form(g).bytes);
  }
  return static_cast<long long>(reps.size());
}

}  // namespace

TEST_CASE("generated catalogues match labelled-graph brute force up to order 8") {
  for (auto [s, t] : std::initializer_list<std::pair<int, int>>{{3, 3}, {3, 4}}) {
    Catalogue cat = generate_catalogue(s, t, 8);
    for (int n = 1; n <= 8; ++n)
      CHECK(static_cast<long long>(cat.by_order[n].size()) == count_good_classes(n, s, t));
  }
}

TEST_CASE("the (3,3) catalogue dies at order 6") {
  Catalogue cat = generate_catalogue(3, 3, 6);
  CHECK(cat.by_order[5].size() == 1);  // the 5-cycle
  CHECK(canonical_form(cat.by_order[5][0]).bytes == canonical_form(make_cycle(5)).bytes);
  CHECK(cat.by_order[6].empty());
}

TEST_CASE("(3,5) per-order counts at small orders") {
  Catalogue cat = generate_catalogue(3, 5, 8);
  CHECK(cat.by_order[5].size() == 13);
  CHECK(cat.by_order[6].size() == 32);
  CHECK(cat.by_order[7].size() == 71);
  CHECK(cat.by_order[8].size() == 179);
}

TEST_CASE("generation is insensitive to parent order") {
  Catalogue cat = generate_catalogue(3, 5, 9);
  std::vector<Graph> parents = cat.by_order[9];
  std::vector<Graph> children = next_order(parents, 3, 5);
  std::mt19937_64 rng(41);
  for (int it = 0; it < 3; ++it) {
    std::shuffle(parents.begin(), parents.end(), rng);
    CHECK(next_order(parents, 3, 5) == children);
  }
  // and to the worker count
  CHECK(next_order(parents, 3, 5, 4) == children);
}

TEST_CASE("pointed extraction invariants") {
  std::mt19937_64 rng(42);
  Catalogue cat = generate_catalogue(3, 5, 9);
  for (int it = 0; it < 20; ++it) {
    const auto& graphs = cat.by_order[9];
    const Graph& g = graphs[rng() % graphs.size()];
    auto pointed = extract_pointed(g);
    CHECK(pointed.size() == static_cast<std::size_t>(g.n));
    for (const PointedGraph& pg : pointed) {
      CHECK(pg.g.n == g.n);
      CHECK(pg.g.degree(pg.point()) == pg.d);
      // neighbourhood occupies 0..d-1 and is literally the canonical type
      std::uint64_t kmask = pg.d == 0 ? 0 : (std::uint64_t{1} << pg.d) - 1;
      CHECK(pg.g.neighbours(pg.point()) == kmask);
      Graph k = induced(pg.g, kmask);
      CanonicalForm cf = canonical_form(k);
      CHECK(cf.bytes == pg.type_bytes);
      CHECK(apply_perm(k, cf.perm) == k);  // already the representative
      CHECK(canonical_form(pg.g).bytes == canonical_form(g).bytes);
    }
  }
}

TEST_CASE("pointed graphs of the 5-cycle form one type") {
  auto pointed = extract_pointed(make_cycle(5));
  CHECK(pointed.size() == 5);
  auto groups = group_by_type(pointed);
  CHECK(groups.size() == 1);
  CHECK(groups.begin()->second.size() == 5);
  // the type is two isolated vertices
  CHECK(groups.begin()->first == canonical_form(Graph::empty(2)).bytes);
}

TEST_CASE("stats table on a single graph") {
  StatsTable table = stats_table({make_cycle(5)});
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].e == 5);
  CHECK(table.rows[0].count == 1);
  CHECK(table.all.count == 1);
  CHECK_THROWS_AS(stats_table({}), ValidationError);
}

TEST_CASE("catalogue files round trip and ingest validates") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ramsey_cat_test";
  fs::remove_all(dir);
  Catalogue cat = generate_catalogue(3, 4, 7);
  write_catalogue(cat, dir.string());
  CHECK(fs::exists(dir / "r3_4_7.g6"));

  IngestReport rep;
  Catalogue back = ingest_catalogue(dir.string(), 3, 4, &rep);
  CHECK(back.complete == false);
  for (auto& [n, graphs] : cat.by_order) CHECK(back.by_order[n] == graphs);
  CHECK(rep.accepted == rep.lines);

  // a bad line is rejected with a validation error
  std::ofstream bad(dir / "bad.g6", std::ios::binary);
  bad << g6_encode(make_complete(4)) << '\n';  // contains a 3-clique
  bad.close();
  CHECK_THROWS_AS(ingest_catalogue(dir.string(), 3, 4, nullptr), ValidationError);
  fs::remove_all(dir);
}
