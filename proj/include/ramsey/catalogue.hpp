#pragma once

#include <map>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Isomorph-free class of (s,t)-good graphs, canonically labelled per order
// and sorted by canonical bytes.
struct Catalogue {
  int s = 0, t = 0;
  std::map<int, std::vector<Graph>> by_order;
  bool complete = false;  // generated exhaustively vs ingested/partial
};

// All graphs of order n+1 in R(s,t) obtained by one-point extension of the
// parents, canonically deduplicated.  `jobs` > 1 parallelizes over parents;
// the result is independent of job count and parent order.
std::vector<Graph> next_order(const std::vector<Graph>& parents, int s, int t, int jobs = 1);

// Exhaustive generation up to nmax, starting from the single-vertex graph.
Catalogue generate_catalogue(int s, int t, int nmax, int jobs = 1);

struct StatsRow {
  long long e = 0;
  long long count = 0;
  long long i3_min = 0, i3_max = 0, i4_min = 0, i4_max = 0, c3_min = 0, c3_max = 0;
  int delta_min = 0, delta_max = 0, Delta_min = 0, Delta_max = 0;
};

struct StatsTable {
  std::vector<StatsRow> rows;  // one per occurring edge count, ascending
  StatsRow all;                // aggregate
};

StatsTable stats_table(const std::vector<Graph>& graphs);

// A good graph with a marked vertex, relabelled so that the neighbourhood of
// the marked vertex occupies 0..d-1 and is bit-for-bit the canonical
// representative of its type; the marked vertex sits at position d and the
// private side fills d+1..n-1.
struct PointedGraph {
  Graph g;
  int d = 0;
  std::string type_bytes;

  int point() const { return d; }
  int side_size() const { return g.n - d - 1; }
};

// Relabelling of (g, a) as a pointed graph plus the full permutation used.
// Among relabellings realizing the canonical type on 0..d-1, the
// lexicographically least full labelling is chosen.
struct PointedExtraction {
  PointedGraph pg;
  Perm sigma;  // original vertex -> new position
};

PointedExtraction pointed_at(const Graph& g, int a);

// One pointed graph per vertex, in vertex order; no isomorphism dedup.
std::vector<PointedGraph> extract_pointed(const Graph& g);

std::map<std::string, std::vector<PointedGraph>> group_by_type(
    const std::vector<PointedGraph>& pointed);

// Catalogue files: one graph6 line per graph, named r<s>_<t>_<n>.g6, sorted
// by canonical bytes.
std::string catalogue_file_name(int s, int t, int n);
void write_catalogue(const Catalogue& cat, const std::string& dir);
std::vector<Graph> read_graph6_file(const std::string& path);

struct IngestReport {
  long long lines = 0;
  long long accepted = 0;
  std::map<int, long long> per_order;
};

// Ingest a directory of graph6 files (any names/layout): every line is
// validated with is_good and canonically deduplicated.
Catalogue ingest_catalogue(const std::string& dir, int s, int t, IngestReport* report = nullptr,
                           int jobs = 1);

}  // namespace ramsey
