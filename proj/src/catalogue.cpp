#include "ramsey/catalogue.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "ramsey/extend.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

namespace {

// sort + dedup by canonical bytes; input graphs must already be canonical
void sort_dedup(std::vector<std::pair<std::string, Graph>>& reps) {
  std::sort(reps.begin(), reps.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const auto& a, const auto& b) { return a.first == b.first; }),
             reps.end());
}

}  // namespace

std::vector<Graph> next_order(const std::vector<Graph>& parents, int s, int t, int jobs) {
  std::vector<std::pair<std::string, Graph>> reps;
#ifdef _OPENMP
#pragma omp parallel num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
  {
    std::vector<std::pair<std::string, Graph>> local;
#pragma omp for schedule(dynamic) nowait
    for (long long i = 0; i < static_cast<long long>(parents.size()); ++i) {
      for (const Graph& child : one_point_extensions(parents[static_cast<std::size_t>(i)], s, t)) {
        CanonicalForm cf = canonical_form(child);
        local.emplace_back(cf.bytes, apply_perm(child, cf.perm));
      }
    }
#pragma omp critical
    reps.insert(reps.end(), local.begin(), local.end());
  }
#else
  (void)jobs;
  for (const Graph& parent : parents)
    for (const Graph& child : one_point_extensions(parent, s, t)) {
      CanonicalForm cf = canonical_form(child);
      reps.emplace_back(cf.bytes, apply_perm(child, cf.perm));
    }
#endif
  sort_dedup(reps);
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [bytes, g] : reps) out.push_back(g);
  return out;
}

Catalogue generate_catalogue(int s, int t, int nmax, int jobs) {
  Catalogue cat;
  cat.s = s;
  cat.t = t;
  cat.complete = true;
  if (nmax < 1) return cat;
  Graph k1 = Graph::empty(1);
  cat.by_order[1] = is_good(k1, s, t) ? std::vector<Graph>{k1} : std::vector<Graph>{};
  for (int n = 1; n < nmax; ++n)
    cat.by_order[n + 1] = next_order(cat.by_order[n], s, t, jobs);
  return cat;
}

StatsTable stats_table(const std::vector<Graph>& graphs) {
  if (graphs.empty()) throw ValidationError("stats_table: empty catalogue");
  std::map<long long, std::vector<GraphStats>> by_e;
  for (const Graph& g : graphs) {
    GraphStats st = count_sets(g);
    by_e[st.e].push_back(st);
  }
  auto fold = [](const std::vector<GraphStats>& group) {
    StatsRow r;
    r.e = group[0].e;
    r.count = static_cast<long long>(group.size());
    r.i3_min = r.i3_max = group[0].i3;
    r.i4_min = r.i4_max = group[0].i4;
    r.c3_min = r.c3_max = group[0].c3;
    r.delta_min = r.delta_max = group[0].delta;
    r.Delta_min = r.Delta_max = group[0].Delta;
    for (const GraphStats& st : group) {
      r.i3_min = std::min(r.i3_min, st.i3);
      r.i3_max = std::max(r.i3_max, st.i3);
      r.i4_min = std::min(r.i4_min, st.i4);
      r.i4_max = std::max(r.i4_max, st.i4);
      r.c3_min = std::min(r.c3_min, st.c3);
      r.c3_max = std::max(r.c3_max, st.c3);
      r.delta_min = std::min(r.delta_min, st.delta);
      r.delta_max = std::max(r.delta_max, st.delta);
      r.Delta_min = std::min(r.Delta_min, st.Delta);
      r.Delta_max = std::max(r.Delta_max, st.Delta);
    }
    return r;
  };
  StatsTable table;
  std::vector<GraphStats> everything;
  for (auto& [e, group] : by_e) {
    table.rows.push_back(fold(group));
    everything.insert(everything.end(), group.begin(), group.end());
  }
  table.all = fold(everything);
  table.all.e = -1;
  return table;
}

PointedExtraction pointed_at(const Graph& g, int a) {
  if (a < 0 || a >= g.n) throw std::out_of_range("pointed_at: vertex out of range");
  std::uint64_t nbmask = g.rows[a];
  int d = std::popcount(nbmask);
  Graph k_ind = induced(g, nbmask);
  CanonicalResult canon = canonicalize(k_ind);

  // Labellings of the neighbourhood realizing the canonical representative
  // are exactly perm * aut over the neighbourhood's automorphisms; pick the
  // lexicographically least sequence over the neighbours in ascending
  // original order, which is the lex-least full labelling since every other
  // vertex is placed deterministically.
  Perm best = canon.form.perm;
  for (const Perm& aut : canon.automorphisms) {
    Perm beta = compose(canon.form.perm, aut);
    if (beta < best) best = beta;
  }

  Perm sigma(static_cast<std::size_t>(g.n));
  int idx = 0;
  std::uint64_t nb = nbmask;
  while (nb) {
    int v = std::countr_zero(nb);
    nb &= nb - 1;
    sigma[static_cast<std::size_t>(v)] = best[static_cast<std::size_t>(idx++)];
  }
  sigma[static_cast<std::size_t>(a)] = static_cast<std::uint8_t>(d);
  int next = d + 1;
  for (int v = 0; v < g.n; ++v) {
    if (v == a || (nbmask >> v) & 1) continue;
    sigma[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(next++);
  }

  PointedExtraction out;
  out.pg.g = apply_perm(g, sigma);
  out.pg.d = d;
  out.pg.type_bytes = canon.form.bytes;
  out.sigma = std::move(sigma);
  return out;
}

std::vector<PointedGraph> extract_pointed(const Graph& g) {
  std::vector<PointedGraph> out;
  out.reserve(static_cast<std::size_t>(g.n));
  for (int a = 0; a < g.n; ++a) out.push_back(pointed_at(g, a).pg);
  return out;
}

std::map<std::string, std::vector<PointedGraph>> group_by_type(
    const std::vector<PointedGraph>& pointed) {
  std::map<std::string, std::vector<PointedGraph>> groups;
  for (const PointedGraph& pg : pointed) groups[pg.type_bytes].push_back(pg);
  return groups;
}

std::string catalogue_file_name(int s, int t, int n) {
  return "r" + std::to_string(s) + "_" + std::to_string(t) + "_" + std::to_string(n) + ".g6";
}

void write_catalogue(const Catalogue& cat, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (auto& [n, graphs] : cat.by_order) {
    std::ofstream out(std::filesystem::path(dir) / catalogue_file_name(cat.s, cat.t, n),
                      std::ios::binary);
    if (!out) throw std::runtime_error("write_catalogue: cannot open output file");
    for (const Graph& g : graphs) out << g6_encode(g) << '\n';
  }
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_graph6_file: cannot open " + path);
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '>') continue;  // format header lines
    out.push_back(g6_decode(line));
  }
  return out;
}

Catalogue ingest_catalogue(const std::string& dir, int s, int t, IngestReport* report, int jobs) {
  std::vector<std::string> files;
  for (auto& entry : std::filesystem::recursive_directory_iterator(dir))
    if (entry.is_regular_file()) files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  IngestReport rep;
  std::map<int, std::vector<std::pair<std::string, Graph>>> reps;
  for (const std::string& path : files) {
    std::vector<Graph> graphs = read_graph6_file(path);
    rep.lines += static_cast<long long>(graphs.size());
    std::vector<std::pair<std::string, Graph>> canon(graphs.size());
    long long bad = -1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : 1) if (jobs > 1)
#endif
    for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i) {
      const Graph& g = graphs[static_cast<std::size_t>(i)];
      if (!is_good(g, s, t)) {
#ifdef _OPENMP
#pragma omp critical
#endif
        bad = i;
        continue;
      }
      CanonicalForm cf = canonical_form(g);
      canon[static_cast<std::size_t>(i)] = {cf.bytes, apply_perm(g, cf.perm)};
    }
    if (bad >= 0)
      throw ValidationError("ingest: graph " + std::to_string(bad) + " fails goodness check in " +
                            path);
    for (auto& [bytes, g] : canon) {
      rep.accepted++;
      reps[g.n].emplace_back(bytes, g);
    }
  }
  Catalogue cat;
  cat.s = s;
  cat.t = t;
  cat.complete = false;
  for (auto& [n, list] : reps) {
    sort_dedup(list);
    auto& dst = cat.by_order[n];
    dst.reserve(list.size());
    for (auto& [bytes, g] : list) dst.push_back(g);
    rep.per_order[n] = static_cast<long long>(dst.size());
  }
  if (report) *report = rep;
  return cat;
}

}  // namespace ramsey
