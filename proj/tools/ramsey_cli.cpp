#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramsey/csp_engine.hpp"
#include "ramsey/extend.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/interval_engine.hpp"
#include "ramsey/pipeline.hpp"

using namespace ramsey;

// exit codes: 0 success, 2 engine mismatch, 3 validation failure, 4 I/O
namespace {

constexpr int kExitMismatch = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

void print_stats_table(const StatsTable& table) {
  std::printf("%6s %9s %9s %9s %7s %7s %8s\n", "e", "i3", "i4", "c3", "min-deg", "max-deg",
              "count");
  auto line = [](const StatsRow& r, const char* label) {
    auto range = [](long long lo, long long hi) {
      return std::to_string(lo) + "-" + std::to_string(hi);
    };
    std::printf("%6s %9s %9s %9s %7s %7s %8lld\n", label, range(r.i3_min, r.i3_max).c_str(),
                range(r.i4_min, r.i4_max).c_str(), range(r.c3_min, r.c3_max).c_str(),
                range(r.delta_min, r.delta_max).c_str(), range(r.Delta_min, r.Delta_max).c_str(),
                r.count);
  };
  for (const StatsRow& r : table.rows) line(r, std::to_string(r.e).c_str());
  line(table.all, "all");
}

EngineChoice parse_engine(const std::string& name) {
  if (name == "interval") return EngineChoice::Interval;
  if (name == "csp") return EngineChoice::Csp;
  return EngineChoice::Both;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey-graph toolkit: catalogues, pointed graphs, gluing, extension"};
  app.require_subcommand(1);

  int s = 5, t = 5, nmax = 13, n = 48, jobs = 1;
  int d_min = 0, d_max = kMaxOrder;
  int shard_index = 0, shard_total = 1;
  int a_vertex = 0, b_vertex = 0, gi = 0, hi = 0, pi_index = -1;
  int r_s1t = 25, r_st1 = 25;
  std::uint64_t seed = 0, sample = 0;
  std::string in_path, out_path = ".", engine_name = "both", type_filter;
  std::string enhancements = "auto";
  bool resume = false;

  auto* generate = app.add_subcommand("generate", "generate a catalogue by one-point extension");
  generate->add_option("--s", s)->required();
  generate->add_option("--t", t)->required();
  generate->add_option("--nmax", nmax)->required();
  generate->add_option("--out", out_path);
  generate->add_option("--jobs", jobs);

  auto* stats = app.add_subcommand("stats", "summary statistics of a graph6 file");
  stats->add_option("file", in_path)->required();
  std::string stats_json;
  stats->add_option("--json", stats_json);

  auto* ingest = app.add_subcommand("ingest", "validate and canonicalize a graph6 directory");
  ingest->add_option("dir", in_path)->required();
  ingest->add_option("--s", s)->required();
  ingest->add_option("--t", t)->required();
  ingest->add_option("--out", out_path);
  ingest->add_option("--jobs", jobs);

  auto* pointed = app.add_subcommand("pointed", "pointed-graph counts per point degree");
  pointed->add_option("file", in_path)->required();
  std::string pointed_json;
  pointed->add_option("--json", pointed_json);
  pointed->add_option("--jobs", jobs);

  auto* glue = app.add_subcommand("glue", "solve one gluing pair from a graph6 file");
  glue->add_option("file", in_path)->required();
  glue->add_option("--left", gi, "index of the left graph")->required();
  glue->add_option("--a", a_vertex, "marked vertex in the left graph")->required();
  glue->add_option("--right", hi, "index of the right graph")->required();
  glue->add_option("--b", b_vertex, "marked vertex in the right graph")->required();
  glue->add_option("--pi", pi_index);
  glue->add_option("--s", s);
  glue->add_option("--t", t);
  glue->add_option("--engine", engine_name);

  auto* campaign = app.add_subcommand("campaign", "run gluing problems over a catalogue");
  campaign->add_option("--in", in_path)->required();
  campaign->add_option("--s", s);
  campaign->add_option("--t", t);
  campaign->add_option("--d", d_min);
  campaign->add_option("--d-max", d_max);
  campaign->add_option("--k", type_filter);
  campaign->add_option("--engine", engine_name);
  campaign->add_option("--sample", sample);
  campaign->add_option("--seed", seed);
  campaign->add_option("--shard", shard_index);
  campaign->add_option("--shard-total", shard_total);
  campaign->add_option("--out", out_path);
  campaign->add_option("--jobs", jobs);
  campaign->add_flag("--resume", resume);
  campaign->add_option("--enhancements", enhancements,
                       "probing/ordering heuristics: auto (d <= 7), on, off");

  auto* extend_cmd = app.add_subcommand("extend", "one-point extensions of every input graph");
  extend_cmd->add_option("file", in_path)->required();
  extend_cmd->add_option("--s", s)->required();
  extend_cmd->add_option("--t", t)->required();
  std::string extend_out;
  extend_cmd->add_option("--out", extend_out);

  auto* degree = app.add_subcommand("check-degree", "degree counting argument for order n");
  degree->add_option("--n", n)->required();
  degree->add_option("--s", s);
  degree->add_option("--t", t);
  degree->add_option("--r-s1t", r_s1t, "R(s-1,t)");
  degree->add_option("--r-st1", r_st1, "R(s,t-1)");

  auto* fixture = app.add_subcommand("fixture", "verify the bundled 37-vertex worked example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      Catalogue cat = generate_catalogue(s, t, nmax, jobs);
      write_catalogue(cat, out_path);
      long long total = 0;
      for (auto& [order, graphs] : cat.by_order) {
        std::printf("n=%-3d %8zu\n", order, graphs.size());
        total += static_cast<long long>(graphs.size());
      }
      std::printf("total %8lld\n", total);
    } else if (*stats) {
      StatsTable table = stats_table(read_graph6_file(in_path));
      print_stats_table(table);
      if (!stats_json.empty()) {
        nlohmann::json j;
        for (const StatsRow& r : table.rows)
          j["rows"].push_back({{"e", r.e},
                               {"count", r.count},
                               {"i3", {r.i3_min, r.i3_max}},
                               {"i4", {r.i4_min, r.i4_max}},
                               {"c3", {r.c3_min, r.c3_max}},
                               {"delta", {r.delta_min, r.delta_max}},
                               {"Delta", {r.Delta_min, r.Delta_max}}});
        j["all"] = {{"count", table.all.count}};
        std::ofstream out(stats_json);
        out << j.dump(2) << '\n';
      }
    } else if (*ingest) {
      IngestReport rep;
      Catalogue cat = ingest_catalogue(in_path, s, t, &rep, jobs);
      write_catalogue(cat, out_path);
      std::printf("lines %lld accepted %lld\n", rep.lines, rep.accepted);
      for (auto& [order, count] : rep.per_order)
        std::printf("n=%-3d %8lld distinct\n", order, count);
    } else if (*pointed) {
      std::vector<Graph> graphs = read_graph6_file(in_path);
      std::map<int, long long> per_d;
      std::map<int, std::set<std::string>> types;
      long long total = 0;
      for (const Graph& g : graphs)
        for (const PointedGraph& pg : extract_pointed(g)) {
          per_d[pg.d]++;
          types[pg.d].insert(pg.type_bytes);
          ++total;
        }
      std::printf("%4s %10s %10s\n", "d", "types", "count");
      for (auto& [d, count] : per_d)
        std::printf("%4d %10zu %10lld\n", d, types[d].size(), count);
      std::printf(" all %10s %10lld\n", "", total);
      if (!pointed_json.empty()) {
        nlohmann::json j;
        for (auto& [d, count] : per_d)
          j[std::to_string(d)] = {{"count", count}, {"types", types[d].size()}};
        j["total"] = total;
        std::ofstream out(pointed_json);
        out << j.dump(2) << '\n';
      }
    } else if (*glue) {
      std::vector<Graph> graphs = read_graph6_file(in_path);
      PointedExtraction pl = pointed_at(graphs.at(static_cast<std::size_t>(gi)), a_vertex);
      PointedExtraction pr = pointed_at(graphs.at(static_cast<std::size_t>(hi)), b_vertex);
      std::uint64_t kmask = pl.pg.d == 0 ? 0 : (std::uint64_t{1} << pl.pg.d) - 1;
      auto auts = canonicalize(induced(pl.pg.g, kmask)).automorphisms;
      EngineChoice engine = parse_engine(engine_name);
      for (std::size_t pi = 0; pi < auts.size(); ++pi) {
        if (pi_index >= 0 && static_cast<std::size_t>(pi_index) != pi) continue;
        std::string id = "adhoc:p" + std::to_string(pi);
        GluingProblem problem = build_problem(pl.pg, pr.pg, auts[pi], s, t, id);
        ClauseSystem cs = enumerate_clauses(problem);
        std::vector<VarSet> sols = engine == EngineChoice::Csp ? csp_solve(cs) : interval_search(cs);
        if (engine == EngineChoice::Both && csp_solve(cs) != sols) {
          std::fprintf(stderr, "engine mismatch on %s\n", id.c_str());
          return kExitMismatch;
        }
        for (const CrossMatrix& m : matrices_from_assignments(problem.dprime, sols))
          std::printf("{\"problem\":\"%s\",\"dprime\":%d,\"m\":\"%s\"}\n", id.c_str(), m.dprime,
                      m.bit_string().c_str());
      }
    } else if (*campaign) {
      CampaignSpec cspec;
      cspec.s = s;
      cspec.t = t;
      cspec.catalogue_path = in_path;
      cspec.d_min = d_min;
      cspec.d_max = d_max;
      cspec.type_filter_hex = type_filter;
      cspec.engine = parse_engine(engine_name);
      if (sample > 0) cspec.sample_count = sample;
      cspec.seed = seed;
      cspec.shard_index = shard_index;
      cspec.shard_total = shard_total;
      cspec.out_prefix = out_path;
      cspec.jobs = jobs;
      cspec.resume = resume;
      if (enhancements == "on") cspec.force_enhancements = true;
      if (enhancements == "off") cspec.force_enhancements = false;
      CampaignReport rep = run_campaign(cspec);
      write_campaign_report(rep, cspec, out_path + ".report.json");
      std::printf("problems %lld failed %lld solutions %lld (%lld nonisomorphic) mismatches %d\n",
                  rep.problems_attempted, rep.problems_failed, rep.solutions_raw,
                  rep.solutions_nonisomorphic, rep.engine_mismatches);
      if (rep.engine_mismatches > 0) return kExitMismatch;
    } else if (*extend_cmd) {
      std::vector<Graph> graphs = read_graph6_file(in_path);
      std::ofstream out;
      if (!extend_out.empty()) out.open(extend_out, std::ios::binary);
      long long total = 0;
      for (const Graph& g : graphs) {
        auto exts = one_point_extensions(g, s, t);
        total += static_cast<long long>(exts.size());
        if (out.is_open())
          for (const Graph& e : exts) out << g6_encode(e) << '\n';
      }
      std::printf("extensions %lld\n", total);
    } else if (*degree) {
      DegreeCheck dc = check_degree_argument(n, s, t, r_s1t, r_st1);
      std::printf("degree window [%d, %d]%s\n", dc.degree_low, dc.degree_high,
                  dc.window_empty ? " (empty)" : "");
      if (dc.applicable && !dc.window_empty) {
        std::printf("threshold %d demand %lld\n", dc.threshold, dc.demand);
        for (std::size_t w = 0; w < dc.margins.size(); ++w)
          std::printf("  |W|=%-3zu margin %lld\n", w, dc.margins[w]);
      }
      std::printf("closes: %s\n", dc.closes ? "yes" : "no");
      if (!dc.closes) return 1;
    } else if (*fixture) {
      FixtureReport rep = run_worked_example_fixture();
      auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
      std::printf("left graph (4,5)-good:      %s\n", flag(rep.left_good));
      std::printf("right graph (4,5)-good:     %s\n", flag(rep.right_good));
      std::printf("overlap (3,5)-good:         %s\n", flag(rep.overlap_good));
      std::printf("assembly (5,5)-good:        %s\n", flag(rep.assembled_good));
      std::printf("no one-point extension:     %s\n", flag(rep.not_extendable));
      std::printf("cross block found (interval): %s\n", flag(rep.matrix_found_interval));
      std::printf("cross block found (csp):      %s\n", flag(rep.matrix_found_csp));
      std::printf("assembly matches bundled:   %s\n", flag(rep.assembled_matches));
      std::printf("transposed roles agree:     %s\n", flag(rep.transpose_ok));
      std::printf("automorphism index %d, %zu solutions\n", rep.pi_index, rep.solutions);
      if (!rep.all_passed()) return kExitValidation;
    }
  } catch (const Graph6Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::runtime_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  }
  return 0;
}
