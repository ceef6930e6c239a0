#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "ramsey/csp_engine.hpp"
#include "ramsey/graph6.hpp"
#include "ramsey/interval_engine.hpp"
#include "ramsey/pipeline.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

namespace {

struct Member {
  PointedGraph pg;
  int graph_idx = 0;
  int vertex = 0;
};

struct TypeGroup {
  std::string type_bytes;
  int d = 0;
  std::vector<Member> members;
  std::vector<Perm> automorphisms;
};

struct ProblemResult {
  std::string id;
  int d = 0, dprime = 0;
  std::vector<CrossMatrix> solutions;
  std::vector<std::string> canonical_bytes;  // of the assembled graphs
  bool mismatch = false;
  std::size_t interval_count = 0, csp_count = 0;
  std::string lhs_g6, rhs_g6;
  std::vector<int> pi;
};

std::string block_file_name(const std::string& prefix, long long seq) {
  char buf[32];
  std::snprintf(buf, sizeof buf, ".blk%06lld.jsonl", seq);
  return prefix + buf;
}

std::string block_stats_name(const std::string& prefix, long long seq) {
  char buf[48];
  std::snprintf(buf, sizeof buf, ".blk%06lld.stats.json", seq);
  return prefix + buf;
}

std::vector<std::string> read_manifest(const std::string& path) {
  std::vector<std::string> lines;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void solve_problem(const GluingProblem& problem, EngineChoice engine, bool enhancements,
                   ProblemResult& out) {
  ClauseSystem cs = enumerate_clauses(problem);
  std::vector<VarSet> from_interval, from_csp;
  if (engine == EngineChoice::Interval || engine == EngineChoice::Both) {
    IntervalOptions opt;
    opt.enhancements = enhancements;
    from_interval = interval_search(cs, opt);
  }
  if (engine == EngineChoice::Csp || engine == EngineChoice::Both) {
    CspOptions opt;
    opt.heuristic_branching = enhancements;
    from_csp = csp_solve(cs, opt);
  }
  if (engine == EngineChoice::Both && from_interval != from_csp) {
    out.mismatch = true;
    out.interval_count = from_interval.size();
    out.csp_count = from_csp.size();
    out.lhs_g6 = g6_encode(problem.lhs.g);
    out.rhs_g6 = g6_encode(problem.rhs.g);
    out.pi.assign(problem.pi.begin(), problem.pi.end());
    return;
  }
  const std::vector<VarSet>& sols =
      engine == EngineChoice::Csp ? from_csp : from_interval;
  out.solutions = matrices_from_assignments(problem.dprime, sols);
  out.canonical_bytes.reserve(out.solutions.size());
  for (const CrossMatrix& m : out.solutions)
    out.canonical_bytes.push_back(canonical_form(assemble(problem, m)).bytes);
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec) {
  auto wall_start = std::chrono::steady_clock::now();
  std::clock_t cpu_start = std::clock();
  CampaignReport report;

  if (spec.shard_total < 1 || spec.shard_index < 0 || spec.shard_index >= spec.shard_total)
    throw ValidationError("campaign: invalid shard");

  std::vector<Graph> graphs = read_graph6_file(spec.catalogue_path);
  if (graphs.empty()) throw ValidationError("campaign: empty catalogue");
  for (const Graph& g : graphs) {
    if (g.n != graphs[0].n) throw ValidationError("campaign: mixed orders in catalogue");
    if (!is_good(g, spec.s - 1, spec.t))
      throw ValidationError("campaign: catalogue graph is not (s-1,t)-good");
  }

  // pointed extraction, parallel over graphs, deterministic order
  std::vector<std::vector<PointedGraph>> extracted(graphs.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(spec.jobs > 0 ? spec.jobs : 1) \
    if (spec.jobs > 1)
#endif
  for (long long i = 0; i < static_cast<long long>(graphs.size()); ++i)
    extracted[static_cast<std::size_t>(i)] = extract_pointed(graphs[static_cast<std::size_t>(i)]);

  std::map<std::string, TypeGroup> groups;
  std::map<int, std::set<std::string>> type_sets_per_d;
  for (std::size_t gi = 0; gi < extracted.size(); ++gi)
    for (std::size_t v = 0; v < extracted[gi].size(); ++v) {
      PointedGraph& pg = extracted[gi][v];
      report.pointed_total++;
      report.pointed_per_d[pg.d]++;
      type_sets_per_d[pg.d].insert(pg.type_bytes);
      TypeGroup& tg = groups[pg.type_bytes];
      tg.type_bytes = pg.type_bytes;
      tg.d = pg.d;
      tg.members.push_back({std::move(pg), static_cast<int>(gi), static_cast<int>(v)});
    }
  for (auto& [d, s] : type_sets_per_d) report.types_per_d[d] = static_cast<long long>(s.size());
  for (auto& [bytes, tg] : groups)
    if (static_cast<long long>(tg.members.size()) > report.largest_type_pointed) {
      report.largest_type_pointed = static_cast<long long>(tg.members.size());
      report.largest_type_hex = bytes_to_hex(bytes);
    }

  // retained groups, in canonical byte order
  std::vector<TypeGroup*> active;
  for (auto& [bytes, tg] : groups) {
    if (tg.d < spec.d_min || tg.d > spec.d_max) continue;
    if (!spec.type_filter_hex.empty() &&
        bytes_to_hex(bytes).rfind(spec.type_filter_hex, 0) != 0)
      continue;
    std::uint64_t kmask = tg.d == 0 ? 0 : (std::uint64_t{1} << tg.d) - 1;
    tg.automorphisms = canonicalize(induced(tg.members[0].pg.g, kmask)).automorphisms;
    active.push_back(&tg);
  }

  // global problem enumeration: blocks are (type, automorphism), problems are
  // ordered member pairs
  struct Block {
    TypeGroup* tg;
    std::size_t pi_idx;
    std::string id;
    long long first_problem;
  };
  std::vector<Block> blocks;
  long long total_problems = 0;
  for (TypeGroup* tg : active)
    for (std::size_t pi = 0; pi < tg->automorphisms.size(); ++pi) {
      blocks.push_back(
          {tg, pi, bytes_to_hex(tg->type_bytes) + ".p" + std::to_string(pi), total_problems});
      total_problems +=
          static_cast<long long>(tg->members.size()) * static_cast<long long>(tg->members.size());
    }
  report.blocks_total = static_cast<long long>(blocks.size());

  // seeded sampling over global problem indices (Floyd's algorithm)
  std::unordered_set<long long> sampled;
  bool use_sample = spec.sample_count.has_value() &&
                    static_cast<long long>(*spec.sample_count) < total_problems;
  if (use_sample) {
    std::mt19937_64 rng(spec.seed);
    long long k = static_cast<long long>(*spec.sample_count);
    for (long long i = total_problems - k; i < total_problems; ++i) {
      long long j = static_cast<long long>(rng() % static_cast<std::uint64_t>(i + 1));
      if (!sampled.insert(j).second) sampled.insert(i);
    }
  }
  auto selected = [&](long long global_idx) {
    if (global_idx % spec.shard_total != spec.shard_index) return false;
    if (use_sample && !sampled.count(global_idx)) return false;
    return true;
  };

  bool checkpointing = !spec.out_prefix.empty() && !spec.dry_run;
  std::string manifest_path = spec.out_prefix + ".manifest";
  std::set<std::string> done_blocks;
  if (checkpointing && spec.resume)
    for (const std::string& line : read_manifest(manifest_path)) done_blocks.insert(line);

  std::set<std::string> canon_set;
  bool aborted = false;
  long long blocks_run = 0;

  for (std::size_t bi = 0; bi < blocks.size() && !aborted; ++bi) {
    Block& blk = blocks[bi];
    std::string blk_key = std::to_string(bi) + " " + blk.id;
    std::string blk_path = block_file_name(spec.out_prefix, static_cast<long long>(bi));
    std::string stats_path = block_stats_name(spec.out_prefix, static_cast<long long>(bi));
    if (checkpointing && done_blocks.count(blk_key) && std::filesystem::exists(blk_path) &&
        std::filesystem::exists(stats_path)) {
      // recover this block's counts; its stream is picked up at merge time
      std::ifstream in(stats_path);
      nlohmann::json st = nlohmann::json::parse(in);
      report.problems_attempted += st["attempted"].get<long long>();
      report.problems_failed += st["failed"].get<long long>();
      report.solutions_raw += st["solutions"].get<long long>();
      report.problems_per_d[blk.tg->d] += st["attempted"].get<long long>();
      report.solutions_per_d[blk.tg->d] += st["solutions"].get<long long>();
      for (const auto& hex : st["canonical"]) {
        std::string h = hex.get<std::string>();
        std::string bytes;
        for (std::size_t i = 0; i + 1 < h.size(); i += 2)
          bytes.push_back(static_cast<char>(std::stoi(h.substr(i, 2), nullptr, 16)));
        canon_set.insert(bytes);
      }
      report.blocks_completed++;
      continue;
    }
    if (spec.stop_after_blocks >= 0 && blocks_run >= spec.stop_after_blocks) {
      report.finished = false;
      report.wall_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
      report.cpu_seconds = double(std::clock() - cpu_start) / CLOCKS_PER_SEC;
      return report;
    }

    const auto& members = blk.tg->members;
    long long side = static_cast<long long>(members.size());
    std::vector<long long> todo;
    for (long long pair = 0; pair < side * side; ++pair)
      if (selected(blk.first_problem + pair)) todo.push_back(pair);

    std::vector<ProblemResult> results(todo.size());
    if (!spec.dry_run) {
      bool enhancements = spec.force_enhancements.value_or(blk.tg->d <= 7);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(spec.jobs > 0 ? spec.jobs : 1) \
    if (spec.jobs > 1)
#endif
      for (long long k = 0; k < static_cast<long long>(todo.size()); ++k) {
        long long pair = todo[static_cast<std::size_t>(k)];
        const Member& ml = members[static_cast<std::size_t>(pair / side)];
        const Member& mr = members[static_cast<std::size_t>(pair % side)];
        ProblemResult& res = results[static_cast<std::size_t>(k)];
        res.id = blk.id + ":g" + std::to_string(ml.graph_idx) + "." + std::to_string(ml.vertex) +
                 "xh" + std::to_string(mr.graph_idx) + "." + std::to_string(mr.vertex);
        res.d = blk.tg->d;
        GluingProblem problem = build_problem(ml.pg, mr.pg, blk.tg->automorphisms[blk.pi_idx],
                                              spec.s, spec.t, res.id);
        res.dprime = problem.dprime;
        solve_problem(problem, spec.engine, enhancements, res);
      }
    } else {
      for (std::size_t k = 0; k < todo.size(); ++k) {
        long long pair = todo[k];
        const Member& ml = members[static_cast<std::size_t>(pair / side)];
        const Member& mr = members[static_cast<std::size_t>(pair % side)];
        results[k].id = blk.id + ":g" + std::to_string(ml.graph_idx) + "." +
                        std::to_string(ml.vertex) + "xh" + std::to_string(mr.graph_idx) + "." +
                        std::to_string(mr.vertex);
      }
    }

    std::ostringstream block_stream;
    long long blk_attempted = 0, blk_failed = 0, blk_solutions = 0;
    std::set<std::string> blk_canon;
    for (ProblemResult& res : results) {
      if (spec.dry_run) {
        report.problem_ids.push_back(res.id);
        continue;
      }
      if (res.mismatch) {
        report.engine_mismatches++;
        report.mismatches.push_back(
            {res.id, res.lhs_g6, res.rhs_g6, res.pi, res.interval_count, res.csp_count});
        aborted = true;
        break;
      }
      ++blk_attempted;
      report.problems_attempted++;
      report.problems_per_d[res.d]++;
      if (res.solutions.empty()) {
        ++blk_failed;
        report.problems_failed++;
      }
      blk_solutions += static_cast<long long>(res.solutions.size());
      report.solutions_raw += static_cast<long long>(res.solutions.size());
      report.solutions_per_d[res.d] += static_cast<long long>(res.solutions.size());
      for (const std::string& cb : res.canonical_bytes) {
        canon_set.insert(cb);
        blk_canon.insert(cb);
      }
      for (const CrossMatrix& m : res.solutions)
        block_stream << "{\"problem\":\"" << res.id << "\",\"dprime\":" << m.dprime
                     << ",\"m\":\"" << m.bit_string() << "\"}\n";
    }
    if (aborted) break;
    ++blocks_run;
    report.blocks_completed++;

    if (checkpointing) {
      std::string tmp = blk_path + ".tmp";
      {
        std::ofstream out(tmp, std::ios::binary);
        out << block_stream.str();
      }
      std::filesystem::rename(tmp, blk_path);
      nlohmann::json st;
      st["attempted"] = blk_attempted;
      st["failed"] = blk_failed;
      st["solutions"] = blk_solutions;
      st["canonical"] = nlohmann::json::array();
      for (const std::string& cb : blk_canon) st["canonical"].push_back(bytes_to_hex(cb));
      {
        std::ofstream out(stats_path + ".tmp", std::ios::binary);
        out << st.dump() << '\n';
      }
      std::filesystem::rename(stats_path + ".tmp", stats_path);
      std::ofstream manifest(manifest_path, std::ios::app);
      manifest << blk_key << '\n';
    }
  }

  report.solutions_nonisomorphic = static_cast<long long>(canon_set.size());

  if (checkpointing && !aborted) {
    // deterministic merge in block order; resumed blocks come from their files
    std::ofstream out(spec.out_prefix + ".solutions.jsonl", std::ios::binary);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      std::string path = block_file_name(spec.out_prefix, static_cast<long long>(bi));
      std::ifstream in(path, std::ios::binary);
      if (!in) throw std::runtime_error("campaign: missing block file " + path);
      std::ostringstream chunk;
      chunk << in.rdbuf();
      out << chunk.str();
    }
    out.close();
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      std::filesystem::remove(block_file_name(spec.out_prefix, static_cast<long long>(bi)));
      std::filesystem::remove(block_stats_name(spec.out_prefix, static_cast<long long>(bi)));
    }
    std::filesystem::remove(manifest_path);
  }

  report.finished = !aborted;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  report.cpu_seconds = double(std::clock() - cpu_start) / CLOCKS_PER_SEC;
  return report;
}

void write_campaign_report(const CampaignReport& report, const CampaignSpec& spec,
                           const std::string& path) {
  nlohmann::json j;
  j["spec"] = {{"s", spec.s},
               {"t", spec.t},
               {"input", spec.catalogue_path},
               {"d_min", spec.d_min},
               {"d_max", spec.d_max},
               {"engine", spec.engine == EngineChoice::Both
                              ? "both"
                              : (spec.engine == EngineChoice::Csp ? "csp" : "interval")},
               {"seed", spec.seed},
               {"shard_index", spec.shard_index},
               {"shard_total", spec.shard_total},
               {"jobs", spec.jobs}};
  if (spec.sample_count) j["spec"]["sample"] = *spec.sample_count;
  j["problems_attempted"] = report.problems_attempted;
  j["problems_failed"] = report.problems_failed;
  j["solutions_raw"] = report.solutions_raw;
  j["solutions_nonisomorphic"] = report.solutions_nonisomorphic;
  j["engine_mismatches"] = report.engine_mismatches;
  j["blocks_total"] = report.blocks_total;
  j["blocks_completed"] = report.blocks_completed;
  j["pointed_total"] = report.pointed_total;
  j["largest_type"] = {{"type", report.largest_type_hex},
                       {"pointed", report.largest_type_pointed}};
  for (auto& [d, c] : report.problems_per_d) j["problems_per_d"][std::to_string(d)] = c;
  for (auto& [d, c] : report.solutions_per_d) j["solutions_per_d"][std::to_string(d)] = c;
  for (auto& [d, c] : report.pointed_per_d) j["pointed_per_d"][std::to_string(d)] = c;
  for (auto& [d, c] : report.types_per_d) j["types_per_d"][std::to_string(d)] = c;
  for (const EngineMismatch& m : report.mismatches)
    j["mismatch_dump"].push_back({{"problem", m.problem_id},
                                  {"lhs", m.lhs_g6},
                                  {"rhs", m.rhs_g6},
                                  {"pi", m.pi},
                                  {"interval_solutions", m.interval_solutions},
                                  {"csp_solutions", m.csp_solutions}});
  j["finished"] = report.finished;
  j["wall_seconds"] = report.wall_seconds;
  j["cpu_seconds"] = report.cpu_seconds;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << j.dump(2) << '\n';
}

}  // namespace ramsey
