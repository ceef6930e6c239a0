// Throughput benchmark: the OpenMP-parallel campaign loop against the serial
// reference path, and the two gluing engines against each other, on a
// generated workload.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ramsey/catalogue.hpp"
#include "ramsey/csp_engine.hpp"
#include "ramsey/gluing.hpp"
#include "ramsey/interval_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ramsey;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<GluingProblem> build_workload(int s, int t, int nmax, std::size_t cap) {
  Catalogue cat = generate_catalogue(s - 1, t, nmax);
  std::vector<GluingProblem> problems;
  for (auto& [order, graphs] : cat.by_order) {
    if (order < 4) continue;
    std::vector<PointedGraph> pointed;
    for (const Graph& g : graphs)
      for (PointedGraph& pg : extract_pointed(g)) pointed.push_back(std::move(pg));
    for (auto& [bytes, members] : group_by_type(pointed)) {
      std::uint64_t kmask =
          members[0].d == 0 ? 0 : (std::uint64_t{1} << members[0].d) - 1;
      auto auts = canonicalize(induced(members[0].g, kmask)).automorphisms;
      for (const Perm& pi : auts)
        for (const PointedGraph& lhs : members)
          for (const PointedGraph& rhs : members) {
            if (problems.size() >= cap) return problems;
            problems.push_back(build_problem(lhs, rhs, pi, s, t));
          }
    }
  }
  return problems;
}

long long run_serial(const std::vector<GluingProblem>& problems, bool use_csp) {
  long long solutions = 0;
  for (const GluingProblem& p : problems) {
    ClauseSystem cs = enumerate_clauses(p);
    solutions += static_cast<long long>(use_csp ? csp_solve(cs).size()
                                                : interval_search(cs).size());
  }
  return solutions;
}

long long run_parallel(const std::vector<GluingProblem>& problems, bool use_csp, int jobs) {
  long long solutions = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) reduction(+ : solutions)
#endif
  for (long long i = 0; i < static_cast<long long>(problems.size()); ++i) {
    const GluingProblem& p = problems[static_cast<std::size_t>(i)];
    ClauseSystem cs = enumerate_clauses(p);
    solutions += static_cast<long long>(use_csp ? csp_solve(cs).size()
                                                : interval_search(cs).size());
  }
  (void)jobs;
  return solutions;
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t cap = argc > 1 ? static_cast<std::size_t>(std::atoll(argv[1])) : 20000;
  int jobs = 4;
#ifdef _OPENMP
  jobs = omp_get_max_threads();
#endif

  std::printf("building workload (target-(4,4) gluings over generated inputs)...\n");
  auto t0 = Clock::now();
  std::vector<GluingProblem> problems = build_workload(4, 4, 8, cap);
  std::printf("  %zu problems in %.2fs\n\n", problems.size(), seconds_since(t0));

  struct Row {
    const char* name;
    bool csp;
    bool parallel;
  };
  Row rows[] = {
      {"interval serial", false, false},
      {"interval openmp", false, true},
      {"csp serial", true, false},
      {"csp openmp", true, true},
  };
  std::printf("%-18s %12s %12s %14s\n", "configuration", "solutions", "seconds",
              "problems/sec");
  long long reference = -1;
  for (const Row& row : rows) {
    t0 = Clock::now();
    long long solutions = row.parallel ? run_parallel(problems, row.csp, jobs)
                                       : run_serial(problems, row.csp);
    double dt = seconds_since(t0);
    std::printf("%-18s %12lld %12.3f %14.0f\n", row.name, solutions, dt,
                static_cast<double>(problems.size()) / dt);
    if (reference < 0) reference = solutions;
    if (solutions != reference) {
      std::printf("solution count mismatch!\n");
      return 1;
    }
  }
  std::printf("\ncatalogue generation, serial vs %d jobs:\n", jobs);
  t0 = Clock::now();
  generate_catalogue(3, 5, 11, 1);
  double serial = seconds_since(t0);
  t0 = Clock::now();
  generate_catalogue(3, 5, 11, jobs);
  double parallel = seconds_since(t0);
  std::printf("  serial %.2fs, parallel %.2fs\n", serial, parallel);
  return 0;
}
