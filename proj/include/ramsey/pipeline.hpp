#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/gluing.hpp"

namespace ramsey {

enum class EngineChoice { Interval, Csp, Both };

struct CampaignSpec {
  int s = 5, t = 5;                 // gluing targets; inputs must be (s-1,t)-good
  std::string catalogue_path;       // one graph6 file, all graphs of one order
  int d_min = 0, d_max = kMaxOrder; // filter on the point degree
  std::string type_filter_hex;      // hex prefix filter on the overlap type
  EngineChoice engine = EngineChoice::Both;
  std::optional<std::uint64_t> sample_count;  // random subset of the problems
  std::uint64_t seed = 0;
  int shard_index = 0, shard_total = 1;
  std::string out_prefix;           // solutions/report/checkpoint path stem
  int jobs = 1;
  bool resume = false;
  int stop_after_blocks = -1;       // test hook simulating a killed run
  bool dry_run = false;             // enumerate problem ids only
  std::optional<bool> force_enhancements;  // default: enabled when d <= 7
};

struct EngineMismatch {
  std::string problem_id;
  std::string lhs_g6, rhs_g6;
  std::vector<int> pi;
  std::size_t interval_solutions = 0, csp_solutions = 0;
};

struct CampaignReport {
  long long problems_attempted = 0;
  long long problems_failed = 0;  // no gluing exists
  long long solutions_raw = 0;
  long long solutions_nonisomorphic = 0;
  std::map<int, long long> problems_per_d;
  std::map<int, long long> solutions_per_d;
  long long blocks_total = 0;
  long long blocks_completed = 0;
  long long pointed_total = 0;
  std::map<int, long long> pointed_per_d;
  std::map<int, long long> types_per_d;
  std::string largest_type_hex;  // overlap type with the most pointed graphs
  long long largest_type_pointed = 0;
  int engine_mismatches = 0;
  std::vector<EngineMismatch> mismatches;
  std::vector<std::string> problem_ids;  // dry runs only
  double wall_seconds = 0, cpu_seconds = 0;
  bool finished = false;  // false when stopped by the test hook
};

// Enumerates (type, automorphism, ordered pointed pair) work units over the
// catalogue, runs the selected engine(s), streams solutions sorted by problem
// identity, and cross-checks the engines in Both mode.  Work is checkpointed
// per (type, automorphism) block; a resumed run reproduces the uninterrupted
// output byte for byte.
CampaignReport run_campaign(const CampaignSpec& spec);

void write_campaign_report(const CampaignReport& report, const CampaignSpec& spec,
                           const std::string& path);

struct DegreeCheck {
  int n = 0;
  int degree_low = 0, degree_high = 0;  // forced degree window
  bool window_empty = false;            // no graph can exist at all
  bool applicable = false;              // window width <= 1 so the count applies
  int threshold = 0;                    // required same-degree neighbour count
  long long demand = 0;                 // lower bound on cross edges, both sides
  std::vector<long long> margins;       // demand - w*(n-w) for every split size
  bool closes = false;
};

// Counting argument that a good graph on n vertices must contain a
// high-degree vertex with many high-degree neighbours: cross-edge demand
// exceeds the bipartite capacity for every split.  r_s1_t = R(s-1,t),
// r_s_t1 = R(s,t-1).
DegreeCheck check_degree_argument(int n, int s, int t, int r_s1_t, int r_s_t1);

// Bundled 37-vertex worked example: two order-24 graphs overlapped on an
// 11-vertex graph with a 12x12 cross block.
struct WorkedExample {
  Graph f;            // full 37-vertex assembly
  Graph left, right;  // the two 24-vertex graphs
  Graph overlap;      // the 11-vertex common part
  CrossMatrix cross;  // the 12x12 block, rows = left private side
  int a = 0, b = 36;  // marked vertices in f
};

WorkedExample worked_example();

struct FixtureReport {
  bool left_good = false, right_good = false;
  bool overlap_good = false;
  bool assembled_good = false;
  bool not_extendable = false;
  bool matrix_found_interval = false, matrix_found_csp = false;
  bool assembled_matches = false;  // engine solution reassembles to the bundled graph
  bool transpose_ok = false;       // swapped roles produce the transposed matrix
  int pi_index = -1;
  std::size_t solutions = 0;

  bool all_passed() const {
    return left_good && right_good && overlap_good && assembled_good && not_extendable &&
           matrix_found_interval && matrix_found_csp && assembled_matches && transpose_ok;
  }
};

FixtureReport run_worked_example_fixture();

}  // namespace ramsey
