#pragma once

// Verification engine shared by the acceptance binary and the command-line
// verify mode: every structural identity the library claims, run over a
// selection of paths with a deterministic report.

#include <functional>
#include <string>
#include <vector>

#include "qq/cluster.hpp"

namespace qq {

struct CheckResult {
  std::string path;    // "(0,1)" for per-path checks, empty for rank-wide
  std::string name;
  bool pass = true;
  std::string detail;  // counts on success, first counterexample on failure
};

struct VerifyConfig {
  int rank = 1;
  std::vector<MotzkinPath> paths;  // empty: all fundamental paths of the rank
  int order = -1;                  // negative: default_order(rank)
  bool q1 = false;                 // commutative specialization checks only
  int threads = 0;                 // <= 0: QQ_SEED_THREADS, then hardware
};

// 8 / 7 / 6 for ranks 1 / 2 / 3, otherwise 5.
int default_order(int rank);

int resolve_threads(int requested);

// Runs f(0..n-1) on a small worker pool; f must be thread-safe.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& f);

// All checks for one rank. Report order is deterministic: rank-wide checks
// first, then per-path blocks sorted by path, each sorted by check name.
std::vector<CheckResult> run_checks(const VerifyConfig& cfg);

// The full gate: ranks 1..3 at default orders, one aggregated line per
// criterion.
std::vector<CheckResult> acceptance_table(int threads);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace qq
