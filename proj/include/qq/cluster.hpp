#pragma once

// Motzkin paths, their mutations and mutation planner, and the per-path
// cluster data: exchange matrix (from the local quiver rules), compatible
// skew form, and generator labels in normal order.

#include "qq/qtorus.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qq {

struct MotzkinPath {
  // m[0..r-1] holds (m_1, ..., m_r).
  std::vector<long> m;

  MotzkinPath() = default;
  explicit MotzkinPath(std::vector<long> v) : m(std::move(v)) {}

  int rank() const { return static_cast<int>(m.size()); }
  bool is_valid() const;
  long min_entry() const;

  // Virtual flat extension: entry(0) = m_1 and entry(r+1) = m_r.
  long entry_ext(int i) const;

  bool operator==(const MotzkinPath& o) const { return m == o.m; }
  bool operator<(const MotzkinPath& o) const { return m < o.m; }
  std::string to_string() const;
};

// Generator label (i, n) for the cluster variable in column i at height n.
using GenLabel = std::pair<int, long>;

// Seed generators in normal order: (1,m_1),...,(r,m_r),(1,m_1+1),...,(r,m_r+1).
std::vector<GenLabel> seed_labels(const MotzkinPath& m);

// Cartan-derived pairing Min(i,k)(r+1-Max(i,k)).
long lambda_pairing(int i, int k, int r);

struct ExchangeMatrix {
  std::vector<std::vector<long>> B;
  bool operator==(const ExchangeMatrix& o) const { return B == o.B; }
};

MotzkinPath mutate_path(const MotzkinPath& m, int i, int direction);

ExchangeMatrix build_exchange_matrix(const MotzkinPath& m);
ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& B, int k);

// Skew form of the seed in normal order: entry between generators (i,n) and
// (j,p) is (p-n) * lambda_pairing(i,j).
SkewForm build_lambda(const MotzkinPath& m);

struct ClusterSeed {
  MotzkinPath path;
  int rank = 0;
  std::vector<GenLabel> generators;
  SkewForm form;
};

ClusterSeed build_seed(const MotzkinPath& m);

enum class MutationCase { case_i, case_ii };

struct MutationStep {
  int index = 0;  // 1-based column
  MutationCase tag = MutationCase::case_i;
  MotzkinPath result;  // path after this step
};

// Case tag for a forward mutation at i: case (i) needs m_{i-1} = m_i =
// m_{i+1} - 1, case (ii) needs m_{i-1} = m_i = m_{i+1}, both under the flat
// boundary extension. Returns false if neither applies.
bool mutation_case(const MotzkinPath& m, int i, MutationCase* tag);

// Forward-mutation plan from m_0 to target, each step matching case (i)
// or case (ii). BFS, deterministic.
std::vector<MutationStep> plan_mutations(const MotzkinPath& target);

// All Motzkin paths of rank r with minimum entry 0, sorted.
std::vector<MotzkinPath> enumerate_fundamental(int r);

struct QuiverArrow {
  GenLabel from, to;
  long mult = 0;
};

// Arrow list of the exchange quiver (positive entries of B).
std::vector<QuiverArrow> quiver_arrows(const ExchangeMatrix& B,
                                       const std::vector<GenLabel>& labels);

}  // namespace qq
