#include "qq/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace qq {

bool MotzkinPath::is_valid() const {
  if (m.empty()) return false;
  for (std::size_t i = 0; i + 1 < m.size(); ++i)
    if (std::labs(m[i + 1] - m[i]) > 1) return false;
  return true;
}

long MotzkinPath::min_entry() const {
  long lo = m[0];
  for (long v : m) lo = std::min(lo, v);
  return lo;
}

long MotzkinPath::entry_ext(int i) const {
  if (i <= 0) return m.front();
  if (i > rank()) return m.back();
  return m[i - 1];
}

std::string MotzkinPath::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < m.size(); ++i) out << (i ? "," : "") << m[i];
  out << ")";
  return out.str();
}

std::vector<GenLabel> seed_labels(const MotzkinPath& m) {
  std::vector<GenLabel> g;
  const int r = m.rank();
  for (int i = 1; i <= r; ++i) g.emplace_back(i, m.m[i - 1]);
  for (int i = 1; i <= r; ++i) g.emplace_back(i, m.m[i - 1] + 1);
  return g;
}

long lambda_pairing(int i, int k, int r) {
  return static_cast<long>(std::min(i, k)) * (r + 1 - std::max(i, k));
}

MotzkinPath mutate_path(const MotzkinPath& m, int i, int direction) {
  if (i < 1 || i > m.rank() || (direction != 1 && direction != -1))
    throw DomainError("mutate_path: bad index or direction");
  MotzkinPath out = m;
  out.m[i - 1] += direction;
  if (!out.is_valid())
    throw DomainError("mutate_path: result is not a Motzkin path");
  return out;
}

ExchangeMatrix build_exchange_matrix(const MotzkinPath& m) {
  if (!m.is_valid()) throw DomainError("build_exchange_matrix: invalid path");
  const int r = m.rank();
  ExchangeMatrix em;
  em.B.assign(2 * r, std::vector<long>(2 * r, 0));
  auto arrow = [&](int u, int v, long mult) {
    em.B[u][v] += mult;
    em.B[v][u] -= mult;
  };
  auto bot = [&](int i) { return i - 1; };
  auto top = [&](int i) { return r + i - 1; };
  for (int i = 1; i <= r; ++i) arrow(top(i), bot(i), 2);
  for (int i = 1; i < r; ++i) {
    const long d = m.m[i] - m.m[i - 1];  // step (i, i+1)
    if (d == 0) {
      arrow(bot(i), top(i + 1), 1);
      arrow(bot(i + 1), top(i), 1);
    } else if (d == 1) {
      arrow(bot(i), bot(i + 1), 1);
      arrow(top(i), top(i + 1), 1);
      arrow(bot(i + 1), top(i), 2);
    } else {
      arrow(bot(i + 1), bot(i), 1);
      arrow(top(i + 1), top(i), 1);
      arrow(bot(i), top(i + 1), 2);
    }
  }
  return em;
}

ExchangeMatrix mutate_exchange_matrix(const ExchangeMatrix& B, int k) {
  const int n = static_cast<int>(B.B.size());
  if (k < 0 || k >= n) throw DomainError("mutate_exchange_matrix: bad index");
  ExchangeMatrix out = B;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out.B[i][j] = -B.B[i][j];
      } else {
        // B'_{ij} = B_{ij} + (|B_{ik}| B_{kj} + B_{ik} |B_{kj}|) / 2
        long bik = B.B[i][k], bkj = B.B[k][j];
        out.B[i][j] =
            B.B[i][j] + (std::labs(bik) * bkj + bik * std::labs(bkj)) / 2;
      }
    }
  return out;
}

SkewForm build_lambda(const MotzkinPath& m) {
  if (!m.is_valid()) throw DomainError("build_lambda: invalid path");
  const int r = m.rank();
  auto gens = seed_labels(m);
  std::vector<std::vector<long>> lam(2 * r, std::vector<long>(2 * r, 0));
  for (int u = 0; u < 2 * r; ++u)
    for (int v = 0; v < 2 * r; ++v) {
      auto [iu, nu] = gens[u];
      auto [iv, nv] = gens[v];
      lam[u][v] = (nv - nu) * lambda_pairing(iu, iv, r);
    }
  return SkewForm(std::move(lam));
}

ClusterSeed build_seed(const MotzkinPath& m) {
  ClusterSeed s;
  s.path = m;
  s.rank = m.rank();
  s.generators = seed_labels(m);
  s.form = build_lambda(m);
  return s;
}

bool mutation_case(const MotzkinPath& m, int i, MutationCase* tag) {
  const long left = m.entry_ext(i - 1);
  const long mid = m.entry_ext(i);
  const long right = m.entry_ext(i + 1);
  if (left != mid) return false;
  if (mid == right - 1) {
    *tag = MutationCase::case_i;
    return true;
  }
  if (mid == right) {
    *tag = MutationCase::case_ii;
    return true;
  }
  return false;
}

std::vector<MutationStep> plan_mutations(const MotzkinPath& target) {
  if (!target.is_valid() || target.min_entry() < 0)
    throw DomainError("plan_mutations: unreachable target");
  const int r = target.rank();
  MotzkinPath start(std::vector<long>(r, 0));
  std::map<MotzkinPath, std::pair<MotzkinPath, MutationStep>> parent;
  std::deque<MotzkinPath> queue{start};
  parent.emplace(start, std::make_pair(start, MutationStep{}));
  while (!queue.empty()) {
    MotzkinPath cur = queue.front();
    queue.pop_front();
    if (cur == target) break;
    for (int i = 1; i <= r; ++i) {
      MutationCase tag;
      if (!mutation_case(cur, i, &tag)) continue;
      MotzkinPath next = cur;
      next.m[i - 1] += 1;
      if (!next.is_valid()) continue;
      // Forward mutations only raise entries, so any useful intermediate is
      // componentwise <= target.
      if (next.m[i - 1] > target.m[i - 1]) continue;
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, MutationStep{i, tag, next}));
      queue.push_back(next);
    }
  }
  if (!parent.count(target))
    throw DomainError("plan_mutations: unreachable target");
  std::vector<MutationStep> plan;
  for (MotzkinPath at = target; !(at == start);) {
    auto& [prev, step] = parent.at(at);
    plan.push_back(step);
    at = prev;
  }
  std::reverse(plan.begin(), plan.end());
  return plan;
}

std::vector<MotzkinPath> enumerate_fundamental(int r) {
  if (r < 1) throw DomainError("enumerate_fundamental: r must be >= 1");
  std::vector<MotzkinPath> out;
  std::vector<long> cur(r, 0);
  // DFS over entries; min entry 0 forces all entries into [0, r-1].
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == r) {
      long lo = *std::min_element(cur.begin(), cur.end());
      if (lo == 0) out.emplace_back(cur);
      return;
    }
    long lo = idx == 0 ? 0 : std::max(0L, cur[idx - 1] - 1);
    long hi = idx == 0 ? r - 1 : std::min<long>(r - 1, cur[idx - 1] + 1);
    for (long v = lo; v <= hi; ++v) {
      cur[idx] = v;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuiverArrow> quiver_arrows(const ExchangeMatrix& B,
                                       const std::vector<GenLabel>& labels) {
  std::vector<QuiverArrow> out;
  const std::size_t n = B.B.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (B.B[u][v] > 0) out.push_back({labels[u], labels[v], B.B[u][v]});
  return out;
}

}  // namespace qq
