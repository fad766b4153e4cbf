#pragma once

// Ground truth for the recursion variables: evolve R_{i,n} over a window of
// columns by exact torus division, and derive the generating series from the
// top row. Everything here is slow and direct on purpose; the fast paths are
// checked against it.

#include <map>
#include <utility>
#include <vector>

#include "qq/cluster.hpp"
#include "qq/qtorus.hpp"
#include "qq/tseries.hpp"

namespace qq {

struct QSystemState {
  int rank = 0;
  ClusterSeed seed;
  // (i, n) -> R_{i,n}, normal-ordered in the seed torus. Rows 0 and rank+1
  // are identically 1 and are not stored.
  std::map<std::pair<int, long>, TorusElem> window;
  std::vector<long> lambda;  // lambda[i] = i*(rank+1-i), valid for i in [1, rank]

  bool has(int i, long n) const;
  TorusElem at(int i, long n) const;
};

// Fills R_{i,n} for all i in [1,r] and n in [n_min, n_max], seeded by the 2r
// generators at (i, m_i) and (i, m_i+1). The window must contain the seed
// columns. Division failures cannot arise from valid input; if one does, the
// error carries both operands for diagnosis.
QSystemState evolve(const ClusterSeed& seed, long n_min, long n_max);

// Re-checks every computed interior cell by multiplication only:
// q^{lambda_i} R_{i,n+1} R_{i,n-1} == R_{i,n}^2 + R_{i+1,n} R_{i-1,n}.
bool verify_recursion(const QSystemState& state);

// Coefficient of t^n is R_{1,n+m_1} * R_{1,m_1}^{-1}; the rerooted variant
// divides by the other seed generator, R_{1,m_1+1}. Both start at 1.
TSeries series_F_oracle(const QSystemState& state, int order);
TSeries series_G_oracle(const QSystemState& state, int order);

struct PositivityResult {
  bool ok = true;
  ExpVec exponent;       // offending monomial when !ok
  QLaurent coefficient;  // its coefficient
};

// True iff every coefficient polynomial of x has nonnegative coefficients.
PositivityResult positivity_check(const TorusElem& x);

}  // namespace qq
