#include "qq/oracle.hpp"

#include <sstream>

namespace qq {

bool QSystemState::has(int i, long n) const {
  if (i == 0 || i == rank + 1) return true;
  return window.count({i, n}) != 0;
}

TorusElem QSystemState::at(int i, long n) const {
  if (i == 0 || i == rank + 1) return TorusElem::one(seed.form);
  auto it = window.find({i, n});
  if (it == window.end()) {
    std::ostringstream os;
    os << "window too small: R_{" << i << "," << n << "} not computed";
    throw DomainError(os.str());
  }
  return it->second;
}

namespace {

// R_{i,n}^2 + R_{i+1,n} R_{i-1,n}
TorusElem neighbor_sum(const QSystemState& st, int i, long n) {
  const TorusElem c = st.at(i, n);
  return normal_mul(c, c) + normal_mul(st.at(i + 1, n), st.at(i - 1, n));
}

TorusElem divide_with_dump(const TorusElem& num, const TorusElem& den,
                           bool right, int i, long n) {
  try {
    return right ? exact_div_right(num, den) : exact_div_left(num, den);
  } catch (const NotDivisibleError& e) {
    std::ostringstream os;
    os << "evolve step (" << i << "," << n << ") failed: " << e.what()
       << "\n  numerator:   " << num.to_string()
       << "\n  denominator: " << den.to_string();
    throw NotDivisibleError(os.str());
  }
}

}  // namespace

QSystemState evolve(const ClusterSeed& seed, long n_min, long n_max) {
  const int r = seed.rank;
  QSystemState st;
  st.rank = r;
  st.seed = seed;
  st.lambda.assign(r + 2, 0);
  for (int i = 1; i <= r; ++i) st.lambda[i] = static_cast<long>(i) * (r + 1 - i);

  for (int i = 1; i <= r; ++i) {
    long m = seed.path.m[i - 1];
    if (n_min > m || n_max < m + 1) throw DomainError("evolve: window excludes seed columns");
  }

  // Seed generators are the unit monomials of the torus, bottoms then tops.
  for (std::size_t u = 0; u < seed.generators.size(); ++u) {
    ExpVec e(seed.generators.size(), 0);
    e[u] = 1;
    auto [i, n] = seed.generators[u];
    st.window.emplace(std::make_pair(i, n), TorusElem::monomial(seed.form, e));
  }

  // Fixpoint fill: a cell is computable once its three (or two, at the
  // boundary rows) neighbors exist. The staircase seed guarantees progress
  // until the window is full.
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= r; ++i) {
      for (long n = n_min; n <= n_max; ++n) {
        if (st.has(i, n)) continue;
        const QLaurent qinv = QLaurent::q_power(-st.lambda[i]);
        if (n - 1 >= n_min && st.has(i, n - 1) && st.has(i, n - 2) &&
            st.has(i + 1, n - 1) && st.has(i - 1, n - 1)) {
          TorusElem num = neighbor_sum(st, i, n - 1).scaled(qinv);
          st.window.emplace(std::make_pair(i, n),
                            divide_with_dump(num, st.at(i, n - 2), true, i, n));
          progress = true;
          continue;
        }
        if (n + 1 <= n_max && st.has(i, n + 1) && st.has(i, n + 2) &&
            st.has(i + 1, n + 1) && st.has(i - 1, n + 1)) {
          TorusElem num = neighbor_sum(st, i, n + 1).scaled(qinv);
          st.window.emplace(std::make_pair(i, n),
                            divide_with_dump(num, st.at(i, n + 2), false, i, n));
          progress = true;
        }
      }
    }
  }

  for (int i = 1; i <= r; ++i)
    for (long n = n_min; n <= n_max; ++n)
      if (!st.has(i, n)) throw DomainError("evolve: window could not be filled");
  return st;
}

bool verify_recursion(const QSystemState& state) {
  for (const auto& [key, val] : state.window) {
    auto [i, n] = key;
    (void)val;
    if (!state.has(i, n - 1) || !state.has(i, n + 1)) continue;
    if (!state.has(i + 1, n) || !state.has(i - 1, n)) continue;
    TorusElem lhs = normal_mul(state.at(i, n + 1), state.at(i, n - 1))
                        .scaled(QLaurent::q_power(state.lambda[i]));
    if (lhs != neighbor_sum(state, i, n)) return false;
  }
  return true;
}

namespace {

TSeries series_from_root(const QSystemState& state, int order, long root) {
  TSeries s(state.seed.form, order);
  const TorusElem inv = monomial_inverse(state.at(1, root));
  for (int n = 0; n <= order; ++n)
    s.at(n) = normal_mul(state.at(1, root + n), inv);
  return s;
}

}  // namespace

TSeries series_F_oracle(const QSystemState& state, int order) {
  return series_from_root(state, order, state.seed.path.m[0]);
}

TSeries series_G_oracle(const QSystemState& state, int order) {
  return series_from_root(state, order, state.seed.path.m[0] + 1);
}

PositivityResult positivity_check(const TorusElem& x) {
  for (const auto& [e, c] : x.terms()) {
    for (const auto& [qe, coef] : c.terms()) {
      (void)qe;
      if (coef < 0) return {false, e, c};
    }
  }
  return {};
}

}  // namespace qq
