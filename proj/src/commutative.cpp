#include "qq/commutative.hpp"

#include <algorithm>

namespace qq {

CommPoly CommPoly::constant(int nvars, const mpz_class& c) {
  CommPoly p(nvars);
  p.add_term(ExpVec(nvars, 0), c);
  return p;
}

CommPoly CommPoly::unit_var(int nvars, int u) {
  CommPoly p(nvars);
  ExpVec e(nvars, 0);
  e[u] = 1;
  p.add_term(e, 1);
  return p;
}

void CommPoly::add_term(const ExpVec& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw DomainError("add_term: bad exponent size");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  if (nvars_ != o.nvars_) throw DomainError("mismatched variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  if (a.nvars_ != b.nvars_) throw DomainError("mismatched variable counts");
  CommPoly r(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e(ea);
      for (std::size_t u = 0; u < e.size(); ++u) e[u] += eb[u];
      r.add_term(e, ca * cb);
    }
  return r;
}

mpz_class CommPoly::eval_ones() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) {
    (void)e;
    s += c;
  }
  return s;
}

CommPoly comm_exact_div(const CommPoly& num, const CommPoly& den) {
  if (den.is_zero()) throw DomainError("comm_exact_div: division by zero");
  const int k = num.nvars();
  // Componentwise support bounds of any Laurent quotient.
  ExpVec lo(k, 0), hi(k, 0);
  if (!num.is_zero()) {
    for (int u = 0; u < k; ++u) {
      long nmin = 0, nmax = 0, dmin = 0, dmax = 0;
      bool first = true;
      for (const auto& [e, c] : num.terms()) {
        (void)c;
        nmin = first ? e[u] : std::min(nmin, e[u]);
        nmax = first ? e[u] : std::max(nmax, e[u]);
        first = false;
      }
      first = true;
      for (const auto& [e, c] : den.terms()) {
        (void)c;
        dmin = first ? e[u] : std::min(dmin, e[u]);
        dmax = first ? e[u] : std::max(dmax, e[u]);
        first = false;
      }
      lo[u] = nmin - dmax;
      hi[u] = nmax - dmin;
    }
  }

  CommPoly rem = num;
  CommPoly quot(k);
  const auto& dlt = *den.terms().rbegin();  // lex-leading term of the divisor
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms().rbegin();
    ExpVec xe(rlt.first);
    for (int u = 0; u < k; ++u) {
      xe[u] -= dlt.first[u];
      if (xe[u] < lo[u] || xe[u] > hi[u])
        throw NotDivisibleError("comm_exact_div: quotient support escapes bounding box");
    }
    if (!mpz_divisible_p(rlt.second.get_mpz_t(), dlt.second.get_mpz_t()))
      throw NotDivisibleError("comm_exact_div: coefficient not divisible");
    mpz_class xc = rlt.second / dlt.second;
    CommPoly piece(k);
    piece.add_term(xe, xc);
    quot += piece;
    CommPoly prod = piece * den;
    for (const auto& [e, c] : prod.terms()) rem.add_term(e, -c);
  }
  return quot;
}

CommPoly to_commutative(const TorusElem& x) {
  CommPoly p(static_cast<int>(x.form().size()));
  for (const auto& [e, c] : x.terms()) p.add_term(e, eval_q1(c));
  return p;
}

std::map<std::pair<int, long>, CommPoly> evolve_commutative(
    const ClusterSeed& seed, long n_min, long n_max) {
  const int r = seed.rank;
  const int k = 2 * r;
  std::map<std::pair<int, long>, CommPoly> w;
  auto get = [&](int i, long n) -> CommPoly {
    if (i == 0 || i == r + 1) return CommPoly::constant(k, 1);
    return w.at({i, n});
  };
  auto known = [&](int i, long n) {
    return i == 0 || i == r + 1 || w.count({i, n}) != 0;
  };

  for (std::size_t u = 0; u < seed.generators.size(); ++u)
    w.emplace(std::make_pair(seed.generators[u].first, seed.generators[u].second),
              CommPoly::unit_var(k, static_cast<int>(u)));

  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 1; i <= r; ++i) {
      for (long n = n_min; n <= n_max; ++n) {
        if (known(i, n)) continue;
        for (long j : {n - 1, n + 1}) {
          long other = 2 * j - n;  // the opposite neighbor column
          if (j < n_min || j > n_max || other < n_min || other > n_max) continue;
          if (!known(i, j) || !known(i, other) || !known(i + 1, j) || !known(i - 1, j))
            continue;
          CommPoly c = get(i, j);
          CommPoly num = c * c + get(i + 1, j) * get(i - 1, j);
          w.emplace(std::make_pair(i, n), comm_exact_div(num, get(i, other)));
          progress = true;
          break;
        }
      }
    }
  }
  for (int i = 1; i <= r; ++i)
    for (long n = n_min; n <= n_max; ++n)
      if (!known(i, n)) throw DomainError("evolve_commutative: window could not be filled");
  return w;
}

}  // namespace qq
