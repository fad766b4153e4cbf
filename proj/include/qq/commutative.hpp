#pragma once

// Independent commutative model of the recursion at q = 1. Deliberately
// shares no code with the torus evolution beyond the exponent-vector type,
// so agreement between the two is a meaningful check.

#include <gmpxx.h>

#include <map>

#include "qq/cluster.hpp"
#include "qq/qtorus.hpp"

namespace qq {

// Laurent polynomial with integer coefficients in a fixed number of
// commuting variables.
class CommPoly {
 public:
  CommPoly() = default;
  explicit CommPoly(int nvars) : nvars_(nvars) {}

  static CommPoly constant(int nvars, const mpz_class& c);
  static CommPoly unit_var(int nvars, int u);

  int nvars() const { return nvars_; }
  const std::map<ExpVec, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const ExpVec& e, const mpz_class& c);

  CommPoly& operator+=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { a += b; return a; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);

  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  // Sum of coefficients, i.e. the value at all variables = 1.
  mpz_class eval_ones() const;

 private:
  int nvars_ = 0;
  std::map<ExpVec, mpz_class> terms_;
};

// Exact division; throws NotDivisibleError when the quotient is not a
// Laurent polynomial.
CommPoly comm_exact_div(const CommPoly& num, const CommPoly& den);

// Specialization q = 1 of a torus element, over the same variable indexing.
CommPoly to_commutative(const TorusElem& x);

// Commutative counterpart of evolve: R_{i,n+1} R_{i,n-1} = R_{i,n}^2 +
// R_{i+1,n} R_{i-1,n} with unit boundary rows and unit-variable seeds.
std::map<std::pair<int, long>, CommPoly> evolve_commutative(
    const ClusterSeed& seed, long n_min, long n_max);

}  // namespace qq
