#pragma once

// Laurent polynomials in the central deformation variable q, with exact
// arbitrary-precision integer coefficients. This is the coefficient ring for
// everything else in the library.

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qq {

// Thrown when an exact division has a nonzero remainder.
struct NotDivisibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown on inputs outside a function's documented domain.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class QLaurent {
 public:
  QLaurent() = default;
  explicit QLaurent(long c) { if (c != 0) terms_[0] = c; }
  explicit QLaurent(const mpz_class& c) { if (c != 0) terms_[0] = c; }

  // c * q^e
  static QLaurent q_power(long e, mpz_class c = mpz_class(1));

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  // Term map, exponent -> coefficient. Invariant: no zero coefficients.
  const std::map<long, mpz_class>& terms() const { return terms_; }

  long min_exp() const;  // error on zero
  long max_exp() const;  // error on zero

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent operator-() const;
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { a += b; return a; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { a -= b; return a; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }

  bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const QLaurent& o) const { return !(*this == o); }

  // Multiply by q^e.
  QLaurent shifted(long e) const;
  // Fused in-place update: *this += a * b * q^e, no temporaries.
  void add_product(const QLaurent& a, const QLaurent& b, long e);
  // Substitute q -> q^k (exponent scaling); k >= 1.
  QLaurent inflated(long k) const;

  void add_term(long e, const mpz_class& c);

  std::string to_string() const;

 private:
  std::map<long, mpz_class> terms_;
};

// Specialization at q = 1 (the sum of the coefficients).
mpz_class eval_q1(const QLaurent& x);

// Exact single-variable division: returns x with x * d == n, error if the
// division is not exact or d == 0. Works over Laurent exponents.
QLaurent ql_exact_div(const QLaurent& n, const QLaurent& d);

// Gaussian multinomial [a_1 + ... + a_k; a_1, ..., a_k] in the variable
// q^var_exp (pass var_exp = r + 1 to work in p = q^{r+1}). All parts must be
// nonnegative, with one exception kept from the classical convention: the
// two-part coefficient with top -1 and bottom 0 (parts {-1, 0}) equals 1.
// Any other negative part raises DomainError.
QLaurent qmultinomial(const std::vector<long>& parts, long var_exp = 1);

}  // namespace qq
