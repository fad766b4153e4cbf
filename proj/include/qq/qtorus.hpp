#pragma once

// Quantum torus: the normal-ordered Laurent-monomial algebra on k generators
// g_1..g_k with g_u g_v = q^{lambda_uv} g_v g_u. A monomial x^a stands for the
// normal-ordered product g_1^{a_1} ... g_k^{a_k}.

#include "qq/qlaurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace qq {

using ExpVec = std::vector<long>;

struct SkewForm {
  std::vector<std::vector<long>> lambda;

  SkewForm() = default;
  explicit SkewForm(std::vector<std::vector<long>> m);

  std::size_t size() const { return lambda.size(); }
  long operator()(std::size_t u, std::size_t v) const { return lambda[u][v]; }
  bool operator==(const SkewForm& o) const { return lambda == o.lambda; }
};

// Reordering exponent: x^a * x^b = q^{sigma(a,b)} x^{a+b}.
long reorder_exponent(const ExpVec& a, const ExpVec& b, const SkewForm& form);

// The integer e with x^a x^b = q^e x^b x^a, namely a^T lambda b.
long comm_exponent(const ExpVec& a, const ExpVec& b, const SkewForm& form);

class TorusElem {
 public:
  TorusElem() = default;
  explicit TorusElem(SkewForm form) : form_(std::move(form)) {}

  static TorusElem one(const SkewForm& form);
  static TorusElem monomial(const SkewForm& form, ExpVec e,
                            QLaurent c = QLaurent(1));

  const SkewForm& form() const { return form_; }
  const std::map<ExpVec, QLaurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_monomial() const { return terms_.size() == 1; }
  const ExpVec& mono_exp() const;
  const QLaurent& mono_coeff() const;

  void add_term(const ExpVec& e, const QLaurent& c);
  // Fused update of one exponent slot: coeff(e) += a * b * q^s.
  void add_product_term(const ExpVec& e, const QLaurent& a, const QLaurent& b,
                        long s);

  TorusElem& operator+=(const TorusElem& o);
  TorusElem& operator-=(const TorusElem& o);
  friend TorusElem operator+(TorusElem a, const TorusElem& b) { a += b; return a; }
  friend TorusElem operator-(TorusElem a, const TorusElem& b) { a -= b; return a; }
  TorusElem operator-() const;

  TorusElem scaled(const QLaurent& c) const;

  bool operator==(const TorusElem& o) const {
    return form_ == o.form_ && terms_ == o.terms_;
  }
  bool operator!=(const TorusElem& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  SkewForm form_;
  std::map<ExpVec, QLaurent> terms_;
};

TorusElem normal_mul(const TorusElem& a, const TorusElem& b);

// Inverse of a single term c q^k x^a with unit c; error otherwise.
TorusElem monomial_inverse(const TorusElem& t);

// Integer power (n may be negative; then t must be an invertible monomial).
TorusElem monomial_pow(const TorusElem& t, long n);

enum class TermOrder { lex };

// Right division: returns X with normal_mul(X, d) == n. Greedy leading-term
// peeling under the term order, with a bounding-box guard on recovered
// exponents so a non-divisible input fails cleanly instead of diverging.
TorusElem exact_div_right(const TorusElem& n, const TorusElem& d,
                          TermOrder order = TermOrder::lex);

// Left division: returns X with normal_mul(d, X) == n.
TorusElem exact_div_left(const TorusElem& n, const TorusElem& d,
                         TermOrder order = TermOrder::lex);

}  // namespace qq
