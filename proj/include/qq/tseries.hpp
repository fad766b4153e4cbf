#pragma once

// Truncated power series in the central variable t with TorusElem
// coefficients, up to and including a fixed order.

#include "qq/qtorus.hpp"

#include <vector>

namespace qq {

class TSeries {
 public:
  TSeries() = default;
  TSeries(const SkewForm& form, int order)
      : order_(order), coeffs_(order + 1, TorusElem(form)) {}

  static TSeries one(const SkewForm& form, int order);

  int order() const { return order_; }
  const SkewForm& form() const { return coeffs_.at(0).form(); }
  const TorusElem& at(int n) const { return coeffs_.at(n); }
  TorusElem& at(int n) { return coeffs_.at(n); }

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { a += b; return a; }
  friend TSeries operator-(TSeries a, const TSeries& b) { a -= b; return a; }

  // Truncated product.
  friend TSeries operator*(const TSeries& a, const TSeries& b);

  // One-sided multiplication by a torus element (t-degree 0).
  TSeries mul_right(const TorusElem& x) const;
  TSeries mul_left(const TorusElem& x) const;

  // Multiply by t^d (drop overflow beyond the order).
  TSeries shifted_t(int d) const;

  bool operator==(const TSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const TSeries& o) const { return !(*this == o); }

 private:
  int order_ = 0;
  std::vector<TorusElem> coeffs_;
};

// Two-sided inverse of a series with identity constant term, to the same
// order. A non-identity constant term raises DomainError ("degree-0
// mismatch"), which downstream signals a wrongly assembled ladder.
TSeries series_inverse(const TSeries& u);

}  // namespace qq
