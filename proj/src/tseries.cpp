#include "qq/tseries.hpp"

namespace qq {

TSeries TSeries::one(const SkewForm& form, int order) {
  TSeries s(form, order);
  s.coeffs_[0] = TorusElem::one(form);
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  if (order_ != o.order_) throw DomainError("TSeries: order mismatch");
  for (int n = 0; n <= order_; ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  if (order_ != o.order_) throw DomainError("TSeries: order mismatch");
  for (int n = 0; n <= order_; ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  if (a.order_ != b.order_) throw DomainError("TSeries: order mismatch");
  TSeries r(a.form(), a.order_);
  for (int n = 0; n <= a.order_; ++n)
    for (int k = 0; k <= n; ++k)
      r.coeffs_[n] += normal_mul(a.coeffs_[k], b.coeffs_[n - k]);
  return r;
}

TSeries TSeries::mul_right(const TorusElem& x) const {
  TSeries r(form(), order_);
  for (int n = 0; n <= order_; ++n) r.coeffs_[n] = normal_mul(coeffs_[n], x);
  return r;
}

TSeries TSeries::mul_left(const TorusElem& x) const {
  TSeries r(form(), order_);
  for (int n = 0; n <= order_; ++n) r.coeffs_[n] = normal_mul(x, coeffs_[n]);
  return r;
}

TSeries TSeries::shifted_t(int d) const {
  TSeries r(form(), order_);
  for (int n = 0; n <= order_; ++n) {
    int k = n + d;
    if (k >= 0 && k <= order_) r.coeffs_[k] = coeffs_[n];
  }
  return r;
}

TSeries series_inverse(const TSeries& u) {
  if (!(u.at(0) == TorusElem::one(u.form())))
    throw DomainError("series_inverse: degree-0 mismatch (constant term not 1)");
  TSeries v(u.form(), u.order());
  v.at(0) = TorusElem::one(u.form());
  for (int n = 1; n <= u.order(); ++n) {
    TorusElem acc(u.form());
    for (int k = 1; k <= n; ++k) acc += normal_mul(u.at(k), v.at(n - k));
    v.at(n) = -acc;
  }
  return v;
}

}  // namespace qq
