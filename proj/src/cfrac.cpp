#include "qq/cfrac.hpp"

namespace qq {

namespace {

TSeries hat_series(const HatEntry& h, const SkewForm& f, int order) {
  TSeries s(f, order);
  s.at(0) = h.deg0;
  if (order >= 1) s.at(1) = h.deg1;
  if (order >= 2) s.at(2) = h.deg2;
  return s;
}

// t * y as a series.
TSeries t_times(const TorusElem& y, const SkewForm& f, int order) {
  TSeries s(f, order);
  if (order >= 1) s.at(1) = y;
  return s;
}

}  // namespace

TSeries mul_hat_right(const TSeries& s, const HatEntry& h) {
  TSeries r = s.mul_right(h.deg0);
  r += s.mul_right(h.deg1).shifted_t(1);
  r += s.mul_right(h.deg2).shifted_t(2);
  return r;
}

TSeries expand_continued_fraction(const WeightVector& w,
                                  const HatWeightVector& yhat, int order) {
  const int r = w.seed.rank;
  const SkewForm& f = w.seed.form;
  const MotzkinPath& m = w.seed.path;
  const TSeries one = TSeries::one(f, order);

  auto jacobi_step = [&](const TSeries& next, int k) {
    TSeries u = one;
    u -= hat_series(yhat.yhat[2 * k - 2], f, order);
    if (2 * k <= 2 * r + 1) u -= mul_hat_right(next, yhat.yhat[2 * k - 1]);
    return series_inverse(u);
  };

  // Plain Jacobi ladder J_{r+1} .. J_1; J_{r+2} = 0.
  std::vector<TSeries> J(r + 3, TSeries(f, order));
  for (int k = r + 1; k >= 1; --k) J[k] = jacobi_step(J[k + 1], k);

  // Step i of the path ascends iff m_{i+1} = m_i + 1.
  auto asc = [&](int i) {
    return i >= 1 && i <= r - 1 && m.m[i] == m.m[i - 1] + 1;
  };
  bool has_run = false;
  for (int i = 1; i <= r - 1; ++i) has_run = has_run || asc(i);

  if (has_run) {
    // Mixed ladder: each maximal ascending segment of columns k..k+ell-1 is
    // expanded Stieltjes-style from its closure J_{k+ell}, with the "- 1"
    // correction when the step after the segment descends.
    std::vector<TSeries> Jm(r + 3, TSeries(f, order));
    for (int k = r + 1; k >= 1; --k) {
      if (!(asc(k) && !asc(k - 1))) {
        Jm[k] = jacobi_step(Jm[k + 1], k);
        continue;
      }
      int end = k;
      while (asc(end + 1)) ++end;
      const int ell = end - k + 2;
      const int after = k + ell;
      TSeries S = Jm[after];
      if (m.entry_ext(after) == m.entry_ext(after - 1) - 1) S -= one;
      S = series_inverse(one - mul_hat_right(S, yhat.yhat[2 * k + 2 * ell - 3]));
      for (int i = 2 * k + 2 * ell - 4; i >= 2 * k; --i)
        S = series_inverse(one - S.mul_right(w.y[i]).shifted_t(1));
      TSeries u = one - t_times(w.y[2 * k - 2], f, order) -
                  S.mul_right(w.y[2 * k - 1]).shifted_t(1);
      Jm[k] = series_inverse(u);
    }
    if (!(Jm[1] == J[1]))
      throw DomainError("expand_continued_fraction: mixed ladder disagrees");
  }
  return J[1];
}

TSeries F_from_G(const TSeries& G, const TorusElem& y1) {
  TSeries F = G.mul_right(y1).shifted_t(1);
  F.at(0) += TorusElem::one(G.form());
  return F;
}

namespace {

// Depth-first walk enumeration; each new step's weight multiplies on the
// left, keeping the first-traversed step rightmost.
void walk(const WeightVector& w, int v, int tdeg, const TorusElem& acc,
          TSeries& out) {
  const int r = w.seed.rank;
  if (v == 1) out.at(tdeg) += acc;
  if (tdeg < out.order()) {
    walk(w, v, tdeg + 1, normal_mul(w.y[2 * v - 2], acc), out);  // loop
    if (v <= r)
      walk(w, v + 1, tdeg + 1, normal_mul(w.y[2 * v - 1], acc), out);  // up
  }
  if (v > 1) walk(w, v - 1, tdeg, acc, out);  // down, weight 1
}

}  // namespace

TSeries path_partition(const WeightVector& w, int order) {
  for (long e : w.seed.path.m)
    if (e != 0) throw DomainError("path_partition: flat fundamental seed required");
  TSeries out(w.seed.form, order);
  walk(w, 1, 0, TorusElem::one(w.seed.form), out);
  return out;
}

}  // namespace qq
