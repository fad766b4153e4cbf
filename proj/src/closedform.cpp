#include "qq/closedform.hpp"

#include <functional>

#include "qq/qtorus.hpp"

namespace qq {
namespace {

// Boundary binomial [a+b-1; b]. Degenerate cases: a = 0 acts as a delta on
// b, anything further out vanishes.
QLaurent pf(long a, long b, long p) {
  if (a == 0) return b == 0 ? QLaurent(1) : QLaurent();
  if (a < 0 || b < 0) return QLaurent();
  return qmultinomial({a - 1, b}, p);
}

// Flat-step trinomial [a+j+n-1; a-1, j, n].
QLaurent u1(long a, long j, long n, long p) {
  if (a == 0) return (j == 0 && n == 0) ? QLaurent(1) : QLaurent();
  if (a < 0 || j < 0 || n < 0) return QLaurent();
  return qmultinomial({a - 1, j, n}, p);
}

// Descending-step pair [a+j+n-1; a-1] * [a+j+n; n]; j may be negative as
// long as a + j >= 0 and j + n >= 0.
QLaurent u2(long a, long j, long n, long p) {
  if (a == 0) return (j == 0 && n == 0) ? QLaurent(1) : QLaurent();
  if (a < 0 || n < 0 || a + j < 0 || j + n < 0) return QLaurent();
  return qmultinomial({j + n, a - 1}, p) * qmultinomial({a + j, n}, p);
}

enum class StepShape { flat, ascending, descending };

StepShape step_shape(const MotzkinPath& m, int i) {
  long d = m.m[i] - m.m[i - 1];
  if (d == 0) return StepShape::flat;
  return d == 1 ? StepShape::ascending : StepShape::descending;
}

// Factor attached to interior step (i, i+1), consuming l_{2i}, l_{2i+1},
// l_{2i+2}.
QLaurent step_factor(const MotzkinPath& m, const MultiIndex& ell, int i,
                     long p) {
  long a = ell[2 * i - 1], j = ell[2 * i], n = ell[2 * i + 1];
  switch (step_shape(m, i)) {
    case StepShape::flat:
      return u1(a, j, n, p);
    case StepShape::descending:
      return u2(a, j, n, p);
    default:
      return pf(a, j, p) * pf(j, n, p);
  }
}

void check_index(const MotzkinPath& m, const MultiIndex& ell) {
  if (static_cast<int>(ell.size()) != 2 * m.rank() + 1)
    throw DomainError("coeff_A: index length must be 2r + 1");
}

}  // namespace

long total_degree(const MultiIndex& ell) {
  long s = 0;
  for (long v : ell) s += v;
  return s;
}

QLaurent coeff_A(const MotzkinPath& m, const MultiIndex& ell) {
  check_index(m, ell);
  const int r = m.rank();
  const long p = r + 1;
  QLaurent a = pf(ell[0], ell[1], p);
  for (int i = 1; i <= r - 1; ++i) a *= step_factor(m, ell, i, p);
  a *= pf(ell[2 * r - 1], ell[2 * r], p);
  return a;
}

QLaurent coeff_A_recursive(const MotzkinPath& m, const MultiIndex& ell) {
  check_index(m, ell);
  const int r = m.rank();
  const long p = r + 1;
  QLaurent a = pf(ell[0], ell[1], p);
  int i = 1;
  while (i <= r - 1 && !a.is_zero()) {
    if (step_shape(m, i) == StepShape::ascending) {
      // consume the whole ascending segment as one block of binomials
      int end = i;
      while (end + 1 <= r - 1 && step_shape(m, end + 1) == StepShape::ascending)
        ++end;
      for (int s = i; s <= end; ++s)
        a *= pf(ell[2 * s - 1], ell[2 * s], p) * pf(ell[2 * s], ell[2 * s + 1], p);
      i = end + 1;
    } else {
      a *= step_factor(m, ell, i, p);
      ++i;
    }
  }
  if (!a.is_zero()) a *= pf(ell[2 * r - 1], ell[2 * r], p);
  return a;
}

TSeries series_closed(const WeightVector& w, SeriesKind which, int order) {
  const MotzkinPath& m = w.seed.path;
  const int r = w.seed.rank;
  const long p = r + 1;
  const long shift = which == SeriesKind::G ? 1 : 0;
  const int last = 2 * r;  // 0-based final slot, holds l_{2r+1}
  TSeries out(w.seed.form, order);

  auto desc = [&](int i) {
    return i >= 1 && i <= r - 1 && step_shape(m, i) == StepShape::descending;
  };

  MultiIndex ell(2 * r + 1, 0);
  std::function<void(int, long, const QLaurent&)> rec =
      [&](int u, long s, const QLaurent& acc) {
        if (u > last) {
          TorusElem mono = TorusElem::one(w.seed.form);
          for (int j = last; j >= 0; --j)
            if (ell[j] != 0) mono = normal_mul(mono, monomial_pow(w.y[j], ell[j]));
          out.at(static_cast<int>(s)) += mono.scaled(acc);
          return;
        }
        long lo = 0, hi = order - s;
        if (u % 2 == 1) {
          // even slot l_{2i}; a following descending odd slot can dip back
          // below the budget line
          const int i = (u + 1) / 2;
          if (u >= 2 && ell[u - 1] < 0) lo = -ell[u - 1];
          if (desc(i)) hi = order;
        } else if (u >= 2 && u < last && desc(u / 2)) {
          lo = -ell[u - 1];
        }
        for (long v = lo; v <= hi; ++v) {
          ell[u] = v;
          QLaurent a = acc;
          if (u == 1)
            a *= pf(ell[0] + shift, ell[1], p);
          else if (u % 2 == 1 && u >= 3)
            a *= step_factor(m, ell, (u - 1) / 2, p);
          else if (u == last)
            a *= pf(ell[last - 1], ell[last], p);
          if (!a.is_zero()) rec(u + 1, s + v, a);
        }
        ell[u] = 0;
      };
  rec(0, 0, QLaurent(1));
  return out;
}

}  // namespace qq
