#pragma once

// Closed form of the generating series: the coefficient A_m(l) as a product
// of q-multinomials keyed on the local shape of the path, and the series
// rebuilt by direct summation over multi-indices.

#include "qq/tseries.hpp"
#include "qq/weights.hpp"

namespace qq {

// Summation index (l_1, ..., l_{2r+1}). On the support, interior odd
// entries next to a descending step may be negative; everything else is
// nonnegative.
using MultiIndex = std::vector<long>;

long total_degree(const MultiIndex& ell);

// Product over the path of q-multinomial factors in p = q^{r+1}: boundary
// binomials [a+b-1; b] at both ends, and per interior step a trinomial
// (flat), a pair of binomials (descending), or two more boundary-type
// binomials (ascending). Out-of-range arguments make the value vanish,
// except [-1; 0] = 1.
QLaurent coeff_A(const MotzkinPath& m, const MultiIndex& ell);

// Same value accumulated left-to-right along the path, consuming maximal
// ascending segments as blocks; consistency witness for coeff_A.
QLaurent coeff_A_recursive(const MotzkinPath& m, const MultiIndex& ell);

enum class SeriesKind { F, G };

// Sum over all multi-indices of total degree <= order of the coefficient
// (with the l_1 + 1 shift for G) times (t y_{2r+1})^{l_{2r+1}} ... (t y_1)^{l_1}.
TSeries series_closed(const WeightVector& w, SeriesKind which, int order);

}  // namespace qq
