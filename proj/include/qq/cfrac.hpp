#pragma once

// Continued-fraction expansion of the generating series: the Jacobi-type
// ladder over hatted weights, the mixed Stieltjes-Jacobi form on ascending
// segments (computed and compared whenever one exists), the F/G shift, and
// the weighted-walk partition function that re-derives the flat-path series.

#include "qq/tseries.hpp"
#include "qq/weights.hpp"

namespace qq {

// Right-multiplication of a series by a t-graded weight entry.
TSeries mul_hat_right(const TSeries& s, const HatEntry& h);

// G_m(t) as the bottom-up ladder J_1; every inverted series must have
// identity constant term (the degree-0 parts of descending entries cancel),
// and the mixed-form expansion must agree when ascending segments exist.
TSeries expand_continued_fraction(const WeightVector& w,
                                  const HatWeightVector& yhat, int order);

// F_m(t) = 1 + t G_m(t) y_1.
TSeries F_from_G(const TSeries& G, const TorusElem& y1);

// Partition function of closed walks at vertex 1 on the weighted graph with
// vertices 1..r+1: the loop at vertex i carries t y_{2i-1}, the up step
// i -> i+1 carries t y_{2i}, the down step carries 1. Step weights multiply
// in traversal order, first-traversed step rightmost. Flat fundamental
// seeds only.
TSeries path_partition(const WeightVector& w, int order);

}  // namespace qq
