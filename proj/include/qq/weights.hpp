#pragma once

// Weight monomials attached to a Motzkin path, their mutation recursion,
// the t-graded hatted weights feeding the continued fractions, and the
// p-commutation quiver.

#include <vector>

#include "qq/cluster.hpp"
#include "qq/qtorus.hpp"

namespace qq {

struct WeightVector {
  ClusterSeed seed;
  std::vector<TorusElem> y;  // y[j-1] holds y_j, j = 1..2r+1; unit monomials
};

// Closed-form weights over the seed's torus: odd entries
// q^{i-1} R_{i,m_i+1} R_{i,m_i}^{-1} R_{i-1,m_{i-1}} R_{i-1,m_{i-1}+1}^{-1}
// and even entries with the two conditional correction factors. Boundary
// rows 0 and r+1 drop as 1.
WeightVector weights_explicit(const ClusterSeed& seed);

// One forward mutation at column i (the case tag must match the local path
// shape): y'_{2i-1} = y_{2i-1} + y_{2i}, y'_{2i} = y_{2i+1} y_{2i} D^{-1},
// y'_{2i+1} = y_{2i+1} y_{2i-1} D^{-1} with D the new odd weight, plus the
// extra even update in case (ii); everything re-expressed over the mutated
// seed's torus, where each entry is again a unit monomial.
WeightVector weights_mutate(const WeightVector& w, int i, MutationCase tag);

// One t-graded hatted weight: parts of t-degree 0, 1, 2.
struct HatEntry {
  TorusElem deg0, deg1, deg2;
};

struct HatWeightVector {
  std::vector<HatEntry> yhat;  // 2r+1 entries
};

// Hatted weights by the local step shape at (i, i+1): flat keeps t y,
// ascending bundles t(y_{2i-1}+y_{2i}) and t^2 y_{2i+1} y_{2i}, descending
// splits off the t-degree-0 part y_{2i+1}^{-1} y_{2i}.
HatWeightVector hat_weights(const WeightVector& w);

// Arrow i -> j with multiplicity e whenever y_i y_j = p^e y_j y_i, e > 0,
// where p = q^{r+1}; throws if a commutation exponent is not a multiple of
// r+1. Vertices are the weight indices 1..2r+1.
struct WeightArrow {
  int from = 0, to = 0;
  long mult = 0;
};

std::vector<WeightArrow> comm_quiver(const WeightVector& w);

}  // namespace qq
