#include "doctest.h"
#include "qq/cfrac.hpp"
#include "qq/oracle.hpp"

#include <algorithm>
#include <random>

using namespace qq;

namespace {

TorusElem mono(const SkewForm& f, long qe, ExpVec e) {
  return TorusElem::monomial(f, std::move(e), QLaurent::q_power(qe));
}

TSeries oracle_G(const MotzkinPath& m, int order) {
  ClusterSeed seed = build_seed(m);
  long top = *std::max_element(m.m.begin(), m.m.end());
  QSystemState st = evolve(seed, 0, top + order + 1);
  return series_G_oracle(st, order);
}

TSeries oracle_F(const MotzkinPath& m, int order) {
  ClusterSeed seed = build_seed(m);
  long top = *std::max_element(m.m.begin(), m.m.end());
  QSystemState st = evolve(seed, 0, top + order + 1);
  return series_F_oracle(st, order);
}

TSeries expand(const WeightVector& w, int order) {
  return expand_continued_fraction(w, hat_weights(w), order);
}

TorusElem random_monomial(std::mt19937& rng, const SkewForm& f) {
  std::uniform_int_distribution<long> exp(-2, 2);
  std::uniform_int_distribution<long> qe(-2, 2);
  ExpVec e(f.size());
  for (auto& x : e) x = exp(rng);
  return TorusElem::monomial(f, e, QLaurent::q_power(qe(rng)));
}

}  // namespace

TEST_CASE("series_inverse_geometric") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  const SkewForm& f = seed.form;
  TorusElem y = mono(f, 1, {-1, 1});
  TSeries u = TSeries::one(f, 5);
  u.at(1) -= y;  // 1 - t y
  TSeries v = series_inverse(u);
  TorusElem pw = TorusElem::one(f);
  for (int n = 0; n <= 5; ++n) {
    CHECK(v.at(n) == pw);
    pw = normal_mul(pw, y);
  }
  CHECK(u * v == TSeries::one(f, 5));
  CHECK(v * u == TSeries::one(f, 5));
}

TEST_CASE("series_inverse_requires_identity_constant_term") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  TSeries u = TSeries::one(seed.form, 3);
  u.at(0) += mono(seed.form, 0, {1, 0});
  CHECK_THROWS_AS(series_inverse(u), DomainError);
}

TEST_CASE("series_inverse_random_round_trip") {
  std::mt19937 rng(20240811);
  ClusterSeed seed = build_seed(MotzkinPath{{0, 0}});
  const SkewForm& f = seed.form;
  for (int trial = 0; trial < 60; ++trial) {
    TSeries u = TSeries::one(f, 4);
    for (int n = 1; n <= 4; ++n) u.at(n) = random_monomial(rng, f) - random_monomial(rng, f);
    TSeries v = series_inverse(u);
    CHECK(u * v == TSeries::one(f, 4));
    CHECK(v * u == TSeries::one(f, 4));
  }
}

TEST_CASE("continued_fraction_rank1_low_orders") {
  WeightVector w = weights_explicit(build_seed(MotzkinPath{{0}}));
  const SkewForm& f = w.seed.form;
  TSeries G = expand(w, 2);
  CHECK(G.at(0) == TorusElem::one(f));
  CHECK(G.at(1) == w.y[0] + w.y[1]);  // 1 + t(y_1 + y_2) + ...
  CHECK(G.at(2) == mono(f, 3, {-2, 2}) + mono(f, 1, {-2, 0}) +
                       mono(f, -1, {-2, 0}) + mono(f, -3, {-2, -2}) +
                       mono(f, -1, {0, -2}));
}

TEST_CASE("F_from_G_examples") {
  WeightVector w = weights_explicit(build_seed(MotzkinPath{{0}}));
  const SkewForm& f = w.seed.form;
  TSeries F = F_from_G(expand(w, 3), w.y[0]);
  CHECK(F.at(0) == TorusElem::one(f));
  CHECK(F.at(1) == w.y[0]);
  CHECK(F.at(2) == mono(f, 3, {-2, 2}) + mono(f, -1, {-2, 0}));
}

TEST_CASE("continued_fraction_matches_oracle") {
  for (int r = 1; r <= 3; ++r) {
    const int order = 5 - (r - 1);
    for (const MotzkinPath& m : enumerate_fundamental(r)) {
      WeightVector w = weights_explicit(build_seed(m));
      TSeries G = expand(w, order);
      CHECK(G == oracle_G(m, order));
      CHECK(F_from_G(G, w.y[0]) == oracle_F(m, order));
    }
  }
}

TEST_CASE("ascending_path_is_pure_stieltjes") {
  // On the fully ascending path, F equals the finite Stieltjes ladder
  // S_i = (1 - S_{i+1} t y_i)^{-1} folded from i = 2r+1 down to 1.
  for (int r = 2; r <= 3; ++r) {
    std::vector<long> asc(r);
    for (int i = 0; i < r; ++i) asc[i] = i;
    WeightVector w = weights_explicit(build_seed(MotzkinPath{asc}));
    const int order = 5;
    const SkewForm& f = w.seed.form;
    TSeries S = TSeries::one(f, order);
    for (int i = 2 * r + 1; i >= 1; --i)
      S = series_inverse(TSeries::one(f, order) -
                         S.mul_right(w.y[i - 1]).shifted_t(1));
    CHECK(S == F_from_G(expand(w, order), w.y[0]));
  }
}

TEST_CASE("rearrangement_identity") {
  // a + b + (1-c-u)^{-1} c b = a + (1-(1-u)^{-1}c)^{-1} b for t-degree-1
  // monomials a, b, c and any series u with zero constant term.
  std::mt19937 rng(77002);
  ClusterSeed seed = build_seed(MotzkinPath{{0, 0}});
  const SkewForm& f = seed.form;
  const int order = 6;
  const TSeries one = TSeries::one(f, order);
  for (int trial = 0; trial < 120; ++trial) {
    TSeries a(f, order), b(f, order), c(f, order), u(f, order);
    a.at(1) = random_monomial(rng, f);
    b.at(1) = random_monomial(rng, f);
    c.at(1) = random_monomial(rng, f);
    for (int n = 1; n <= order; ++n)
      u.at(n) = random_monomial(rng, f) - random_monomial(rng, f);
    TSeries lhs = a + b + series_inverse(one - c - u) * c * b;
    TSeries rhs = a + series_inverse(one - series_inverse(one - u) * c) * b;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("path_partition_rank1") {
  WeightVector w = weights_explicit(build_seed(MotzkinPath{{0}}));
  TSeries P = path_partition(w, 2);
  CHECK(P.at(0) == TorusElem::one(w.seed.form));
  CHECK(P.at(1) == w.y[0] + w.y[1]);
  // Five walks of t-degree 2.
  const TorusElem& y1 = w.y[0];
  const TorusElem& y2 = w.y[1];
  const TorusElem& y3 = w.y[2];
  TorusElem expect = normal_mul(y1, y1) + normal_mul(y1, y2) +
                     normal_mul(y2, y1) + normal_mul(y2, y2) +
                     normal_mul(y3, y2);
  CHECK(P.at(2) == expect);
}

TEST_CASE("path_partition_matches_continued_fraction") {
  for (int r = 1; r <= 3; ++r) {
    WeightVector w = weights_explicit(build_seed(MotzkinPath{std::vector<long>(r, 0)}));
    const int order = 4;
    CHECK(path_partition(w, order) == expand(w, order));
  }
  WeightVector w = weights_explicit(build_seed(MotzkinPath{{0, 1}}));
  CHECK_THROWS_AS(path_partition(w, 2), DomainError);
}
