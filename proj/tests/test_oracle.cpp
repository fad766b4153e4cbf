#include "doctest.h"
#include "qq/commutative.hpp"
#include "qq/oracle.hpp"

using namespace qq;

namespace {

// Element from a term list {(q-exponent of the unit coefficient, exponents)}.
TorusElem elem(const SkewForm& f,
               std::vector<std::pair<QLaurent, ExpVec>> terms) {
  TorusElem r(f);
  for (auto& [c, e] : terms) r.add_term(e, c);
  return r;
}

QLaurent qp(long e) { return QLaurent::q_power(e); }

}  // namespace

TEST_CASE("evolve_rank1_forward_and_backward") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  QSystemState st = evolve(seed, -1, 3);
  const SkewForm& f = seed.form;

  CHECK(st.at(1, 0) == TorusElem::monomial(f, {1, 0}));
  CHECK(st.at(1, 1) == TorusElem::monomial(f, {0, 1}));
  CHECK(st.at(1, 2) == elem(f, {{qp(1), {-1, 2}}, {qp(-1), {-1, 0}}}));
  CHECK(st.at(1, -1) == elem(f, {{qp(1), {2, -1}}, {qp(-1), {0, -1}}}));
  CHECK(st.at(1, 3) == elem(f, {{qp(3), {-2, 3}},
                                {qp(1) + qp(-1), {-2, 1}},
                                {qp(-3), {-2, -1}},
                                {qp(-1), {0, -1}}}));
  CHECK(verify_recursion(st));
}

TEST_CASE("evolve_boundary_rows_are_one") {
  ClusterSeed seed = build_seed(MotzkinPath{{0, 1}});
  QSystemState st = evolve(seed, 0, 2);
  CHECK(st.at(0, -7) == TorusElem::one(seed.form));
  CHECK(st.at(3, 5) == TorusElem::one(seed.form));
  CHECK(st.has(0, 123));
  CHECK(!st.has(1, 123));
}

TEST_CASE("evolve_window_errors") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  CHECK_THROWS_AS(evolve(seed, 1, 3), DomainError);  // excludes column m_1 = 0
  QSystemState st = evolve(seed, 0, 2);
  CHECK_THROWS_AS(st.at(1, 3), DomainError);
}

TEST_CASE("evolve_rank2_values") {
  // Staircase seed: generators at (1,1),(2,0),(1,2),(2,1).
  ClusterSeed seed = build_seed(MotzkinPath{{1, 0}});
  QSystemState st = evolve(seed, -1, 4);
  const SkewForm& f = seed.form;

  CHECK(st.at(2, 2) == elem(f, {{qp(2), {0, -1, 0, 2}}, {qp(-2), {1, -1, 0, 0}}}));
  CHECK(st.at(1, 3) == elem(f, {{qp(2), {-1, 0, 2, 0}},
                                {qp(1), {-1, -1, 0, 2}},
                                {qp(-3), {0, -1, 0, 0}}}));
  CHECK(verify_recursion(st));
}

TEST_CASE("recursion_multiplicative_check_all_fundamental_paths") {
  for (int r = 1; r <= 3; ++r) {
    for (const MotzkinPath& m : enumerate_fundamental(r)) {
      ClusterSeed seed = build_seed(m);
      long top = *std::max_element(m.m.begin(), m.m.end());
      QSystemState st = evolve(seed, -2, top + 3);
      CHECK(verify_recursion(st));
    }
  }
}

TEST_CASE("series_oracle_rank1") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  QSystemState st = evolve(seed, 0, 4);
  const SkewForm& f = seed.form;

  TSeries F = series_F_oracle(st, 3);
  CHECK(F.at(0) == TorusElem::one(f));
  CHECK(F.at(1) == TorusElem::monomial(f, {-1, 1}, qp(1)));
  CHECK(F.at(2) == elem(f, {{qp(3), {-2, 2}}, {qp(-1), {-2, 0}}}));
  CHECK(F.at(3) == elem(f, {{qp(6), {-3, 3}},
                            {qp(2) + qp(0), {-3, 1}},
                            {qp(-4), {-3, -1}},
                            {qp(-2), {-1, -1}}}));

  TSeries G = series_G_oracle(st, 2);
  CHECK(G.at(0) == TorusElem::one(f));
  CHECK(G.at(1) == elem(f, {{qp(1), {-1, 1}}, {qp(-1), {-1, -1}}}));
  CHECK(G.at(2) == elem(f, {{qp(3), {-2, 2}},
                            {qp(1) + qp(-1), {-2, 0}},
                            {qp(-3), {-2, -2}},
                            {qp(-1), {0, -2}}}));
}

TEST_CASE("series_oracle_rank2") {
  ClusterSeed seed = build_seed(MotzkinPath{{1, 0}});
  QSystemState st = evolve(seed, 0, 4);
  const SkewForm& f = seed.form;

  TSeries G = series_G_oracle(st, 1);
  CHECK(G.at(1) == elem(f, {{qp(2), {-1, 0, 1, 0}},
                            {qp(-1), {-1, -1, -1, 2}},
                            {qp(-3), {0, -1, -1, 0}}}));

  TSeries F = series_F_oracle(st, 2);
  CHECK(F.at(2) == elem(f, {{qp(6), {-2, 0, 2, 0}},
                            {qp(2), {-2, -1, 0, 2}},
                            {qp(-2), {-1, -1, 0, 0}}}));
}

TEST_CASE("positivity_check_examples") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  QSystemState st = evolve(seed, -1, 3);
  CHECK(positivity_check(st.at(1, 2)).ok);
  CHECK(positivity_check(TorusElem::one(seed.form)).ok);

  TorusElem bad(seed.form);
  bad.add_term({1, 0}, qp(0) - qp(1));  // coefficient 1 - q
  PositivityResult res = positivity_check(bad);
  CHECK(!res.ok);
  CHECK(res.exponent == ExpVec{1, 0});
  CHECK(res.coefficient == qp(0) - qp(1));
}

TEST_CASE("positivity_on_all_windows") {
  for (int r = 1; r <= 3; ++r) {
    for (const MotzkinPath& m : enumerate_fundamental(r)) {
      ClusterSeed seed = build_seed(m);
      long top = *std::max_element(m.m.begin(), m.m.end());
      QSystemState st = evolve(seed, -2, top + 3);
      for (const auto& [key, val] : st.window) {
        (void)key;
        CHECK(positivity_check(val).ok);
      }
    }
  }
}

TEST_CASE("commutative_numeric_sequence") {
  ClusterSeed seed = build_seed(MotzkinPath{{0}});
  auto w = evolve_commutative(seed, 0, 6);
  std::vector<long> expected = {1, 1, 2, 5, 13, 34, 89};
  for (int n = 0; n <= 6; ++n)
    CHECK(w.at({1, n}).eval_ones() == expected[n]);
}

TEST_CASE("evolve_matches_commutative_at_q1") {
  for (int r = 1; r <= 3; ++r) {
    for (const MotzkinPath& m : enumerate_fundamental(r)) {
      ClusterSeed seed = build_seed(m);
      long top = *std::max_element(m.m.begin(), m.m.end());
      QSystemState st = evolve(seed, -1, top + 2);
      auto w = evolve_commutative(seed, -1, top + 2);
      for (const auto& [key, val] : st.window)
        CHECK(to_commutative(val) == w.at(key));
    }
  }
}

TEST_CASE("comm_exact_div_guards") {
  CommPoly one = CommPoly::constant(2, 1);
  CommPoly x = CommPoly::unit_var(2, 0);
  CommPoly num = x * x + one;         // x^2 + 1
  CommPoly den = x + one;             // x + 1
  CHECK_THROWS_AS(comm_exact_div(num, den), NotDivisibleError);
  CHECK(comm_exact_div(num * den, den) == num);
  CHECK(comm_exact_div((x + one) * (x + one), x + one) == x + one);
}
