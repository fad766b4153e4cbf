#include "doctest.h"
#include "qq/cluster.hpp"

#include <algorithm>

using namespace qq;

namespace {

MotzkinPath mp(std::vector<long> v) { return MotzkinPath(std::move(v)); }

// Identity matrix scaled by c.
std::vector<std::vector<long>> scaled_identity(int n, long c) {
  std::vector<std::vector<long>> id(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = c;
  return id;
}

std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a,
                                       const std::vector<std::vector<long>>& b) {
  const std::size_t n = a.size();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

MotzkinPath translated(const MotzkinPath& m, long d) {
  MotzkinPath out = m;
  for (auto& v : out.m) v += d;
  return out;
}

}  // namespace

TEST_CASE("mutate_path_examples") {
  CHECK(mutate_path(mp({0, 0, 0}), 2, +1) == mp({0, 1, 0}));
  CHECK(mutate_path(mp({0, 0}), 1, +1) == mp({1, 0}));
  CHECK_THROWS_AS(mutate_path(mp({0, 1, 2}), 3, +1), DomainError);
  CHECK_THROWS_AS(mutate_path(mp({0, 0}), 3, +1), DomainError);
}

TEST_CASE("exchange_matrix_cartan_block_form") {
  ExchangeMatrix b1 = build_exchange_matrix(mp({0}));
  CHECK(b1.B == std::vector<std::vector<long>>{{0, -2}, {2, 0}});

  // r=2 flat path: block form with the Cartan matrix C.
  ExchangeMatrix b2 = build_exchange_matrix(mp({0, 0}));
  std::vector<std::vector<long>> expect = {
      {0, 0, -2, 1}, {0, 0, 1, -2}, {2, -1, 0, 0}, {-1, 2, 0, 0}};
  CHECK(b2.B == expect);

  // r=3 flat path, same block structure.
  ExchangeMatrix b3 = build_exchange_matrix(mp({0, 0, 0}));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      long c = (i == j) ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
      CHECK(b3.B[3 + i][j] == c);
      CHECK(b3.B[i][3 + j] == -c);
      CHECK(b3.B[i][j] == 0);
      CHECK(b3.B[3 + i][3 + j] == 0);
    }
}

TEST_CASE("exchange_matrix_skew_symmetric") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& m : enumerate_fundamental(r)) {
      ExchangeMatrix b = build_exchange_matrix(m);
      for (std::size_t u = 0; u < b.B.size(); ++u)
        for (std::size_t v = 0; v < b.B.size(); ++v)
          CHECK(b.B[u][v] == -b.B[v][u]);
    }
}

TEST_CASE("lambda_examples") {
  SkewForm l1 = build_lambda(mp({0}));
  CHECK(l1.lambda == std::vector<std::vector<long>>{{0, 1}, {-1, 0}});
  // r=2: generators (1,0) and (2,1) pair to (1-0)*Lambda_{1,2} = 1.
  SkewForm l2 = build_lambda(mp({0, 0}));
  CHECK(l2(0, 3) == 1);
  CHECK(lambda_pairing(1, 2, 2) == 1);
  CHECK(lambda_pairing(2, 2, 3) == 4);
}

TEST_CASE("lambda_B_compatibility") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& m : enumerate_fundamental(r)) {
      SkewForm lam = build_lambda(m);
      ExchangeMatrix b = build_exchange_matrix(m);
      CHECK(mat_mul(lam.lambda, b.B) == scaled_identity(2 * r, r + 1));
    }
}

TEST_CASE("mutate_exchange_matrix_basics") {
  ExchangeMatrix b{{{0, -2}, {2, 0}}};
  ExchangeMatrix flipped = mutate_exchange_matrix(b, 0);
  CHECK(flipped.B == std::vector<std::vector<long>>{{0, 2}, {-2, 0}});
  CHECK(mutate_exchange_matrix(flipped, 0) == b);
  for (int r = 1; r <= 3; ++r)
    for (const auto& m : enumerate_fundamental(r)) {
      ExchangeMatrix bm = build_exchange_matrix(m);
      for (int k = 0; k < 2 * r; ++k)
        CHECK(mutate_exchange_matrix(mutate_exchange_matrix(bm, k), k) == bm);
    }
}

TEST_CASE("matrix_mutation_matches_path_mutation") {
  // Mutating B_m at the bottom slot of column i, then swapping that slot with
  // the top slot of column i (the new normal order), equals B of the mutated
  // path.
  for (int r = 1; r <= 3; ++r)
    for (const auto& m : enumerate_fundamental(r))
      for (int i = 1; i <= r; ++i) {
        MotzkinPath next = m;
        next.m[i - 1] += 1;
        if (!next.is_valid()) continue;
        ExchangeMatrix bm = mutate_exchange_matrix(build_exchange_matrix(m), i - 1);
        ExchangeMatrix bn = build_exchange_matrix(next);
        auto perm = [&](int u) {
          if (u == i - 1) return r + i - 1;
          if (u == r + i - 1) return i - 1;
          return u;
        };
        bool ok = true;
        for (int u = 0; u < 2 * r; ++u)
          for (int v = 0; v < 2 * r; ++v)
            if (bm.B[perm(u)][perm(v)] != bn.B[u][v]) ok = false;
        CHECK(ok);
      }
}

TEST_CASE("exchange_matrix_translation_covariance") {
  // Translating the path down-shifts every generator's height by one; in
  // normal-order labels the matrix is unchanged, and in parity-sorted labels
  // the translation acts as the block swap (bottom slots <-> top slots). The
  // literal sign flip -B holds for flat paths (all r) and everywhere at r=1,
  // where the swap coincides with negation.
  for (int r = 1; r <= 3; ++r)
    for (const auto& m : enumerate_fundamental(r)) {
      ExchangeMatrix bm = build_exchange_matrix(m);
      ExchangeMatrix bt = build_exchange_matrix(translated(m, 1));
      CHECK(bm == bt);
    }
  for (int r = 1; r <= 3; ++r) {
    MotzkinPath flat(std::vector<long>(r, 0));
    ExchangeMatrix b = build_exchange_matrix(flat);
    auto swap_idx = [&](int u) { return u < r ? u + r : u - r; };
    for (int u = 0; u < 2 * r; ++u)
      for (int v = 0; v < 2 * r; ++v)
        CHECK(b.B[swap_idx(u)][swap_idx(v)] == -b.B[u][v]);
  }
}

TEST_CASE("plan_mutations_examples") {
  CHECK(plan_mutations(mp({0, 0, 0})).empty());

  auto plan1 = plan_mutations(mp({0, 1, 0}));
  REQUIRE(plan1.size() == 1);
  CHECK(plan1[0].index == 2);
  CHECK(plan1[0].tag == MutationCase::case_ii);

  auto plan2 = plan_mutations(mp({0, 1, 2}));
  REQUIRE(plan2.size() == 3);
  CHECK(plan2[0].index == 3);
  CHECK(plan2[1].index == 2);
  CHECK(plan2[2].index == 3);
  CHECK(plan2[0].result == mp({0, 0, 1}));
  CHECK(plan2[1].result == mp({0, 1, 1}));
  CHECK(plan2[2].result == mp({0, 1, 2}));

  CHECK_THROWS_AS(plan_mutations(mp({-1, 0, 0})), DomainError);
}

TEST_CASE("plan_mutations_replay_and_tags") {
  for (int r = 1; r <= 3; ++r)
    for (const auto& target : enumerate_fundamental(r)) {
      auto plan = plan_mutations(target);
      MotzkinPath cur(std::vector<long>(r, 0));
      for (const auto& step : plan) {
        // Recorded tag must match the configuration before the step.
        long left = cur.entry_ext(step.index - 1);
        long mid = cur.entry_ext(step.index);
        long right = cur.entry_ext(step.index + 1);
        CHECK(left == mid);
        if (step.tag == MutationCase::case_i) CHECK(mid == right - 1);
        if (step.tag == MutationCase::case_ii) CHECK(mid == right);
        cur = mutate_path(cur, step.index, +1);
        CHECK(cur == step.result);
      }
      CHECK(cur == target);
    }
}

TEST_CASE("enumerate_fundamental_sizes") {
  CHECK(enumerate_fundamental(1).size() == 1);
  CHECK(enumerate_fundamental(2).size() == 3);
  auto m3 = enumerate_fundamental(3);
  CHECK(m3.size() == 9);
  std::vector<MotzkinPath> expect = {
      mp({0, 0, 0}), mp({0, 0, 1}), mp({0, 1, 0}), mp({0, 1, 1}),
      mp({0, 1, 2}), mp({1, 0, 0}), mp({1, 0, 1}), mp({1, 1, 0}),
      mp({2, 1, 0})};
  std::sort(expect.begin(), expect.end());
  CHECK(m3 == expect);
  for (const auto& m : m3) {
    CHECK(m.is_valid());
    CHECK(m.min_entry() == 0);
  }
}

TEST_CASE("quiver_arrow_dump") {
  auto b = build_exchange_matrix(mp({0}));
  auto arrows = quiver_arrows(b, seed_labels(mp({0})));
  REQUIRE(arrows.size() == 1);
  CHECK(arrows[0].from == GenLabel{1, 1});
  CHECK(arrows[0].to == GenLabel{1, 0});
  CHECK(arrows[0].mult == 2);
}
