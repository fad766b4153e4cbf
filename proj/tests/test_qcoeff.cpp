#include "doctest.h"
#include "qq/qlaurent.hpp"

#include <random>

using namespace qq;

namespace {

QLaurent ql(std::initializer_list<std::pair<long, long>> terms) {
  QLaurent r;
  for (auto [e, c] : terms) r.add_term(e, mpz_class(c));
  return r;
}

QLaurent random_qlaurent(std::mt19937& rng, bool nonzero) {
  std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, 4);
  std::uniform_int_distribution<long> exp(-6, 6);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (;;) {
    QLaurent r;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) r.add_term(exp(rng), mpz_class(coeff(rng)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

mpz_class classical_multinomial(const std::vector<long>& parts) {
  long n = 0;
  for (long a : parts) n += a;
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n));
  for (long a : parts) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(a));
    num /= f;
  }
  return num;
}

}  // namespace

TEST_CASE("qmultinomial_small_values") {
  CHECK(qmultinomial({1, 1}) == ql({{0, 1}, {1, 1}}));
  CHECK(qmultinomial({1, 1, 1}) == ql({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
  CHECK(qmultinomial({0}) == QLaurent(1));
  CHECK(qmultinomial({2, 1}) == ql({{0, 1}, {1, 1}, {2, 1}}));
  // Symmetry of the binomial.
  CHECK(qmultinomial({3, 2}) == qmultinomial({2, 3}));
}

TEST_CASE("qmultinomial_negative_convention") {
  // Top -1, bottom 0 is defined to be 1; anything else negative is an error.
  CHECK(qmultinomial({-1, 0}) == QLaurent(1));
  CHECK(qmultinomial({0, -1}) == QLaurent(1));
  CHECK_THROWS_AS(qmultinomial({-1}), DomainError);
  CHECK_THROWS_AS(qmultinomial({-2, 1}), DomainError);
  CHECK_THROWS_AS(qmultinomial({2, -1}), DomainError);
  CHECK_THROWS_AS(qmultinomial({-1, 0, 0}), DomainError);
}

TEST_CASE("qmultinomial_variable_designator") {
  // var_exp = k computes the same coefficient in the variable q^k.
  CHECK(qmultinomial({1, 1}, 3) == ql({{0, 1}, {3, 1}}));
  for (long k = 1; k <= 4; ++k)
    CHECK(qmultinomial({2, 2, 1}, k) == qmultinomial({2, 2, 1}).inflated(k));
}

TEST_CASE("ql_exact_div_examples") {
  QLaurent n = ql({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(ql_exact_div(n, ql({{0, 1}, {1, 1}})) == ql({{0, 1}, {2, 1}}));
  // Laurent quotients are allowed.
  CHECK(ql_exact_div(ql({{0, 1}, {1, 1}}), ql({{1, 1}})) == ql({{-1, 1}, {0, 1}}));
  CHECK_THROWS_AS(ql_exact_div(ql({{0, 1}, {1, 1}, {2, 1}}), ql({{0, 1}, {1, 1}})),
                  NotDivisibleError);
  CHECK_THROWS_AS(ql_exact_div(QLaurent(1), QLaurent()), DomainError);
  CHECK(ql_exact_div(QLaurent(), ql({{0, 1}, {1, 1}})).is_zero());
}

TEST_CASE("ql_exact_div_round_trip_random") {
  std::mt19937 rng(20240801);
  for (int it = 0; it < 200; ++it) {
    QLaurent a = random_qlaurent(rng, false);
    QLaurent b = random_qlaurent(rng, true);
    CHECK(ql_exact_div(a * b, b) == a);
  }
}

TEST_CASE("qmultinomial_matches_classical_at_q1") {
  std::mt19937 rng(20240802);
  std::uniform_int_distribution<int> nparts(1, 4);
  std::uniform_int_distribution<long> part(0, 6);
  for (int it = 0; it < 150; ++it) {
    std::vector<long> parts;
    int k = nparts(rng);
    for (int i = 0; i < k; ++i) parts.push_back(part(rng));
    CHECK(eval_q1(qmultinomial(parts)) == classical_multinomial(parts));
  }
}

TEST_CASE("qmultinomial_pascal_recurrence") {
  // [n; k] = [n-1; k] + q^{n-k} [n-1; k-1], a standard cross-check of the
  // product-formula implementation.
  for (long n = 1; n <= 8; ++n)
    for (long k = 1; k < n; ++k) {
      QLaurent lhs = qmultinomial({k, n - k});
      QLaurent rhs = qmultinomial({k, n - 1 - k}) +
                     qmultinomial({k - 1, n - k}).shifted(n - k);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("phi_series_coefficients_are_binomials") {
  // The coefficient of z^m in prod_{i=0}^{l-1} (1 - q^i z)^{-1} is
  // [l + m - 1; m]. Expand the product of geometric series directly.
  const int M = 6;
  for (long l = 0; l <= 6; ++l) {
    std::vector<QLaurent> c(M + 1);
    c[0] = QLaurent(1);
    for (long i = 0; i < l; ++i) {
      // Multiply by sum_k q^{ik} z^k, truncated at z^M.
      std::vector<QLaurent> nc(M + 1);
      for (int m = 0; m <= M; ++m)
        for (int k = 0; k <= m; ++k)
          nc[m] += c[m - k].shifted(i * k);
      c = std::move(nc);
    }
    for (int m = 0; m <= M; ++m) {
      QLaurent expect;
      if (l == 0) {
        expect = (m == 0) ? QLaurent(1) : QLaurent();
      } else {
        expect = qmultinomial({static_cast<long>(m), l - 1});
      }
      CHECK(c[m] == expect);
    }
  }
}

TEST_CASE("eval_q1_is_coefficient_sum") {
  CHECK(eval_q1(ql({{-2, 3}, {0, -1}, {5, 4}})) == 6);
  CHECK(eval_q1(QLaurent()) == 0);
}

TEST_CASE("qlaurent_to_string_deterministic") {
  CHECK(ql({{-1, 1}, {3, 1}}).to_string() == "q^-1 + q^3");
  CHECK(ql({{0, -2}, {1, 1}}).to_string() == "-2 + q");
  CHECK(QLaurent().to_string() == "0");
}
