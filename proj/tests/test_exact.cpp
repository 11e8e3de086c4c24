#include <doctest.h>

#include <set>

#include "dhall/coeff.hpp"
#include "dhall/subspace.hpp"

using namespace dhall;

TEST_CASE("field elements") {
  for (int q : {2, 3, 5}) {
    for (int a = 0; a < q; ++a) {
      FieldElement x(a, q);
      CHECK((x + (-x)).value() == 0);
      if (a) CHECK((x * x.inverse()).value() == 1);
    }
  }
  CHECK_THROWS_AS(FieldElement(0, 3).inverse(), std::domain_error);
  CHECK_THROWS(FieldElement(1, 4));
  CHECK_THROWS(FieldElement(1, 2) + FieldElement(1, 3));
}

TEST_CASE("rank and kernel") {
  auto m = FqMatrix::from_rows({{1, 2, 0}, {2, 4, 0}, {0, 1, 1}}, 3, 5);
  CHECK(rank(m) == 2);
  FqMatrix k = kernel_basis(m);
  CHECK(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK(is_invertible(FqMatrix::identity(3, 3)));
  auto inv = inverse(FqMatrix::from_rows({{1, 1}, {0, 1}}, 2, 3));
  REQUIRE(inv);
  CHECK(*inv == FqMatrix::from_rows({{1, 2}, {0, 1}}, 2, 3));
  CHECK_FALSE(inverse(FqMatrix::from_rows({{1, 1}, {1, 1}}, 2, 2)));
}

TEST_CASE("solve_linear") {
  auto m = FqMatrix::from_rows({{1, 1}}, 2, 2);
  Vec target{1};
  auto sol = solve_linear(m, target);
  REQUIRE(sol);
  CHECK(sol->particular == Vec{1, 0});
  REQUIRE(sol->kernel.cols() == 1);
  CHECK(sol->kernel.column(0) == Vec{1, 1});

  auto inconsistent = FqMatrix::from_rows({{1, 0}, {1, 0}}, 2, 3);
  Vec t2{1, 2};
  CHECK_FALSE(solve_linear(inconsistent, t2));
  Vec bad{1, 2, 3};
  CHECK_THROWS_AS(solve_linear(m, bad), std::invalid_argument);
}

TEST_CASE("subspace enumeration matches Gaussian binomials") {
  CHECK(enumerate_subspaces(2, 1, 2).size() == 3);
  CHECK(enumerate_subspaces(2, 1, 3).size() == 4);
  for (int q : {2, 3, 5})
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= n; ++k) {
        if (q == 5 && n == 4) continue;
        auto subs = enumerate_subspaces(n, k, q);
        CHECK(subs.size() == gaussian_binomial(n, k, q));
        std::set<Subspace> distinct(subs.begin(), subs.end());
        CHECK(distinct.size() == subs.size());
        for (const auto& s : subs) CHECK(Subspace::span_rows(s.basis()) == s);
      }
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(3, 1, 5) == 31);
  CHECK_THROWS_AS(enumerate_subspaces(12, 6, 2, 1000), BudgetExceeded);
}

TEST_CASE("subspace reduction and coordinates") {
  auto s = Subspace::span_rows(FqMatrix::from_rows({{1, 1, 0}}, 3, 2));
  Vec in{1, 1, 0}, out{1, 0, 0};
  CHECK(s.contains(in));
  CHECK_FALSE(s.contains(out));
  CHECK(s.coordinates(in) == Vec{1});
  CHECK(s.free_coordinates() == std::vector<int>{1, 2});
}

TEST_CASE("coefficients in Q(t), t^2 = q") {
  for (int q : {2, 3, 5}) {
    Coeff t = Coeff::t_pow(1, q);
    CHECK(t * t == Coeff(q));
    CHECK(t.inverse() == Coeff(0, mpq_class(1, q), q));
    CHECK(Coeff::t_pow(-3, q) * Coeff::t_pow(3, q) == Coeff(1));
    CHECK(Coeff::t_pow(4, q) == Coeff(q * q));
    Coeff x(mpq_class(2, 3), mpq_class(-1, 7), q);
    CHECK(x * x.inverse() == Coeff(1));
    CHECK((x - x).is_zero());
  }
  CHECK(Coeff(mpq_class(1, 2), 1, 2).to_string() == "1/2 + t");
  CHECK_THROWS(Coeff::t_pow(1, 2) + Coeff::t_pow(1, 3));
  CHECK_THROWS_AS(Coeff(0).inverse(), std::domain_error);
}
