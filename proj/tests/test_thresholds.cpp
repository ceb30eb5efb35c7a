#include "doctest.h"
#include "treepack/errors.hpp"
#include "treepack/reduction.hpp"
#include "treepack/thresholds.hpp"

using namespace treepack;

TEST_CASE("bound symbols validate the parameter window") {
  auto b = make_bound_symbols(4, 3);
  CHECK(b.m == 4);
  CHECK(b.k == 3);
  CHECK(b.h == Rational(22));
  CHECK_THROWS_AS(make_bound_symbols(6, 3), input_error);
  CHECK_THROWS_AS(make_bound_symbols(3, 3), input_error);
}

TEST_CASE("rational arithmetic is exact and normalized") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(7, 2) - Rational(3)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(2, 3) / Rational(4, 3)) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(29, 2).str() == "29/2");
  CHECK(Rational(10).str() == "10");
  CHECK_THROWS_AS(Rational(1, 0), input_error);
  CHECK_THROWS_AS(Rational(1, 2) / Rational(0), input_error);
  CHECK_THROWS_AS(Rational(1LL << 62, 1) * Rational(1LL << 62, 1),
                  std::overflow_error);
}

TEST_CASE("f_threshold reproduces the pinned values") {
  CHECK(f_threshold(3, 2) == Rational(10));
  CHECK(f_threshold(4, 3) == Rational(22));
  CHECK(f_threshold(5, 3) == Rational(29, 2));
  CHECK_THROWS_AS(f_threshold(3, 1), input_error);
  CHECK_THROWS_AS(f_threshold(2, 2), input_error);  // m < k+1
  CHECK_THROWS_AS(f_threshold(4, 2), input_error);  // m > 2k-1
}

TEST_CASE("laili_threshold reproduces the pinned values") {
  CHECK(laili_threshold(3, 2) == Rational(7));
  CHECK(laili_threshold(4, 3) == Rational(14));
  CHECK(laili_threshold(5, 3) == Rational(21, 2));
  CHECK_THROWS_AS(laili_threshold(2, 2), input_error);
}

TEST_CASE("branch boundary: both expressions coincide where the test flips") {
  // 8k+1 is an odd square with integral split point at k=6 (m=8) and
  // k=15 (m=18).
  for (auto [m, k] : {std::pair{8, 6}, std::pair{18, 15}}) {
    long long lhs = 4LL * (m - k) - 1;
    CHECK(lhs * lhs == 8LL * k + 1);
    Rational low = Rational(2LL * m + k - 4) +
                   Rational(1LL * k * (2 * k - 1), 2LL * m - 2 * k - 1);
    Rational high =
        Rational(1LL * m + 3 * k - 4) + Rational(1LL * k * k, 1LL * m - k);
    CHECK(low == high);
    CHECK(f_threshold(m, k) == low);
  }
}

TEST_CASE("bounds_report rows and flags") {
  auto k2 = bounds_report(2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].m == 3);
  CHECK(k2[0].f == Rational(10));
  CHECK(k2[0].laili == Rational(7));
  CHECK(k2[0].below_twice);

  auto k3 = bounds_report(3);
  REQUIRE(k3.size() == 2);
  CHECK(k3[0].f == Rational(22));
  CHECK(k3[0].laili == Rational(14));
  CHECK(k3[1].f == Rational(29, 2));
  CHECK(k3[1].laili == Rational(21, 2));

  for (int k = 2; k <= 50; ++k) {
    for (const auto& row : bounds_report(k)) {
      CHECK(row.dominates);
      CHECK(row.below_twice);
      CHECK(row.f >= Rational(6LL * k - 4));
    }
  }
}
