#include <cmath>
#include <map>

#include "doctest.h"
#include "oyleaf/counting.hpp"
#include "oyleaf/stats.hpp"
#include "oyleaf/tree.hpp"

using namespace oyleaf;

TEST_CASE("binomial, catalan, motzkin, narayana basics") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  CHECK(motzkin(0) == 1);
  CHECK(motzkin(2) == 2);
  CHECK(motzkin(5) == 21);
  CHECK(narayana(4, 2) == 6);
  CHECK(narayana(4, 1) == 1);
  CHECK_THROWS_AS(narayana(4, 0), domain_error);
  CHECK_THROWS_AS(narayana(4, 5), domain_error);
}

TEST_CASE("narayana counts trees by leaf number") {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::map<std::size_t, long> by_leaves;
    for_each_tree(n, [&](const std::string& s) {
      ++by_leaves[tree_stats(parse_tree(s)).leaves];
    });
    for (std::size_t k = 1; k <= n; ++k)
      CHECK(narayana(n, k) == BigInt(by_leaves.count(k) ? by_leaves[k] : 0));
  }
}

TEST_CASE("count_old_young small values and enumeration oracle") {
  CHECK(count_old_young(2, 1, 0) == 1);
  CHECK(count_old_young(4, 2, 1) == 3);
  CHECK(count_old_young(1, 1, 0) == 1);
  CHECK(count_old_young(3, 1, 1) == 2);
  for (std::size_t n = 1; n <= 9; ++n) {
    std::map<std::pair<long, long>, long> hist;
    for_each_tree(n, [&](const std::string& s) {
      TreeStats st = tree_stats(parse_tree(s));
      ++hist[{static_cast<long>(st.old_leaves),
              static_cast<long>(st.young_leaves)}];
    });
    for (long i = 0; i <= static_cast<long>(n); ++i)
      for (long j = 0; j <= static_cast<long>(n); ++j) {
        long seen = hist.count({i, j}) ? hist[{i, j}] : 0;
        CHECK(count_old_young(n, i, j) == BigInt(seen));
      }
  }
}

TEST_CASE("count_old and count_young marginals") {
  for (std::size_t n = 2; n <= 12; ++n) {
    BigInt pow2 = 1;
    for (std::size_t b = 1; b < n; ++b) pow2 *= 2;
    CHECK(count_old(n, 1) == pow2);  // 2^{n-1}
    CHECK(count_young(n, 0) == motzkin(n - 1));
  }
  // marginals are the row/column sums of the joint distribution
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
      BigInt row = 0;
      for (long j = 0; j <= static_cast<long>(n); ++j)
        row += count_old_young(n, static_cast<long>(k), j);
      CHECK(count_old(n, k) == row);
    }
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t k = 0; k < n; ++k) {
      BigInt col = 0;
      for (long i = 0; i <= static_cast<long>(n); ++i)
        col += count_old_young(n, i, static_cast<long>(k));
      CHECK(count_young(n, k) == col);
    }
}

TEST_CASE("joint distribution sums to Catalan up to n = 30") {
  for (std::size_t n = 1; n <= 30; ++n) {
    BigInt total = 0;
    for (long i = 0; i <= static_cast<long>(n); ++i)
      for (long j = 0; j <= static_cast<long>(n); ++j)
        total += count_old_young(n, i, j);
    CHECK(total == catalan(n));
  }
}

TEST_CASE("gf_series low-order coefficients") {
  auto coeffs = gf_series(4);
  MultiPoly t = MultiPoly::var(Var::t), s = MultiPoly::var(Var::s);
  CHECK(coeffs[0] == MultiPoly::one());
  CHECK(coeffs[1] == t);
  CHECK(coeffs[2] == t + t * s);
  CHECK(coeffs[3] ==
        t + MultiPoly::constant(2) * t * s + t * t + t * s * s);
}

TEST_CASE("gf_series coefficients match the weighted tree enumeration") {
  auto coeffs = gf_series(9);
  MultiPoly t = MultiPoly::var(Var::t), s = MultiPoly::var(Var::s);
  for (std::size_t n = 1; n <= 9; ++n) {
    MultiPoly sum;
    for_each_tree(n, [&](const std::string& enc) {
      TreeStats st = tree_stats(parse_tree(enc));
      sum += t.pow(st.old_leaves) * s.pow(st.young_leaves);
    });
    CHECK(coeffs[n] == sum);
  }
}

TEST_CASE("gf_closed_eval matches series truncation at safe points") {
  auto coeffs = gf_series(30);
  auto eval = [](const MultiPoly& p, double t, double s) {
    double acc = 0;
    for (const auto& [m, c] : p.terms())
      acc += c.get_d() * std::pow(t, m[static_cast<std::size_t>(Var::t)]) *
             std::pow(s, m[static_cast<std::size_t>(Var::s)]);
    return acc;
  };
  auto truncated = [&](double t, double s, double z) {
    double acc = 0, zp = 1;
    for (std::size_t n = 0; n < coeffs.size(); ++n, zp *= z)
      acc += eval(coeffs[n], t, s) * zp;
    return acc;
  };
  CHECK(gf_closed_eval(1, 1, 0) == doctest::Approx(1.0));
  CHECK(std::abs(gf_closed_eval(1, 1, 0.05) - truncated(1, 1, 0.05)) < 1e-12);
  CHECK(std::abs(gf_closed_eval(2, 1, 0.02) - truncated(2, 1, 0.02)) < 1e-12);
  // at t=1, s=1 the series counts all plane trees: G = (1-sqrt(1-4z))/(2z)
  double z = 0.06;
  CHECK(gf_closed_eval(1, 1, z) ==
        doctest::Approx((1 - std::sqrt(1 - 4 * z)) / (2 * z)));
  // for t=2, s=3 the radicand 1 - 8z + 8z^2 is negative at z = 0.5
  CHECK_THROWS_AS(gf_closed_eval(2, 3, 0.5), domain_error);
}
