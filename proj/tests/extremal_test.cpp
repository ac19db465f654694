#include <gtest/gtest.h>

#include "pfactor/extremal.hpp"
#include "pfactor/factors.hpp"

using namespace pfactor;

namespace {

// Edge count of K_s v (K_q u pK_1) from its parts.
std::int64_t counted_by_parts(std::int64_t n, std::int64_t s) {
  const std::int64_t q = n - (5 * s) / 3 - 1;
  const std::int64_t p = (2 * s) / 3 + 1;
  return s * (s - 1) / 2 + q * (q - 1) / 2 + s * (q + p);
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Extremal, Construction) {
  const Graph g = build_extremal(7, 1);
  EXPECT_EQ(g.order(), 7U);
  EXPECT_EQ(g.size(), 16U);
  EXPECT_EQ(min_degree(g), 1U);
  EXPECT_EQ(build_extremal(7, 2).size(), 14U);
  EXPECT_EQ(build_extremal(7, 2), join(complete(2), disjoint_union(complete(3), empty_graph(2))));

  const auto par = ExtremalParams::make(30, 7);
  EXPECT_EQ(par.q, 30 - 11 - 1);
  EXPECT_EQ(par.p, 5);
  EXPECT_EQ(par.s + par.q + par.p, 30);
  const Graph big = build_extremal(30, 7);
  for (Vertex v = static_cast<Vertex>(par.s + par.q); v < 30; ++v) EXPECT_EQ(big.neighbors(v), par.join_clique().members());
}

TEST(Extremal, MinimumDegreeAndConnectivity) {
  for (std::int64_t s = 1; s <= 12; ++s) {
    for (std::int64_t n = (5 * s) / 3 + 2; n <= (5 * s) / 3 + 20; ++n) {
      const Graph g = build_extremal(n, s);
      ASSERT_EQ(min_degree(g), static_cast<std::size_t>(s));
      ASSERT_TRUE(is_connected(g));
    }
  }
}

TEST(Extremal, InvalidParams) {
  EXPECT_EQ(code_of([] { build_extremal(6, 0); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { build_extremal(2, 1); }), ErrorCode::InvalidParams);
  EXPECT_EQ(code_of([] { edge_count_closed_form(4, 2); }), ErrorCode::InvalidParams);
}

TEST(ClosedForm, KnownValues) {
  EXPECT_EQ(edge_count_closed_form(25, 1), 277);
  EXPECT_EQ(edge_count_closed_form(25, 2), 257);
  EXPECT_EQ(edge_count_closed_form(25, 2), 1 + 21 * 20 / 2 + 2 * 23);
  EXPECT_EQ(edge_count_closed_form(7, 1), 16);
}

TEST(ClosedForm, MatchesDirectCount) {
  for (std::int64_t s = 1; s <= 12; ++s) {
    for (std::int64_t n = (5 * s) / 3 + 2; n <= (5 * s) / 3 + 61; ++n) {
      const auto m = static_cast<std::int64_t>(build_extremal(n, s).size());
      ASSERT_EQ(edge_count_closed_form(n, s), m) << n << "," << s;
      ASSERT_EQ(counted_by_parts(n, s), m);
    }
  }
}

TEST(ClosedForm, RhoAgreesWithPowerIteration) {
  for (std::int64_t s : {1, 2, 4, 5, 7}) {
    for (std::int64_t n = (5 * s) / 3 + 2; n <= (5 * s) / 3 + 40; n += 7) {
      const double via_quotient = rho_closed_form(n, s);
      ASSERT_NEAR(via_quotient, spectral_radius(build_extremal(n, s)).rho, 1e-8);
    }
  }
  EXPECT_GT(rho_closed_form(25, 1), 23.0);
  EXPECT_GT(rho_closed_form(25, 2), 22.0);
}

TEST(OrderBounds, Values) {
  EXPECT_EQ(n_min_size(1), 25);
  EXPECT_EQ(n_min_size(2), 31);
  EXPECT_EQ(n_min_size(4), 45);
  EXPECT_EQ(n_min_spectral(1), 26);
  EXPECT_EQ(n_min_spectral(2), 32);
  EXPECT_EQ(n_min_spectral(7), 80);
  EXPECT_EQ(code_of([] { n_min_size(3); }), ErrorCode::DeltaDivisibleBy3);
  EXPECT_EQ(code_of([] { n_min_spectral(6); }), ErrorCode::DeltaDivisibleBy3);
  EXPECT_EQ(code_of([] { n_min_size(0); }), ErrorCode::InvalidParams);
}

TEST(OrderBounds, AreSmallestIntegersAboveTheRationalBounds) {
  for (std::int64_t d = 1; d <= 40; ++d) {
    if (d % 3 == 0) continue;
    const std::int64_t a = n_min_size(d);
    EXPECT_TRUE(3 * a >= 20 * d + 53 && 3 * (a - 1) < 20 * d + 53);
    const std::int64_t b = n_min_spectral(d);
    const bool ok_b = 6 * b >= 6 * d * d + 22 * d + 31 && 3 * b >= 20 * d + 56;
    const bool ok_b1 = 6 * (b - 1) >= 6 * d * d + 22 * d + 31 && 3 * (b - 1) >= 20 * d + 56;
    EXPECT_TRUE(ok_b && !ok_b1) << d;
  }
}

TEST(Thresholds, Values) {
  const auto t = thresholds(25, 1);
  EXPECT_EQ(t.size_threshold, 277);
  EXPECT_EQ(t.q, 23);
  EXPECT_EQ(t.p, 1);
  EXPECT_TRUE(t.size_condition_in_range);
  EXPECT_FALSE(t.spectral_condition_in_range);
  EXPECT_NEAR(t.rho_threshold, spectral_radius(build_extremal(25, 1)).rho, 1e-8);

  const auto t2 = thresholds(31, 2);
  EXPECT_EQ(t2.size_threshold, static_cast<std::int64_t>(build_extremal(31, 2).size()));

  try {
    thresholds(24, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderTooSmall);
    EXPECT_NE(std::string(e.what()).find("25"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("26"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { thresholds(40, 3); }), ErrorCode::DeltaDivisibleBy3);
}

TEST(Thresholds, JoinCliqueIsAWitness) {
  for (std::int64_t d = 1; d <= 12; ++d) {
    const std::int64_t n = (5 * d) / 3 + 5;
    const auto par = ExtremalParams::make(n, d);
    const auto i = isolated_count(build_extremal(n, d), par.join_clique());
    EXPECT_EQ(static_cast<std::int64_t>(i), par.p);
    EXPECT_GT(3 * par.p, 2 * d);
  }
}
