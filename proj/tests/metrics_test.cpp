#include "mlpl/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mlpl/error.hpp"

namespace mlpl {
namespace {

TEST(Percentile, Examples) {
  const std::vector<double> v{4, 1, 3, 2};
  EXPECT_DOUBLE_EQ(percentile(v, 0.5), 2.5);
  EXPECT_DOUBLE_EQ(percentile(v, 0.25), 1.75);
  EXPECT_DOUBLE_EQ(percentile(v, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(percentile(v, 1.0), 4.0);
  const std::vector<double> one{7.5};
  for (double q : {0.0, 0.3, 1.0}) EXPECT_EQ(percentile(one, q), 7.5);
  EXPECT_THROW(percentile(std::vector<double>{}, 0.5), ValidationError);
  EXPECT_THROW(percentile(v, 1.5), DomainError);
}

// Rank-based oracle without sorting: the order statistic of rank r is the
// value x with #(v < x) <= r < #(v <= x).
double order_stat(const std::vector<double>& v, std::size_t r) {
  for (double x : v) {
    std::size_t lt = 0, le = 0;
    for (double y : v) {
      lt += y < x;
      le += y <= x;
    }
    if (lt <= r && r < le) return x;
  }
  return 0.0;
}

double oracle_percentile(const std::vector<double>& v, double q) {
  const double h = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const double a = order_stat(v, lo);
  const double b = order_stat(v, std::min(lo + 1, v.size() - 1));
  return a + (h - static_cast<double>(lo)) * (b - a);
}

TEST(Percentile, MatchesOracle) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 40);
    std::vector<double> v(n);
    for (auto& x : v) x = std::round(std::uniform_real_distribution<double>(-50, 50)(gen));
    const double q = std::uniform_real_distribution<double>(0, 1)(gen);
    ASSERT_NEAR(percentile(v, q), oracle_percentile(v, q), 1e-9);
  }
}

TEST(Curve, Examples) {
  std::vector<PathLossSample> s{{3.1, 1}, {3.2, 2}, {3.5, 3}, {3.9, 4}};
  const auto c = percentile_curve(s);
  ASSERT_EQ(c.bins.size(), 1u);
  EXPECT_EQ(c.bins[0].centre, 3.5);
  EXPECT_DOUBLE_EQ(c.bins[0].p25, 1.75);
  EXPECT_DOUBLE_EQ(c.bins[0].p50, 2.5);
  EXPECT_DOUBLE_EQ(c.bins[0].p75, 3.25);
  EXPECT_EQ(c.bins[0].count, 4u);

  std::vector<PathLossSample> spread{{1.5, 10}, {4.5, 20}, {9.2, 30}};
  const auto c2 = percentile_curve(spread);
  ASSERT_EQ(c2.bins.size(), 3u);
  for (const auto& b : c2.bins) {
    EXPECT_EQ(b.p25, b.p50);
    EXPECT_EQ(b.p50, b.p75);
  }
  EXPECT_EQ(serialize_curve(c), "bin_m,p25,p50,p75,count\n3.5,1.75,2.5,3.25,4\n");
  EXPECT_THROW(percentile_curve(s, 0.0), DomainError);
}

TEST(Diff, IdenticalAndOffset) {
  std::mt19937_64 gen(5);
  std::vector<PathLossSample> real, shifted;
  for (int i = 0; i < 500; ++i) {
    const double d = std::uniform_real_distribution<double>(1, 20)(gen);
    const double l = std::uniform_real_distribution<double>(40, 80)(gen);
    real.push_back({d, l});
    shifted.push_back({d, l + 3});
  }
  const auto cr = percentile_curve(real);
  const auto same = percentile_diff(cr, cr);
  EXPECT_TRUE(same.warning.empty());
  for (const auto& r : same.rows) {
    EXPECT_EQ(r.d25, 0.0);
    EXPECT_EQ(r.d50, 0.0);
    EXPECT_EQ(r.d75, 0.0);
  }
  const auto off = percentile_diff(percentile_curve(shifted), cr);
  EXPECT_EQ(off.rows.size(), cr.bins.size());
  for (const auto& r : off.rows) {
    EXPECT_NEAR(r.d25, 3.0, 1e-9);
    EXPECT_NEAR(r.d50, 3.0, 1e-9);
    EXPECT_NEAR(r.d75, 3.0, 1e-9);
  }
}

TEST(Diff, DisjointBinsWarn) {
  std::vector<PathLossSample> a{{1.5, 1}}, b{{7.5, 1}};
  const auto d = percentile_diff(percentile_curve(a), percentile_curve(b));
  EXPECT_TRUE(d.rows.empty());
  EXPECT_FALSE(d.warning.empty());
}

TEST(Box, Examples) {
  const std::vector<double> v{1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto b = box_stats(v);
  EXPECT_EQ(b.q1, 3.0);
  EXPECT_EQ(b.median, 5.0);
  EXPECT_EQ(b.q3, 7.0);
  EXPECT_TRUE(b.outliers.empty());
  EXPECT_EQ(b.whisker_low, 1.0);
  EXPECT_EQ(b.whisker_high, 9.0);

  auto w = v;
  w.push_back(100);
  const auto bo = box_stats(w);
  ASSERT_EQ(bo.outliers, std::vector<double>{100});
  EXPECT_GT(100.0, bo.fence_high());
  EXPECT_EQ(bo.whisker_high, 9.0);

  const auto flat = box_stats(std::vector<double>{2, 2, 2, 2, 2});
  EXPECT_EQ(flat.iqr(), 0.0);
  EXPECT_TRUE(flat.outliers.empty());
  EXPECT_EQ(flat.whisker_low, 2.0);
  EXPECT_EQ(flat.whisker_high, 2.0);

  EXPECT_THROW(box_stats(std::vector<double>{1, 2, 3}), ValidationError);
  EXPECT_EQ(serialize_box_stats(bo).find("100") != std::string::npos, true);
}

TEST(Box, PartitionMatchesBruteForce) {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 4 + static_cast<int>(gen() % 30);
    std::vector<double> v(n);
    for (auto& x : v) {
      x = std::normal_distribution<double>(0, 5)(gen);
      if (gen() % 10 == 0) x *= 8;
    }
    const auto b = box_stats(v);
    const double q1 = oracle_percentile(v, 0.25), q3 = oracle_percentile(v, 0.75);
    ASSERT_NEAR(b.q1, q1, 1e-9);
    ASSERT_NEAR(b.q3, q3, 1e-9);
    const double lo = q1 - 1.5 * (q3 - q1), hi = q3 + 1.5 * (q3 - q1);
    std::vector<double> out, in;
    for (double x : v) (x < lo || x > hi ? out : in).push_back(x);
    std::sort(out.begin(), out.end());
    ASSERT_EQ(b.outliers, out);
    ASSERT_EQ(b.whisker_low, *std::min_element(in.begin(), in.end()));
    ASSERT_EQ(b.whisker_high, *std::max_element(in.begin(), in.end()));
    ASSERT_EQ(out.size() + in.size(), v.size());
  }
}

bool contains(const std::vector<PathLossSample>& v, double d) {
  return std::any_of(v.begin(), v.end(), [d](const auto& s) { return s.distance == d; });
}

TEST(Split, Examples) {
  std::vector<PathLossSample> s{{2, 1}, {7, 1}, {9.99, 1}, {10, 1}, {12, 1}, {17, 1}, {22, 1}};
  const auto ex = make_split(s, Scenario::Extrapolation);
  EXPECT_TRUE(contains(ex.train, 9.99));
  EXPECT_TRUE(contains(ex.test, 10));
  const auto in = make_split(s, Scenario::Interpolation);
  EXPECT_TRUE(contains(in.test, 7));
  EXPECT_TRUE(contains(in.train, 12));
  EXPECT_TRUE(contains(in.train, 10));
  EXPECT_TRUE(contains(in.test, 17));
  EXPECT_TRUE(contains(in.train, 22));
  const auto full = make_split(s, Scenario::FullSet);
  EXPECT_EQ(full.train.size(), s.size());
  std::vector<PathLossSample> held{{3, 2}};
  EXPECT_EQ(make_split(s, Scenario::FullSet, held).test.size(), 1u);
}

TEST(Split, BoundaryConvention) {
  EXPECT_FALSE(in_interpolation_train(5));
  EXPECT_TRUE(in_interpolation_train(4.999));
  EXPECT_TRUE(in_interpolation_train(10));
  EXPECT_TRUE(in_interpolation_train(15));
  EXPECT_FALSE(in_interpolation_train(15.001));
  EXPECT_FALSE(in_interpolation_train(20));
  EXPECT_TRUE(in_interpolation_train(20.001));
}

TEST(Split, PartitionProperty) {
  std::mt19937_64 gen(4);
  std::vector<PathLossSample> s;
  for (int i = 0; i < 2000; ++i) {
    s.push_back({std::uniform_real_distribution<double>(1, 25)(gen), static_cast<double>(i)});
  }
  for (auto sc : {Scenario::Extrapolation, Scenario::Interpolation}) {
    const auto sp = make_split(s, sc);
    EXPECT_EQ(sp.train.size() + sp.test.size(), s.size());
    std::vector<double> ids;
    for (const auto& x : sp.train) ids.push_back(x.path_loss);
    for (const auto& x : sp.test) ids.push_back(x.path_loss);
    std::sort(ids.begin(), ids.end());
    EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  }
}

TEST(Split, EmptyPartitionNamesScenario) {
  std::vector<PathLossSample> near{{2, 1}, {3, 1}};
  try {
    make_split(near, Scenario::Extrapolation);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Extrapolation"), std::string::npos);
  }
  EXPECT_THROW(make_split(std::vector<PathLossSample>{}, Scenario::FullSet), ValidationError);
}

TEST(Scenarios, Names) {
  EXPECT_EQ(scenario_from_name("extrapolation"), Scenario::Extrapolation);
  EXPECT_EQ(scenario_from_name("Interpolation"), Scenario::Interpolation);
  EXPECT_EQ(scenario_from_name("full-set"), Scenario::FullSet);
  EXPECT_THROW(scenario_from_name("nope"), Error);
}

TEST(Rmse, Basic) {
  EXPECT_DOUBLE_EQ(rmse(std::vector<double>{1, 2}, std::vector<double>{1, 4}), std::sqrt(2.0));
}

}  // namespace
}  // namespace mlpl
