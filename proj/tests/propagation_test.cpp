#include "mlpl/propagation.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mlpl/traces.hpp"

namespace mlpl {
namespace {

std::shared_ptr<const PathLossModel> constant_model(double value) {
  std::vector<PathLossSample> s{{1, value}, {5, value}, {9, value}};
  return std::make_shared<const PathLossModel>(train(s));
}

const CdfTable kTriangle({{-5, 0}, {0, 0.5}, {5, 1}});

TEST(TotalLoss, ConstantModelNoFading) {
  PropagationEngine e(MlplVariant{constant_model(50)});
  for (double d : {0.5, 3.0, 100.0}) EXPECT_EQ(e.total_loss(d), 50.0);
  EXPECT_FALSE(e.has_fading());
}

TEST(TotalLoss, FadingStaysInSupport) {
  PropagationEngine e(MlplVariant{constant_model(50)}, kTriangle, make_stream(1, 0));
  for (int i = 0; i < 10000; ++i) {
    const double l = e.total_loss(7.0);
    ASSERT_GE(l, 45.0);
    ASSERT_LE(l, 55.0);
  }
  EXPECT_EQ(e.rng()->draw_count(), 10000u);
}

TEST(TotalLoss, FriisVariant) {
  PropagationEngine e(FriisVariant{5220});
  EXPECT_NEAR(e.total_loss(10), 66.80, 0.01);
}

TEST(TotalLoss, LogDistanceVariant) {
  PropagationEngine e(LogDistanceVariant{{1.0, 40.0, 3.0}});
  EXPECT_NEAR(e.total_loss(100), 100.0, 1e-12);
}

TEST(TotalLoss, RejectsNonPositiveDistance) {
  PropagationEngine e(FriisVariant{5220});
  EXPECT_THROW(e.total_loss(0.0), DomainError);
  PropagationEngine f(MlplVariant{constant_model(50)}, kTriangle, make_stream(1, 0));
  EXPECT_THROW(f.total_loss(-1.0), DomainError);
  EXPECT_EQ(f.rng()->draw_count(), 0u);
}

TEST(TotalLoss, NegativeTotalsPassThrough) {
  PropagationEngine e(MlplVariant{constant_model(1.0)}, kTriangle, make_stream(3, 0));
  double lowest = 1e9;
  for (int i = 0; i < 1000; ++i) lowest = std::min(lowest, e.total_loss(2.0));
  EXPECT_LT(lowest, 0.0);
}

TEST(TotalLoss, SeedDeterminism) {
  PropagationEngine a(MlplVariant{constant_model(50)}, kTriangle, make_stream(5, 2));
  PropagationEngine b(MlplVariant{constant_model(50)}, kTriangle, make_stream(5, 2));
  PropagationEngine c(MlplVariant{constant_model(50)}, kTriangle, make_stream(5, 3));
  int differs = 0;
  for (int i = 0; i < 1000; ++i) {
    const double d = 1.0 + i % 20;
    const double la = a.total_loss(d);
    ASSERT_EQ(la, b.total_loss(d));
    differs += la != c.total_loss(d);
  }
  EXPECT_GT(differs, 990);
}

TEST(RxPower, Examples) {
  const LinkBudget b{7, -7, -7};
  EXPECT_EQ(rx_power(b, 60), -67.0);
  EXPECT_EQ(rx_power(b, 0), -7.0);
}

TEST(RxPower, InvertsRecordToSample) {
  std::mt19937_64 gen(8);
  std::uniform_real_distribution<double> u(-40, 60);
  const RadioConfig cfg{7};
  for (int i = 0; i < 1000; ++i) {
    TraceRecord r;
    r.tx_power = u(gen) / 4;
    r.tx_gain = u(gen) / 10;
    r.rx_gain = u(gen) / 10;
    r.snr = u(gen);
    r.tx_pos = Position(u(gen), u(gen), 0);
    r.rx_pos = Position(u(gen), u(gen), 1);
    r.freq = 5220;
    r.bandwidth = 20;
    const auto s = record_to_sample(r, cfg);
    const double rx = rx_power({r.tx_power, r.tx_gain, r.rx_gain}, s.path_loss);
    EXPECT_NEAR(rx - noise_floor(r.bandwidth, cfg), r.snr, 1e-9);
  }
}

}  // namespace
}  // namespace mlpl
