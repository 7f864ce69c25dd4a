#include "mlpl/baselines.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mlpl/error.hpp"

namespace mlpl {
namespace {

TEST(Friis, ReferenceValues) {
  // 20*log10(4*pi*d*f/c) evaluated independently: 66.80119328192862 at 10 m.
  EXPECT_NEAR(friis_loss(10, 5220), 66.80119328192862, 1e-9);
  EXPECT_NEAR(friis_loss(1, 5220), 46.80119328192862, 1e-9);
  EXPECT_NEAR(friis_loss(10, 5220), 66.80, 0.01);
}

TEST(Friis, DoublingAddsSixDb) {
  for (double d = 0.5; d < 100; d *= 1.7) {
    EXPECT_NEAR(friis_loss(2 * d, 5220) - friis_loss(d, 5220), 20 * std::log10(2.0), 1e-12);
  }
}

TEST(Friis, RejectsNonPositiveDistance) {
  EXPECT_THROW(friis_loss(0, 5220), DomainError);
  EXPECT_THROW(friis_loss(-1, 5220), DomainError);
}

TEST(LogDistance, Examples) {
  const LogDistanceParams p{1.0, 46.80, 2.0};
  EXPECT_EQ(log_distance_loss(1.0, p), 46.80);
  EXPECT_NEAR(log_distance_loss(10.0, p), 66.80, 1e-12);
  EXPECT_NEAR(log_distance_loss(100.0, {1.0, 40.0, 3.0}), 100.0, 1e-12);
  EXPECT_THROW(log_distance_loss(0.0, p), DomainError);
}

TEST(LogDistance, MatchesFriisAtExponentTwo) {
  const LogDistanceParams p{1.0, friis_loss(1.0, 5220), 2.0};
  for (double d = 0.01; d < 1000; d *= 1.3) {
    EXPECT_NEAR(friis_loss(d, 5220), log_distance_loss(d, p), 1e-9);
  }
}

TEST(Baselines, DeterministicAndMonotone) {
  const auto p = default_log_distance(5220);
  double prev_f = -1e9, prev_l = -1e9;
  for (double d = 0.1; d < 500; d *= 1.1) {
    EXPECT_EQ(friis_loss(d, 5220), friis_loss(d, 5220));
    EXPECT_GT(friis_loss(d, 5220), prev_f);
    EXPECT_GT(log_distance_loss(d, p), prev_l);
    prev_f = friis_loss(d, 5220);
    prev_l = log_distance_loss(d, p);
  }
}

}  // namespace
}  // namespace mlpl
