#include <gtest/gtest.h>

#include "mlpl/fading.hpp"
#include "mlpl/synth.hpp"

namespace mlpl {
namespace {

class SelectionTest : public ::testing::TestWithParam<DistParams> {};

// 10 seeded repetitions of 1e5 draws; the generating family must win in at
// least 9.
TEST_P(SelectionTest, PicksGeneratingFamily) {
  const DistParams gen = GetParam();
  int hits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto rng = make_stream(1000 + seed, 0);
    std::vector<double> v(100000);
    for (auto& x : v) x = draw(gen, rng);
    hits += select_fading(v).family() == gen.family;
  }
  EXPECT_GE(hits, 9) << family_name(gen.family);
}

INSTANTIATE_TEST_SUITE_P(
    AllFamilies, SelectionTest,
    ::testing::Values(DistParams{Family::Normal, 0, 0, 4}, DistParams{Family::Normal, 0, 2, 1},
                      DistParams{Family::Normal, 0, -1, 8}, DistParams{Family::Rayleigh, 0, 0, 3},
                      DistParams{Family::Rayleigh, 0, -3, 2},
                      DistParams{Family::Rayleigh, 0, -5, 6},
                      DistParams{Family::Rician, 2, 0, 1.5}, DistParams{Family::Rician, 1.5, -2, 2},
                      DistParams{Family::Rician, 1, 0, 1}));

}  // namespace
}  // namespace mlpl
