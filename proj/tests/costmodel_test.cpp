// Copyright 2026 The mvlbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvl/costmodel.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace mvl {
namespace {

constexpr double e = std::numbers::e;

TEST(Hurst, PublishedPoints) {
  EXPECT_NEAR(hurst_cost(2), 2.885, 1e-3);
  EXPECT_NEAR(hurst_cost(e), 2.718, 1e-3);
  EXPECT_NEAR(hurst_cost(4), 2.885, 1e-3);
  EXPECT_NEAR(hurst_cost(3), 3.0 / std::log(3.0), 1e-12);
}

TEST(Hurst, TwoAndFourAreExactlyEqual) {
  for (double k : {0.5, 1.0, 7.0}) {
    for (double ln_n : {0.1, 1.0, 44.3}) {
      const CostParams p(k, ln_n);
      EXPECT_NEAR(hurst_cost(2, p), hurst_cost(4, p), 1e-12 * hurst_cost(2, p));
    }
  }
}

TEST(Hurst, GapBetweenTwoAndThree) {
  const double gap = 100.0 * (hurst_cost(2) - hurst_cost(3)) / hurst_cost(3);
  EXPECT_NEAR(gap, 5.66, 0.05);
}

TEST(Hurst, RejectsRadixAtOrBelowOne) {
  EXPECT_THROW(hurst_cost(1.0), std::domain_error);
  EXPECT_THROW(refined_cost(0.5), std::domain_error);
}

TEST(Refined, ClosedFormPoints) {
  EXPECT_NEAR(refined_cost(2), 2.885, 1e-3);
  EXPECT_NEAR(refined_cost(3), 6.0 / std::log(3.0), 1e-12);
  EXPECT_NEAR(refined_cost(3), 5.46, 0.01);
  EXPECT_NEAR(refined_cost(16), 240.0 / std::log(16.0), 1e-9);
  EXPECT_NEAR(refined_cost(16), 86.56, 0.05);
}

TEST(Refined, RatioToHurstIsThresholdCount) {
  for (double r = 1.05; r < 20.0; r += 0.37) {
    EXPECT_NEAR(refined_cost(r) / hurst_cost(r), r - 1.0, 1e-12 * r);
  }
}

TEST(Refined, StrictlyIncreasingOnFineGrid) {
  const auto grid = radix_grid(2.0, 16.0, 0.01);
  EXPECT_EQ(grid.size(), 1401u);
  const auto pts = radix_sweep(CostModel::refined, grid);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_GT(pts[i].cost, pts[i - 1].cost);
}

TEST(Params, Validation) {
  EXPECT_THROW(CostParams(0.0, 1.0), std::domain_error);
  EXPECT_THROW(CostParams(1.0, 0.0), std::domain_error);
  EXPECT_THROW(CostParams::from_range(1.0, 1.0), std::domain_error);
  EXPECT_NEAR(CostParams::from_range(1.0, e).ln_n(), 1.0, 1e-15);
}

TEST(Params, ScaleEquivariance) {
  for (double r : {2.0, 3.0, 5.5}) {
    EXPECT_NEAR(hurst_cost(r, CostParams(3.0, 1.0)), 3.0 * hurst_cost(r), 1e-12);
    EXPECT_NEAR(hurst_cost(r, CostParams(1.0, 2.5)), 2.5 * hurst_cost(r), 1e-12);
  }
}

TEST(Optimum, HurstIsE) {
  const auto best = optimal_radix(CostModel::hurst, 2, 16);
  EXPECT_NEAR(best.radix, e, 1e-4);
  EXPECT_NEAR(best.cost, e, 1e-9);
}

TEST(Optimum, ArgminInvariantUnderParams) {
  for (auto p : {CostParams(0.1, 1.0), CostParams(5.0, 30.0), CostParams::from_range(2.0, 1e9)}) {
    EXPECT_NEAR(optimal_radix(CostModel::hurst, 2, 16, p).radix, e, 1e-4);
    EXPECT_EQ(optimal_radix(CostModel::refined, 2, 16, p).radix, 2.0);
  }
}

TEST(Optimum, BoundaryMinima) {
  EXPECT_EQ(optimal_radix(CostModel::refined, 2, 16).radix, 2.0);
  EXPECT_EQ(optimal_radix(CostModel::hurst, 3, 16).radix, 3.0);
  EXPECT_EQ(optimal_radix(CostModel::hurst, 1.5, 2.5).radix, 2.5);
}

TEST(Optimum, InvalidIntervals) {
  EXPECT_THROW(optimal_radix(CostModel::hurst, 4, 2), std::domain_error);
  EXPECT_THROW(optimal_radix(CostModel::hurst, 1, 2), std::domain_error);
}

TEST(Sweep, PreservesOrderAndValues) {
  const std::vector<double> radices = {4, 2, 3};
  const auto pts = radix_sweep(CostModel::hurst, radices);
  ASSERT_EQ(pts.size(), 3u);
  EXPECT_EQ(pts[0].radix, 4);
  EXPECT_NEAR(pts[0].cost, 2.885, 1e-3);
  EXPECT_NEAR(pts[2].cost, 2.731, 1e-3);
}

TEST(Grid, InclusiveEndpointAndErrors) {
  EXPECT_EQ(radix_grid(2, 4, 1), (std::vector<double>{2, 3, 4}));
  EXPECT_EQ(radix_grid(2, 2, 1), (std::vector<double>{2}));
  EXPECT_THROW(radix_grid(2, 4, 0), std::domain_error);
  EXPECT_THROW(radix_grid(4, 2, 1), std::domain_error);
}

TEST(Models, NamesRoundTrip) {
  EXPECT_EQ(parse_cost_model("hurst"), CostModel::hurst);
  EXPECT_EQ(to_string(CostModel::refined), "refined");
  EXPECT_THROW(parse_cost_model("linear"), std::invalid_argument);
}

}  // namespace
}  // namespace mvl
