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

#pragma once

// Radix-economy cost functions. With d = ln N / ln R digits needed for a
// range N, the digit-capacity model prices a system at k * R * d; the
// threshold-level model multiplies that by R - 1.

#include <span>
#include <string_view>
#include <vector>

namespace mvl {

/// k > 0 scales the cost; ln_n > 0 is the natural log of the represented
/// range N (so N > 1).
class CostParams {
 public:
  CostParams() = default;
  CostParams(double k, double ln_n);

  static CostParams from_range(double k, double n);

  double k() const noexcept { return k_; }
  double ln_n() const noexcept { return ln_n_; }

 private:
  double k_ = 1.0;
  double ln_n_ = 1.0;
};

enum class CostModel { hurst, refined };

std::string_view to_string(CostModel model);
CostModel parse_cost_model(std::string_view text);

/// k * R * ln N / ln R. Throws std::domain_error for R <= 1.
double hurst_cost(double radix, const CostParams& params = {});

/// k * R * (R - 1) * ln N / ln R. Throws std::domain_error for R <= 1.
double refined_cost(double radix, const CostParams& params = {});

double model_cost(CostModel model, double radix, const CostParams& params = {});

struct RadixCurvePoint {
  double radix;
  double cost;
};

struct OptimalRadix {
  double radix;
  double cost;
};

/// Minimizer of the model on [lo, hi], to 1e-6 in the radix. Golden-section
/// search, then the endpoints are compared so boundary minima come back
/// exactly.
OptimalRadix optimal_radix(CostModel model, double lo, double hi,
                           const CostParams& params = {});

std::vector<RadixCurvePoint> radix_sweep(CostModel model, std::span<const double> radices,
                                         const CostParams& params = {});

/// Radices from, from + step, ... up to `to` (inclusive, with a small
/// tolerance). Each point is computed as from + i * step.
std::vector<double> radix_grid(double from, double to, double step);

}  // namespace mvl
