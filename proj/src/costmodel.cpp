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

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace mvl {

CostParams::CostParams(double k, double ln_n) : k_(k), ln_n_(ln_n) {
  if (!(k > 0.0)) throw std::domain_error(fmt::format("k must be positive, got {}", k));
  if (!(ln_n > 0.0)) {
    throw std::domain_error(fmt::format("ln N must be positive (N > 1), got {}", ln_n));
  }
}

CostParams CostParams::from_range(double k, double n) {
  if (!(n > 1.0)) throw std::domain_error(fmt::format("range N must exceed 1, got {}", n));
  return CostParams(k, std::log(n));
}

std::string_view to_string(CostModel model) {
  return model == CostModel::hurst ? "hurst" : "refined";
}

CostModel parse_cost_model(std::string_view text) {
  if (text == "hurst") return CostModel::hurst;
  if (text == "refined") return CostModel::refined;
  throw std::invalid_argument(fmt::format("unknown cost model '{}'", text));
}

namespace {

void check_radix(double radix) {
  if (!(radix > 1.0)) throw std::domain_error(fmt::format("radix must exceed 1, got {}", radix));
}

}  // namespace

double hurst_cost(double radix, const CostParams& params) {
  check_radix(radix);
  return params.k() * radix * params.ln_n() / std::log(radix);
}

double refined_cost(double radix, const CostParams& params) {
  check_radix(radix);
  return params.k() * radix * (radix - 1.0) * params.ln_n() / std::log(radix);
}

double model_cost(CostModel model, double radix, const CostParams& params) {
  return model == CostModel::hurst ? hurst_cost(radix, params) : refined_cost(radix, params);
}

OptimalRadix optimal_radix(CostModel model, double lo, double hi, const CostParams& params) {
  if (!(lo > 1.0) || !(hi > lo)) {
    throw std::domain_error(fmt::format("invalid search interval [{}, {}]", lo, hi));
  }
  auto f = [&](double r) { return model_cost(model, r, params); };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-9) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  OptimalRadix best{(a + b) / 2.0, f((a + b) / 2.0)};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe <= best.cost) best = {edge, fe};
  }
  return best;
}

std::vector<RadixCurvePoint> radix_sweep(CostModel model, std::span<const double> radices,
                                         const CostParams& params) {
  std::vector<RadixCurvePoint> points;
  points.reserve(radices.size());
  for (double r : radices) points.push_back({r, model_cost(model, r, params)});
  return points;
}

std::vector<double> radix_grid(double from, double to, double step) {
  if (!(step > 0.0)) throw std::domain_error(fmt::format("step must be positive, got {}", step));
  if (to < from) throw std::domain_error(fmt::format("empty range [{}, {}]", from, to));
  std::vector<double> grid;
  const double slack = step * 1e-9;
  for (long i = 0;; ++i) {
    const double r = from + static_cast<double>(i) * step;
    if (r > to + slack) break;
    grid.push_back(r);
  }
  return grid;
}

}  // namespace mvl
