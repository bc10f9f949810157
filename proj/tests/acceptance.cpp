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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "mvl/catalog.hpp"
#include "mvl/circuits.hpp"
#include "mvl/cli.hpp"
#include "mvl/compare.hpp"
#include "mvl/costmodel.hpp"
#include "mvl/verify.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

namespace {

using namespace mvl;

struct Outcome {
  bool pass = true;
  std::vector<std::string> detail;

  void check(bool ok, std::string what) {
    if (!ok) {
      pass = false;
      detail.push_back("MISS " + what);
    }
  }
  void note(std::string what) { detail.push_back(std::move(what)); }
};

int failures = 0;

void report(int id, std::string_view title, const Outcome& o) {
  if (!o.pass) ++failures;
  std::string line = fmt::format("[{}] criterion {}: {}", o.pass ? "PASS" : "FAIL", id, title);
  if (!o.detail.empty()) line += " (" + fmt::format("{}", fmt::join(o.detail, "; ")) + ")";
  fmt::print("{}\n", line);
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

Outcome cost_curves() {
  Outcome o;
  constexpr double tol = 1e-3;
  o.check(near(hurst_cost(2), 2.885, tol), fmt::format("C(2)={:.6f}", hurst_cost(2)));
  o.check(near(hurst_cost(std::numbers::e), 2.718, tol), "C(e)");
  o.check(near(hurst_cost(4), 2.885, tol), "C(4)");
  const double gap = 100.0 * (hurst_cost(2) - hurst_cost(3)) / hurst_cost(3);
  o.check(near(gap, 5.66, 0.05), fmt::format("gap={:.4f}%", gap));
  const auto best = optimal_radix(CostModel::hurst, 2, 16);
  o.check(near(best.radix, std::numbers::e, 1e-4), fmt::format("argmin={:.8f}", best.radix));
  o.check(optimal_radix(CostModel::refined, 2, 16).radix == 2.0, "refined argmin");
  const auto grid = radix_grid(2, 16, 0.01);
  const auto pts = radix_sweep(CostModel::refined, grid);
  bool increasing = true;
  for (std::size_t i = 1; i < pts.size(); ++i) increasing &= pts[i].cost > pts[i - 1].cost;
  o.check(increasing, "refined increasing");
  return o;
}

Outcome catalog() {
  Outcome o;
  auto cost = [](StyleName s, CatalogGate g) {
    return style_gate_cost(design_style(s), {g, 2}).count;
  };
  const StyleName three[] = {StyleName::navi, StyleName::lin, StyleName::nepal};
  const StyleName four[] = {StyleName::navi, StyleName::lin, StyleName::nepal, StyleName::binary};
  const int inv[] = {8, 6, 3, 2};
  const double inv_ratio[] = {4.0, 3.0, 1.5};
  const int nand2[] = {16, 10, 5, 4};
  const char* formula[] = {"6N", "4N+2", "2N+1", "2N"};
  const int dff[] = {40, 32, 20, 16};
  for (int i = 0; i < 4; ++i) {
    const auto& st = design_style(four[i]);
    o.check(cost(four[i], CatalogGate::inverter) == inv[i], fmt::format("inverter {}", i));
    o.check(st.nand2_published == nand2[i], fmt::format("nand2 {}", i));
    o.check(st.nand_formula && st.nand_formula->describe() == formula[i], formula[i]);
    o.check(cost(four[i], CatalogGate::dff) == dff[i] && dff[i] == 4 * inv[i] + 8,
            fmt::format("dff {}", i));
  }
  for (int i = 0; i < 3; ++i) {
    o.check(cost(three[i], CatalogGate::inverter) == inv_ratio[i] * 2, "inverter ratio");
  }
  const int sram[] = {14, 8, 6};
  const StyleName sram_styles[] = {StyleName::lin, StyleName::nepal, StyleName::binary};
  for (int i = 0; i < 3; ++i) {
    o.check(cost(sram_styles[i], CatalogGate::sram_cell) == sram[i] &&
                sram[i] == 2 * cost(sram_styles[i], CatalogGate::inverter) + 2,
            fmt::format("sram {}", i));
  }
  const auto inv_report = comparison_report(ReportSubject::inverter);
  bool quaternary = false;
  for (const auto& r : inv_report.rows) {
    if (r.label == "quaternary") {
      quaternary = r.ternary_count == 10 && r.binary_count == 4 && r.ratio == 2.5;
    }
  }
  o.check(quaternary, "quaternary row");
  return o;
}

Outcome circuit_truth() {
  Outcome o;
  struct Case {
    std::string name;
    Netlist n;
    Oracle oracle;
    std::uint64_t rows;
  };
  std::vector<Case> cases;
  cases.push_back({"t-ha", gen_ternary_half_adder(), half_adder_oracle(3), 9});
  cases.push_back({"t-fa", gen_ternary_full_adder(EquationSet::corrected), full_adder_oracle(3), 18});
  cases.push_back({"t-mul1", gen_ternary_mul1(), multiplier_oracle(3), 9});
  cases.push_back({"b-ha-nand", gen_binary_half_adder(BinaryHalfAdder::nand), half_adder_oracle(2), 4});
  cases.push_back({"b-ha-xor", gen_binary_half_adder(BinaryHalfAdder::xor3t), half_adder_oracle(2), 4});
  for (auto v : {BinaryFullAdder::nand, BinaryFullAdder::xor3t, BinaryFullAdder::pass8t}) {
    cases.push_back({fmt::format("b-fa-{}", to_string(v)), gen_binary_full_adder(v),
                     full_adder_oracle(2), 8});
  }
  cases.push_back({"b-mul1", gen_binary_mul1(), multiplier_oracle(2, false), 4});
  for (const auto& c : cases) {
    const auto r = verify_exhaustive(c.n, c.oracle, c.name);
    o.check(r.pass && r.checked == c.rows, fmt::format("{} {}/{}", c.name, r.checked, c.rows));
  }
  return o;
}

Outcome published_totals() {
  Outcome o;
  auto cat = [](const Netlist& n) { return transistor_count(n, CostMode::catalog); };
  const auto t_ha = cat(gen_ternary_half_adder());
  const auto t_fa = cat(gen_ternary_full_adder(EquationSet::printed));
  const auto t_mul = cat(gen_ternary_mul1());
  const auto b_ha_n = cat(gen_binary_half_adder(BinaryHalfAdder::nand));
  const auto b_ha_x = cat(gen_binary_half_adder(BinaryHalfAdder::xor3t));
  const auto b_fa_n = cat(gen_binary_full_adder(BinaryFullAdder::nand));
  const auto b_fa_x = cat(gen_binary_full_adder(BinaryFullAdder::xor3t));
  const auto b_fa_p = cat(gen_binary_full_adder(BinaryFullAdder::pass8t));
  const auto b_mul = cat(gen_binary_mul1());
  o.check(t_ha == 66, fmt::format("t-ha {}", t_ha));
  o.check(t_fa == 124, fmt::format("t-fa {}", t_fa));
  o.check(t_mul == 38, fmt::format("t-mul1 {}", t_mul));
  o.check(b_ha_n == 18 && b_ha_x == 9, "b-ha");
  o.check(b_fa_n == 36 && b_fa_x == 18 && b_fa_p == 8, "b-fa");
  o.check(b_mul == 6, "b-mul1");
  auto ratio = [](long long a, long long b) { return static_cast<double>(a) / static_cast<double>(b); };
  constexpr double tol = 0.05;
  o.check(near(ratio(t_ha, b_ha_n), 3.67, tol), "66/18");
  o.check(near(ratio(t_ha, b_ha_x), 7.33, tol), "66/9");
  o.check(near(ratio(t_fa, b_fa_n), 3.44, tol), "124/36");
  o.check(near(ratio(t_fa, b_fa_x), 6.89, tol), "124/18");
  o.check(near(ratio(t_fa, b_fa_p), 15.5, tol), "124/8");
  o.check(near(ratio(t_mul, b_mul), 6.33, tol), "38/6");
  return o;
}

Outcome word_equivalence() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const auto t = verify_word_multiplier(3, 5, {}, VerifyPlan::exhaustive());
  const auto b = verify_word_multiplier(2, 8, {}, VerifyPlan::exhaustive());
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.check(t.pass && t.checked == 59049, fmt::format("5x5 ternary {}/59049", t.checked));
  o.check(b.pass && b.checked == 65536, fmt::format("8x8 binary {}/65536", b.checked));
  o.check(secs < 60.0, "runtime");
  o.note(fmt::format("{:.2f} s", secs));
  return o;
}

Outcome wallace_accounting() {
  Outcome o;
  const auto bin = gen_wallace_multiplier(2, 8);
  o.check(bin.tree.fa == 38 && bin.tree.ha == 15,
          fmt::format("binary tree {} FA / {} HA", bin.tree.fa, bin.tree.ha));
  auto compare = [&](std::string what, int published, int generated) {
    if (published != generated) {
      o.note(fmt::format("discrepancy {}: published {} generated {}", what, published, generated));
    }
  };
  compare("binary +CPA FA", 47, bin.with_cpa.fa);
  compare("binary +CPA HA", 17, bin.with_cpa.ha);
  const auto ter = gen_wallace_multiplier(3, 5);
  compare("ternary tree FA", 35, ter.tree.fa);
  compare("ternary tree HA", 7, ter.tree.ha);
  compare("ternary +CPA FA", 38, ter.with_cpa.fa);
  compare("ternary +CPA HA", 8, ter.with_cpa.ha);
  ReportOptions opts;
  opts.bits = 8;
  opts.trits = 5;
  long long t_total = 0, b_total = 0;
  for (const auto& r : comparison_report(ReportSubject::multiplier_word, opts).rows) {
    if (r.label == "total") {
      t_total = r.ternary_count;
      b_total = r.binary_count;
    }
  }
  o.check(t_total == 6190 && b_total == 2382, fmt::format("totals {} / {}", t_total, b_total));
  return o;
}

Outcome errata() {
  Outcome o;
  const auto entries = errata_report();
  o.check(entries.size() == 6, fmt::format("{} entries", entries.size()));
  for (const auto& e : entries) o.check(e.confirmed, e.id);
  const auto r = verify_exhaustive(gen_ternary_full_adder(EquationSet::printed),
                                   full_adder_oracle(3), "t-fa-printed");
  std::vector<std::string> found;
  for (const auto& ce : r.counterexamples) {
    for (auto idx : ce.mismatched_outputs) {
      found.push_back(fmt::format("({},{},{}) {}", ce.inputs[0], ce.inputs[1], ce.inputs[2],
                                  idx == 0 ? "sum" : "carry"));
    }
  }
  const std::vector<std::string> expected = {"(0,1,1) carry", "(1,0,1) carry", "(2,0,1) sum"};
  o.check(found == expected, fmt::format("failure set [{}]", fmt::join(found, ", ")));
  return o;
}

Outcome depth_proxy() {
  Outcome o;
  const int bin = depth(gen_binary_full_adder(BinaryFullAdder::nand));
  const int ter = depth(gen_ternary_full_adder(EquationSet::corrected));
  o.check(bin == 6, fmt::format("binary NAND FA depth {}", bin));
  o.check(ter > bin, fmt::format("ternary FA depth {} not above {}", ter, bin));
  return o;
}

Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> commands = {
      {"curve", "--model", "hurst", "--from", "2", "--to", "16", "--step", "1"},
      {"curve", "--model", "refined", "--from", "2", "--to", "4", "--step", "0.01"},
      {"catalog"},
      {"catalog", "--format", "json"},
      {"build", "--circuit", "t-fa", "--eqs", "printed"},
      {"build", "--circuit", "wallace", "--radix", "3", "--width", "5"},
      {"verify", "--circuit", "t-fa", "--eqs", "printed", "--exhaustive"},
      {"verify", "--circuit", "wallace", "--radix", "3", "--width", "8", "--samples", "300",
       "--seed", "5"},
      {"compare", "--subject", "multiplier-word", "--bits", "8", "--trits", "5"},
      {"compare", "--subject", "fa", "--format", "json"},
      {"errata"},
  };
  for (const auto& c : commands) {
    std::ostringstream out_a, err_a, out_b, err_b;
    const int sa = cli::run(c, out_a, err_a);
    const int sb = cli::run(c, out_b, err_b);
    o.check(sa == sb && out_a.str() == out_b.str() && !out_a.str().empty(),
            fmt::format("{}", fmt::join(c, " ")));
  }
  return o;
}

}  // namespace

int main() {
  report(1, "cost-curve reproduction", cost_curves());
  report(2, "catalog reproduction", catalog());
  report(3, "one-digit circuit truth", circuit_truth());
  report(4, "published transistor totals", published_totals());
  report(5, "word-level functional equivalence", word_equivalence());
  report(6, "Wallace accounting", wallace_accounting());
  report(7, "errata suite", errata());
  report(8, "depth proxy", depth_proxy());
  report(9, "CLI determinism", determinism());
  fmt::print("{} of 9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
