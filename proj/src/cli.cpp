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

#include "mvl/cli.hpp"

#include "mvl/catalog.hpp"
#include "mvl/circuits.hpp"
#include "mvl/compare.hpp"
#include "mvl/core.hpp"
#include "mvl/costmodel.hpp"
#include "mvl/netlist_json.hpp"
#include "mvl/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace mvl::cli {

std::string format_real(double value) {
  if (value == 0.0 || !std::isfinite(value)) return fmt::format("{}", value == 0.0 ? 0.0 : value);
  const int magnitude = static_cast<int>(std::floor(std::log10(std::fabs(value))));
  const int decimals = std::max(0, 3 - magnitude);
  auto text = fmt::format("{:.{}f}", value, decimals);
  // Rounding can carry into a new digit (9.9996 -> "10.000").
  const int rounded_magnitude =
      static_cast<int>(std::floor(std::log10(std::fabs(std::stod(text)))));
  if (rounded_magnitude != magnitude) {
    text = fmt::format("{:.{}f}", value, std::max(0, 3 - rounded_magnitude));
  }
  return text;
}

namespace {

constexpr const char* kFooter = R"(Artifacts by subcommand:
  curve     radix cost curves: digit-capacity model over 2..16 and 2..4,
            threshold-level model over 2..16
  catalog   inverter, NAND/NOR, D flip-flop and SRAM cell counts per design
            style, with ratios, verdicts and the 4-valued inverter row
  build     netlists with transistor counts and depth for every one-digit
            circuit, ripple adders and Wallace multipliers (block tallies
            against the published 35/7, 38/8, 38/15 and 47/17 figures)
  verify    exhaustive or sampled oracle checks (exit 1 on failure)
  compare   half adder, full adder, 1-digit multiplier, word adder and
            8x8 vs 5x5 multiplier transistor comparisons
  errata    the six recomputed divergences from the published material

Exit status: 0 success, 1 verification failure, 2 usage error.)";

// Real-valued JSON fields carry the same four significant digits as CSV.
double rounded(double value) { return std::stod(format_real(value)); }

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line + '\n';
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CircuitArgs {
  std::string circuit;
  int radix = 3;
  int width = 5;
  std::string variant;
  std::string eqs = "corrected";
};

const std::vector<std::string> kCircuits = {"t-ha", "t-fa",   "t-mul1", "b-ha",
                                            "b-fa", "b-mul1", "ripple", "wallace"};

BlockVariant block_variant(const CircuitArgs& a) {
  BlockVariant v;
  v.eqs = parse_equation_set(a.eqs);
  if (!a.variant.empty()) v.binary_fa = parse_binary_full_adder(a.variant);
  return v;
}

struct BuiltCircuit {
  std::string id;
  Netlist netlist;
  Oracle oracle;
  std::optional<WallaceMultiplier> wallace;
};

BuiltCircuit build_circuit(const CircuitArgs& a) {
  const auto& c = a.circuit;
  if (c == "t-ha") return {"t-ha", gen_ternary_half_adder(), half_adder_oracle(3), {}};
  if (c == "t-fa") {
    const auto eqs = parse_equation_set(a.eqs);
    return {fmt::format("t-fa-{}", to_string(eqs)), gen_ternary_full_adder(eqs),
            full_adder_oracle(3), {}};
  }
  if (c == "t-mul1") return {"t-mul1", gen_ternary_mul1(), multiplier_oracle(3), {}};
  if (c == "b-ha") {
    const auto v = parse_binary_half_adder(a.variant.empty() ? "nand" : a.variant);
    return {fmt::format("b-ha-{}", to_string(v)), gen_binary_half_adder(v),
            half_adder_oracle(2), {}};
  }
  if (c == "b-fa") {
    const auto v = parse_binary_full_adder(a.variant.empty() ? "nand" : a.variant);
    return {fmt::format("b-fa-{}", to_string(v)), gen_binary_full_adder(v),
            full_adder_oracle(2), {}};
  }
  if (c == "b-mul1") return {"b-mul1", gen_binary_mul1(), multiplier_oracle(2, false), {}};
  if (c == "ripple") {
    return {fmt::format("ripple-r{}-w{}", a.radix, a.width),
            gen_ripple_adder(a.radix, a.width, block_variant(a)),
            word_adder_oracle(a.radix, a.width), {}};
  }
  auto w = gen_wallace_multiplier(a.radix, a.width, block_variant(a));
  auto oracle = word_multiplier_oracle(a.radix, a.width, w.output_columns);
  Netlist n = w.netlist;
  return {fmt::format("wallace-r{}-w{}", a.radix, a.width), std::move(n), std::move(oracle),
          std::move(w)};
}

Json block_counts_json(const BlockCounts& b) {
  return Json{{"mul1", b.mul1},
              {"ha", b.ha},
              {"fa", b.fa},
              {"stages", b.stage_count},
              {"transistors_catalog", b.transistor_total(CostMode::catalog)},
              {"transistors_principled", b.transistor_total(CostMode::principled)}};
}

Json wallace_json(const WallaceMultiplier& w, int radix, int width) {
  Json j;
  j["output_columns"] = w.output_columns;
  j["tree"] = block_counts_json(w.tree);
  j["tree_plus_cpa"] = block_counts_json(w.with_cpa);
  Json discrepancies = Json::array();
  if (auto target = published_wallace_counts(radix, width)) {
    j["published"] = {{"tree_fa", target->tree_fa},
                      {"tree_ha", target->tree_ha},
                      {"total_fa", target->total_fa},
                      {"total_ha", target->total_ha},
                      {"stages", target->stages}};
    auto compare = [&](const char* what, int published, int generated) {
      if (published != generated) {
        discrepancies.push_back(
            {{"quantity", what}, {"published", published}, {"generated", generated}});
      }
    };
    compare("tree_fa", target->tree_fa, w.tree.fa);
    compare("tree_ha", target->tree_ha, w.tree.ha);
    compare("total_fa", target->total_fa, w.with_cpa.fa);
    compare("total_ha", target->total_ha, w.with_cpa.ha);
    compare("stages", target->stages, w.tree.stage_count);
  } else {
    j["published"] = nullptr;
  }
  j["discrepancies"] = std::move(discrepancies);
  return j;
}

Json verification_json(const VerificationResult& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["circuit_id"] = r.circuit_id;
  j["mode"] = r.mode == SweepKind::exhaustive ? "exhaustive" : "sampled";
  if (r.mode == SweepKind::sampled) {
    j["samples"] = r.sample_count;
    j["seed"] = r.seed;
  }
  j["fell_back_to_sampled"] = r.fell_back_to_sampled;
  j["checked"] = r.checked;
  j["failures"] = r.failures;
  j["pass"] = r.pass;
  Json ces = Json::array();
  for (const auto& ce : r.counterexamples) {
    ces.push_back({{"inputs", ce.inputs},
                   {"expected", ce.expected},
                   {"actual", ce.actual},
                   {"mismatched_outputs", ce.mismatched_outputs}});
  }
  j["counterexamples"] = std::move(ces);
  return j;
}

struct Emitter {
  std::ostream& out;
  std::optional<std::string> path;

  void write(const std::string& text) const {
    if (!path) {
      out << text;
      return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) throw UsageError(fmt::format("cannot open '{}' for writing", *path));
    file << text;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-valued logic circuit workbench: cost models, circuit generators, "
               "exhaustive verification and ternary/binary comparisons.",
               "mvlbench"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();

  std::string output_path;
  std::string format;
  app.add_option("-o,--output", output_path, "Write the artifact to this file");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  // curve
  auto* curve = app.add_subcommand("curve", "Radix cost curve as radix,cost rows");
  std::string model;
  double from = 2.0;
  double to = 16.0;
  double step = 1.0;
  double k = 1.0;
  double ln_n = 1.0;
  curve->add_option("--model", model, "hurst (digit capacity) or refined (threshold levels)")
      ->required()
      ->check(CLI::IsMember({"hurst", "refined"}));
  curve->add_option("--from", from, "First radix")->capture_default_str();
  curve->add_option("--to", to, "Last radix")->capture_default_str();
  curve->add_option("--step", step, "Radix step")->capture_default_str();
  curve->add_option("--k", k, "Proportionality constant")->capture_default_str();
  curve->add_option("--ln-n", ln_n, "Natural log of the represented range")->capture_default_str();

  // catalog
  auto* catalog = app.add_subcommand("catalog", "Design-style transistor catalog");
  std::string style_filter;
  std::string gate_filter;
  int catalog_inputs = 2;
  catalog->add_option("--style", style_filter, "navi, lin, nepal, binary or quaternary")
      ->check(CLI::IsMember({"navi", "lin", "nepal", "binary", "quaternary"}));
  catalog->add_option("--gate", gate_filter, "inverter, nand, nor, dff or sram")
      ->check(CLI::IsMember({"inverter", "nand", "nor", "dff", "sram"}));
  catalog->add_option("--inputs", catalog_inputs, "NAND/NOR fan-in")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();

  // build / verify share the circuit selection.
  CircuitArgs build_args;
  CircuitArgs verify_args;
  auto add_circuit_options = [](CLI::App* sub, CircuitArgs& a) {
    sub->add_option("--circuit", a.circuit, "Circuit to generate")
        ->required()
        ->check(CLI::IsMember(kCircuits));
    sub->add_option("--radix", a.radix, "Radix of ripple/wallace")
        ->check(CLI::IsMember({2, 3}))
        ->capture_default_str();
    sub->add_option("--width", a.width, "Digit width of ripple/wallace")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    sub->add_option("--variant", a.variant, "Binary adder variant: nand, xor or pass8t")
        ->check(CLI::IsMember({"nand", "xor", "pass8t"}));
    sub->add_option("--eqs", a.eqs, "Ternary full-adder equations")
        ->check(CLI::IsMember({"printed", "corrected"}))
        ->capture_default_str();
  };
  auto* build = app.add_subcommand("build", "Generate a netlist and emit it as JSON");
  add_circuit_options(build, build_args);
  std::string emit = "json";
  build->add_option("--emit", emit, "Netlist format")->check(CLI::IsMember({"json"}));

  auto* verify = app.add_subcommand("verify", "Verify a circuit against its oracle");
  add_circuit_options(verify, verify_args);
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  auto* ex_opt = verify->add_flag("--exhaustive", exhaustive, "Check every input tuple");
  auto* samples_opt = verify->add_option("--samples", samples, "Check N random input tuples");
  verify->add_option("--seed", seed, "Seed for sampled mode")->capture_default_str();
  ex_opt->excludes(samples_opt);

  // compare
  auto* compare = app.add_subcommand("compare", "Ternary vs binary transistor comparison");
  std::string subject;
  std::optional<int> bits;
  std::optional<int> trits;
  int compare_inputs = 2;
  compare
      ->add_option("--subject", subject,
                   "inverter, nand, ha, fa, mul1, dff, sram, adder-word or multiplier-word")
      ->required()
      ->check(CLI::IsMember({"inverter", "nand", "ha", "fa", "mul1", "dff", "sram", "adder-word",
                             "multiplier-word"}));
  compare->add_option("--bits", bits, "Binary word width")->check(CLI::Range(2, 128));
  compare->add_option("--trits", trits, "Ternary word width")->check(CLI::Range(2, 128));
  compare->add_option("--inputs", compare_inputs, "NAND fan-in")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();

  auto* errata = app.add_subcommand("errata", "Recomputed divergences from the published material");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "mvlbench: " << e.what() << "\n";
    return kExitUsage;
  }

  const Emitter emitter{out, output_path.empty() ? std::nullopt
                                                 : std::optional<std::string>(output_path)};
  try {
    if (curve->parsed()) {
      const auto params = CostParams(k, ln_n);
      const auto m = parse_cost_model(model);
      const auto grid = radix_grid(from, to, step);
      const auto points = radix_sweep(m, grid, params);
      if (format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["model"] = to_string(m);
        j["k"] = k;
        j["ln_n"] = ln_n;
        Json pts = Json::array();
        for (const auto& p : points) pts.push_back({{"radix", p.radix}, {"cost", rounded(p.cost)}});
        j["points"] = std::move(pts);
        const auto best = optimal_radix(m, grid.front(), std::max(grid.back(), grid.front() + step),
                                        params);
        j["optimum"] = {{"radix", rounded(best.radix)}, {"cost", rounded(best.cost)}};
        emitter.write(dump(j));
      } else {
        std::string text = csv_line({"radix", "cost"});
        for (const auto& p : points) {
          text += csv_line({fmt::format("{:.10g}", p.radix), format_real(p.cost)});
        }
        emitter.write(text);
      }
      return kExitPass;
    }

    if (catalog->parsed()) {
      struct Entry {
        std::string style, gate, formula, published, note, verdict;
        int inputs = 0;
        long long count = 0, binary = 0;
        double ratio = 0, info = 0;
        int supplies = 0;
        bool static_current = false;
      };
      std::vector<Entry> entries;
      const auto& bin = design_style(StyleName::binary);
      for (const auto& style : style_catalog()) {
        if (!style_filter.empty() && to_string(style.name) != style_filter) continue;
        for (auto gate : {CatalogGate::inverter, CatalogGate::nand, CatalogGate::nor,
                          CatalogGate::dff, CatalogGate::sram_cell}) {
          if (!gate_filter.empty() && to_string(gate) != gate_filter) continue;
          if (style.name == StyleName::quaternary && gate != CatalogGate::inverter) continue;
          const bool fan_in_gate = gate == CatalogGate::nand || gate == CatalogGate::nor;
          const CatalogQuery q{gate, catalog_inputs};
          const auto cost = style_gate_cost(style, q);
          Entry e;
          e.style = to_string(style.name);
          e.gate = to_string(gate);
          e.inputs = fan_in_gate ? catalog_inputs : 0;
          e.count = cost.count;
          e.binary = style_gate_cost(bin, q).count;
          e.note = cost.note;
          if (fan_in_gate) {
            e.formula = style.nand_formula->describe();
            if (catalog_inputs == 2 && style.nand2_published) {
              e.published = std::to_string(*style.nand2_published);
              e.count = *style.nand2_published;
              e.binary = *bin.nand2_published;
              if (*style.nand2_published != cost.count) {
                e.note = fmt::format("formula gives {}", cost.count);
              }
            }
          } else if (gate == CatalogGate::dff) {
            e.formula = "4*inverter+8";
          } else if (gate == CatalogGate::sram_cell) {
            e.formula = "2*inverter+2";
          }
          e.info = information_ratio(style.radix == 2 ? 3 : style.radix, 2);
          if (style.name == StyleName::quaternary) {
            e.binary = 2 * bin.inverter_cost;
            e.note = "against two binary inverters";
          }
          e.ratio = static_cast<double>(e.count) / static_cast<double>(e.binary);
          e.verdict = style.name == StyleName::binary
                          ? "reference"
                          : (e.ratio <= e.info ? "ternary_viable" : "not_viable");
          e.supplies = style.supplies;
          e.static_current = style.static_current;
          entries.push_back(std::move(e));
        }
      }
      if (format == "json") {
        Json rows = Json::array();
        for (const auto& e : entries) {
          rows.push_back({{"style", e.style},
                          {"gate", e.gate},
                          {"inputs", e.inputs},
                          {"count", e.count},
                          {"formula", e.formula},
                          {"published", e.published},
                          {"binary_count", e.binary},
                          {"ratio", rounded(e.ratio)},
                          {"information_ratio", rounded(e.info)},
                          {"verdict", e.verdict},
                          {"supplies", e.supplies},
                          {"static_current", e.static_current},
                          {"note", e.note}});
        }
        emitter.write(dump(Json{{"schema_version", kSchemaVersion}, {"rows", std::move(rows)}}));
      } else {
        std::string text =
            csv_line({"style", "gate", "inputs", "count", "formula", "published", "binary_count",
                      "ratio", "information_ratio", "verdict", "supplies", "static_current",
                      "note"});
        for (const auto& e : entries) {
          text += csv_line({e.style, e.gate, std::to_string(e.inputs), std::to_string(e.count),
                            e.formula, e.published, std::to_string(e.binary),
                            format_real(e.ratio), format_real(e.info), e.verdict,
                            std::to_string(e.supplies), e.static_current ? "true" : "false",
                            e.note});
        }
        emitter.write(text);
      }
      return kExitPass;
    }

    if (build->parsed()) {
      if (format == "csv") throw UsageError("build emits json only");
      auto built = build_circuit(build_args);
      Json j;
      j["schema_version"] = kSchemaVersion;
      j["circuit"] = built.id;
      j["netlist"] = netlist_to_json(built.netlist);
      j["summary"] = j["netlist"]["summary"];
      if (built.wallace) j["wallace"] = wallace_json(*built.wallace, build_args.radix, build_args.width);
      emitter.write(dump(j));
      return kExitPass;
    }

    if (verify->parsed()) {
      if (format == "csv") throw UsageError("verify emits json only");
      auto built = build_circuit(verify_args);
      VerifyPlan plan = VerifyPlan::automatic(10000, seed);
      if (exhaustive) plan = VerifyPlan::exhaustive();
      if (samples_opt->count() > 0) plan = VerifyPlan::sampled(samples, seed);
      const auto result = verify_with_plan(built.netlist, built.oracle, built.id, plan);
      emitter.write(dump(verification_json(result)));
      return result.pass ? kExitPass : kExitVerificationFailure;
    }

    if (compare->parsed()) {
      ReportOptions opts;
      opts.bits = bits;
      opts.trits = trits;
      opts.fan_in = compare_inputs;
      const auto report = comparison_report(parse_report_subject(subject), opts);
      if (format == "json") {
        Json rows = Json::array();
        for (const auto& r : report.rows) {
          rows.push_back({{"label", r.label},
                          {"ternary_count", r.ternary_count},
                          {"binary_count", r.binary_count},
                          {"ratio", rounded(r.ratio)},
                          {"information_ratio", rounded(r.information_ratio)},
                          {"verdict", r.verdict()},
                          {"note", r.note}});
        }
        emitter.write(dump(Json{{"schema_version", kSchemaVersion},
                                {"subject", to_string(report.subject)},
                                {"rows", std::move(rows)}}));
      } else {
        std::string text = csv_line({"label", "ternary_count", "binary_count", "ratio",
                                     "information_ratio", "verdict", "note"});
        for (const auto& r : report.rows) {
          text += csv_line({r.label, std::to_string(r.ternary_count),
                            std::to_string(r.binary_count), format_real(r.ratio),
                            format_real(r.information_ratio), std::string(r.verdict()), r.note});
        }
        emitter.write(text);
      }
      return kExitPass;
    }

    if (errata->parsed()) {
      if (format == "csv") throw UsageError("errata emits json only");
      Json entries = Json::array();
      for (const auto& e : errata_report()) {
        Json j;
        j["id"] = e.id;
        j["location"] = e.location;
        j["printed_claim"] = e.printed_claim;
        j["computed_fact"] = e.computed_fact;
        j["confirmed"] = e.confirmed;
        if (const auto* v = std::get_if<VerificationResult>(&e.evidence)) {
          j["evidence"] = verification_json(*v);
        } else {
          const auto& n = std::get<NumericEvidence>(e.evidence);
          j["evidence"] = {{"printed", n.printed}, {"computed", n.computed}};
        }
        entries.push_back(std::move(j));
      }
      emitter.write(dump(Json{{"schema_version", kSchemaVersion}, {"entries", std::move(entries)}}));
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "mvlbench: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapacityExceeded& e) {
    err << "mvlbench: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "mvlbench: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "mvlbench: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "mvlbench: no subcommand\n";
  return kExitUsage;
}

}  // namespace mvl::cli
