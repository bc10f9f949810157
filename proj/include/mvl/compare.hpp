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

// Ternary-vs-binary transistor-count comparisons. Each row's cost ratio is
// checked against the information a ternary unit carries relative to its
// binary counterpart; a ternary design is only worth its transistors when
// the ratio stays at or below that figure.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mvl {

enum class ReportSubject {
  inverter,
  nand,
  ha,
  fa,
  mul1,
  dff,
  sram,
  adder_word,
  multiplier_word,
};

std::string_view to_string(ReportSubject subject);
/// Accepts both "adder_word" and "adder-word" spellings.
ReportSubject parse_report_subject(std::string_view text);

struct ReportRow {
  std::string label;
  long long ternary_count = 0;
  long long binary_count = 0;
  double ratio = 0.0;
  double information_ratio = 0.0;
  bool viable = false;
  std::string note;

  std::string_view verdict() const { return viable ? "ternary_viable" : "not_viable"; }
};

struct ComparisonReport {
  ReportSubject subject;
  std::vector<ReportRow> rows;
};

struct ReportOptions {
  /// Word subjects: binary width. Defaults to 64 (adder) or 8 (multiplier).
  std::optional<int> bits;
  /// Word subjects: ternary width. Defaults to the published trit count for
  /// `bits`.
  std::optional<int> trits;
  /// nand subject: fan-in.
  int fan_in = 2;
};

ComparisonReport comparison_report(ReportSubject subject, const ReportOptions& options = {});

}  // namespace mvl
