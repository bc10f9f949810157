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

// Enumerative verification of generated circuits against the one-digit and
// big-integer oracles, and the errata report built on top of it.

#include "mvl/circuits.hpp"
#include "mvl/netlist.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mvl {

/// Maps an input tuple to the expected output tuple.
using Oracle = std::function<std::vector<int>(std::span<const int>)>;

/// (a, b) -> (sum, carry) via ha_oracle.
Oracle half_adder_oracle(int radix);
/// (a, b, cin) -> (sum, carry) via fa_oracle.
Oracle full_adder_oracle(int radix);
/// (a, b) -> (sum, carry) via mul1_oracle; with_carry = false drops the
/// carry (the binary one-bit multiplier has a single output).
Oracle multiplier_oracle(int radix, bool with_carry = true);

inline constexpr std::size_t kCounterexampleCap = 32;

struct Counterexample {
  std::vector<int> inputs;
  std::vector<int> expected;
  std::vector<int> actual;
  /// Indices of the outputs that differ.
  std::vector<std::size_t> mismatched_outputs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class SweepKind { exhaustive, sampled };

struct VerificationResult {
  std::string circuit_id;
  SweepKind mode = SweepKind::exhaustive;
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  /// Set when an automatic plan could not afford an exhaustive sweep.
  bool fell_back_to_sampled = false;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  bool pass = true;
  /// First failures in input order, at most kCounterexampleCap.
  std::vector<Counterexample> counterexamples;

  friend bool operator==(const VerificationResult&, const VerificationResult&) = default;
};

struct SweepOptions {
  std::uint64_t cap = kDefaultInputSpaceCap;
  /// 0 picks a worker count from the hardware. Results do not depend on it.
  unsigned workers = 0;
};

/// Throws CapacityExceeded when the input space exceeds the cap.
VerificationResult verify_exhaustive(const Netlist& netlist, const Oracle& oracle,
                                     std::string circuit_id, SweepOptions options = {});

/// Uniform random inputs from a seeded 64-bit Mersenne Twister.
VerificationResult verify_sampled(const Netlist& netlist, const Oracle& oracle,
                                  std::string circuit_id, std::uint64_t count,
                                  std::uint64_t seed);

struct VerifyPlan {
  enum class Kind { exhaustive, sampled, automatic };
  Kind kind = Kind::automatic;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 1;

  static VerifyPlan exhaustive() { return {Kind::exhaustive, 0, 0}; }
  static VerifyPlan sampled(std::uint64_t n, std::uint64_t seed) { return {Kind::sampled, n, seed}; }
  static VerifyPlan automatic(std::uint64_t n = 10000, std::uint64_t seed = 1) {
    return {Kind::automatic, n, seed};
  }
};

/// Runs `plan` on any netlist: automatic picks exhaustive when it fits the
/// cap and falls back to sampled otherwise.
VerificationResult verify_with_plan(const Netlist& netlist, const Oracle& oracle,
                                    std::string circuit_id, const VerifyPlan& plan,
                                    SweepOptions options = {});

/// Checks every product of the Wallace multiplier against exact integer
/// multiplication.
VerificationResult verify_word_multiplier(int radix, int width, BlockVariant variant,
                                          const VerifyPlan& plan, SweepOptions options = {});

/// Checks the ripple adder's digits and carry-out against exact integer
/// addition of x + y + cin.
VerificationResult verify_word_adder(int radix, int width, BlockVariant variant,
                                     const VerifyPlan& plan, SweepOptions options = {});

/// Oracle for a word multiplier whose outputs sit at `columns`.
Oracle word_multiplier_oracle(int radix, int width, std::vector<int> columns);
/// Oracle for gen_ripple_adder's port layout.
Oracle word_adder_oracle(int radix, int width);

struct NumericEvidence {
  double printed;
  double computed;

  friend bool operator==(const NumericEvidence&, const NumericEvidence&) = default;
};

struct ErrataEntry {
  std::string id;
  std::string location;
  std::string printed_claim;
  std::string computed_fact;
  std::variant<VerificationResult, NumericEvidence> evidence;
  /// True when the evidence was recomputed and supports the entry.
  bool confirmed = false;
};

/// The closed list of six divergences between the published material and
/// recomputation. Every entry is recomputed on each call.
std::vector<ErrataEntry> errata_report();

}  // namespace mvl
