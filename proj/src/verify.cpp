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

#include "mvl/verify.hpp"

#include "mvl/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

namespace mvl {

Oracle half_adder_oracle(int radix) {
  return [radix](std::span<const int> in) -> std::vector<int> {
    auto r = ha_oracle(radix, Digit(in[0], radix), Digit(in[1], radix));
    return {r.sum.value(), r.carry.value()};
  };
}

Oracle full_adder_oracle(int radix) {
  return [radix](std::span<const int> in) -> std::vector<int> {
    auto r = fa_oracle(radix, Digit(in[0], radix), Digit(in[1], radix), Digit(in[2], radix));
    return {r.sum.value(), r.carry.value()};
  };
}

Oracle multiplier_oracle(int radix, bool with_carry) {
  return [radix, with_carry](std::span<const int> in) -> std::vector<int> {
    auto r = mul1_oracle(radix, Digit(in[0], radix), Digit(in[1], radix));
    if (!with_carry) return {r.sum.value()};
    return {r.sum.value(), r.carry.value()};
  };
}

namespace {

std::vector<int> cardinalities(const Netlist& netlist) {
  std::vector<int> card;
  for (const auto& s : netlist.inputs()) card.push_back(domain_cardinality(s.domain));
  return card;
}

struct Chunk {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::vector<Counterexample> examples;
};

void check_one(const Netlist& netlist, const Oracle& oracle, std::span<const int> in,
               std::vector<std::uint8_t>& scratch, std::vector<int>& out, Chunk& chunk) {
  netlist.evaluate(in, scratch, out);
  auto expected = oracle(in);
  ++chunk.checked;
  if (expected.size() != out.size()) {
    throw std::logic_error(fmt::format("oracle returned {} outputs for a netlist with {}",
                                       expected.size(), out.size()));
  }
  if (std::equal(expected.begin(), expected.end(), out.begin())) return;
  ++chunk.failures;
  if (chunk.examples.size() >= kCounterexampleCap) return;
  Counterexample ce{{in.begin(), in.end()}, expected, out, {}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (expected[i] != out[i]) ce.mismatched_outputs.push_back(i);
  }
  chunk.examples.push_back(std::move(ce));
}

// Inputs for tuple number `index`, first input most significant.
std::vector<int> tuple_at(std::uint64_t index, std::span<const int> card) {
  std::vector<int> tuple(card.size(), 0);
  for (std::size_t i = card.size(); i > 0; --i) {
    tuple[i - 1] = static_cast<int>(index % static_cast<std::uint64_t>(card[i - 1]));
    index /= static_cast<std::uint64_t>(card[i - 1]);
  }
  return tuple;
}

Chunk sweep_range(const Netlist& netlist, const Oracle& oracle, std::span<const int> card,
                  std::uint64_t begin, std::uint64_t end) {
  Chunk chunk;
  std::vector<std::uint8_t> scratch(netlist.signals().size());
  std::vector<int> out(netlist.outputs().size());
  auto tuple = tuple_at(begin, card);
  for (std::uint64_t n = begin; n < end; ++n) {
    check_one(netlist, oracle, tuple, scratch, out, chunk);
    for (std::size_t i = tuple.size(); i > 0; --i) {
      if (++tuple[i - 1] < card[i - 1]) break;
      tuple[i - 1] = 0;
    }
  }
  return chunk;
}

VerificationResult finish(std::string id, SweepKind mode, std::vector<Chunk> chunks) {
  VerificationResult result;
  result.circuit_id = std::move(id);
  result.mode = mode;
  for (auto& c : chunks) {
    result.checked += c.checked;
    result.failures += c.failures;
    for (auto& e : c.examples) {
      if (result.counterexamples.size() < kCounterexampleCap) {
        result.counterexamples.push_back(std::move(e));
      }
    }
  }
  result.pass = result.failures == 0;
  return result;
}

}  // namespace

VerificationResult verify_exhaustive(const Netlist& netlist, const Oracle& oracle,
                                     std::string circuit_id, SweepOptions options) {
  const auto total = input_space_size(netlist);
  if (total > options.cap) throw CapacityExceeded(total, options.cap);
  const auto card = cardinalities(netlist);

  unsigned workers = options.workers;
  if (workers == 0) workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  // Small sweeps are not worth a thread.
  if (total < 4096) workers = 1;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<Chunk> chunks(workers);
  if (workers <= 1) {
    chunks.assign(1, sweep_range(netlist, oracle, card, 0, total));
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const auto begin = total * w / workers;
      const auto end = total * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        try {
          chunks[w] = sweep_range(netlist, oracle, card, begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return finish(std::move(circuit_id), SweepKind::exhaustive, std::move(chunks));
}

VerificationResult verify_sampled(const Netlist& netlist, const Oracle& oracle,
                                  std::string circuit_id, std::uint64_t count,
                                  std::uint64_t seed) {
  const auto card = cardinalities(netlist);
  std::mt19937_64 rng(seed);
  Chunk chunk;
  std::vector<std::uint8_t> scratch(netlist.signals().size());
  std::vector<int> out(netlist.outputs().size());
  std::vector<int> tuple(card.size());
  for (std::uint64_t n = 0; n < count; ++n) {
    for (std::size_t i = 0; i < card.size(); ++i) {
      tuple[i] = static_cast<int>(rng() % static_cast<std::uint64_t>(card[i]));
    }
    check_one(netlist, oracle, tuple, scratch, out, chunk);
  }
  auto result = finish(std::move(circuit_id), SweepKind::sampled, {std::move(chunk)});
  result.sample_count = count;
  result.seed = seed;
  return result;
}

VerificationResult verify_with_plan(const Netlist& netlist, const Oracle& oracle,
                                    std::string circuit_id, const VerifyPlan& plan,
                                    SweepOptions options) {
  switch (plan.kind) {
    case VerifyPlan::Kind::exhaustive:
      return verify_exhaustive(netlist, oracle, std::move(circuit_id), options);
    case VerifyPlan::Kind::sampled:
      return verify_sampled(netlist, oracle, std::move(circuit_id), plan.samples, plan.seed);
    case VerifyPlan::Kind::automatic:
      break;
  }
  if (input_space_size(netlist) <= options.cap) {
    return verify_exhaustive(netlist, oracle, std::move(circuit_id), options);
  }
  auto result = verify_sampled(netlist, oracle, std::move(circuit_id), plan.samples, plan.seed);
  result.fell_back_to_sampled = true;
  return result;
}

namespace {

BigUint word_value(std::span<const int> digits, int radix) {
  BigUint v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * radix + *it;
  return v;
}

std::vector<int> digits_at(BigUint value, int radix, std::span<const int> columns) {
  std::vector<int> all;
  while (value > 0) {
    all.push_back(static_cast<int>(value % radix));
    value /= radix;
  }
  std::vector<int> out;
  out.reserve(columns.size());
  for (int c : columns) out.push_back(c < static_cast<int>(all.size()) ? all[c] : 0);
  return out;
}

}  // namespace

Oracle word_multiplier_oracle(int radix, int width, std::vector<int> columns) {
  return [radix, width, columns = std::move(columns)](std::span<const int> in) {
    const auto x = word_value(in.subspan(0, width), radix);
    const auto y = word_value(in.subspan(width, width), radix);
    return digits_at(x * y, radix, columns);
  };
}

Oracle word_adder_oracle(int radix, int width) {
  std::vector<int> columns(static_cast<std::size_t>(width) + 1);
  for (int i = 0; i <= width; ++i) columns[i] = i;
  return [radix, width, columns](std::span<const int> in) {
    const auto x = word_value(in.subspan(0, width), radix);
    const auto y = word_value(in.subspan(width, width), radix);
    auto digits = digits_at(x + y + in[2 * width], radix, columns);
    return digits;
  };
}

VerificationResult verify_word_multiplier(int radix, int width, BlockVariant variant,
                                          const VerifyPlan& plan, SweepOptions options) {
  auto mult = gen_wallace_multiplier(radix, width, variant);
  // Every product digit must be observable.
  for (int c = 0; c < 2 * width; ++c) {
    if (std::find(mult.output_columns.begin(), mult.output_columns.end(), c) ==
        mult.output_columns.end()) {
      throw std::logic_error(fmt::format("multiplier has no output for column {}", c));
    }
  }
  const auto id = fmt::format("wallace-r{}-w{}", radix, width);
  return verify_with_plan(mult.netlist, word_multiplier_oracle(radix, width, mult.output_columns),
                          id, plan, options);
}

VerificationResult verify_word_adder(int radix, int width, BlockVariant variant,
                                     const VerifyPlan& plan, SweepOptions options) {
  auto adder = gen_ripple_adder(radix, width, variant);
  const auto id = fmt::format("ripple-r{}-w{}", radix, width);
  return verify_with_plan(adder, word_adder_oracle(radix, width), id, plan, options);
}

}  // namespace mvl
