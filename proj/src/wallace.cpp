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

#include "mvl/circuits.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace mvl {

namespace {

// A pending partial-product signal. `full` marks a trit that may take all
// three values; binary-valued carries (and every radix-2 signal) are not
// full. `seq` is creation order, used to pick the oldest signals first.
struct Entry {
  SignalRef signal;
  bool full = false;
  std::uint64_t seq = 0;
};

using Row = std::map<int, Entry>;

class Reducer {
 public:
  Reducer(int radix, BlockVariant variant, NetlistBuilder& nb)
      : radix_(radix),
        nb_(nb),
        ha_(radix == 3 ? gen_ternary_half_adder() : gen_binary_half_adder(variant.binary_ha)),
        fa_(radix == 3 ? gen_ternary_full_adder(variant.eqs)
                       : gen_binary_full_adder(variant.binary_fa)) {}

  Entry make(SignalRef s, bool full) { return {s, full, next_seq_++}; }

  // Combines the signals of one column. Returns {sum, carry}. The inputs must
  // hold two or three entries; three all-full entries are not accepted.
  std::pair<Entry, Entry> combine(std::vector<Entry> sig, const std::string& tag) {
    std::sort(sig.begin(), sig.end(), [](const Entry& l, const Entry& r) { return l.seq < r.seq; });
    std::vector<Entry> data;
    for (auto it = sig.begin(); it != sig.end() && data.size() < 2;) {
      if (it->full) {
        data.push_back(*it);
        it = sig.erase(it);
      } else {
        ++it;
      }
    }
    while (data.size() < 2) {
      data.push_back(sig.front());
      sig.erase(sig.begin());
    }
    std::vector<SignalRef> bind{data[0].signal, data[1].signal};
    const Netlist* block = &ha_;
    std::string name = fmt::format("ha{}_{}", ha_count_, tag);
    if (!sig.empty()) {
      if (sig.front().full) throw std::logic_error("full-adder carry-in must be binary-valued");
      bind.push_back(sig.front().signal);
      block = &fa_;
      name = fmt::format("fa{}_{}", fa_count_, tag);
      ++fa_count_;
    } else {
      ++ha_count_;
    }
    auto outs = nb_.instantiate(*block, bind, name);
    return {make(outs[0], radix_ == 3), make(outs[1], false)};
  }

  int ha_count() const { return ha_count_; }
  int fa_count() const { return fa_count_; }

 private:
  int radix_;
  NetlistBuilder& nb_;
  Netlist ha_;
  Netlist fa_;
  std::uint64_t next_seq_ = 0;
  int ha_count_ = 0;
  int fa_count_ = 0;
};

}  // namespace

WallaceMultiplier gen_wallace_multiplier(int radix, int width, BlockVariant variant) {
  if (radix != 2 && radix != 3) {
    throw std::invalid_argument(fmt::format("multiplier supports radix 2 or 3, got {}", radix));
  }
  if (width < 2) throw std::invalid_argument(fmt::format("multiplier width {} is below 2", width));

  const auto digit = radix == 3 ? SignalDomain::trit : SignalDomain::binary_rail;
  NetlistBuilder nb(radix);
  std::vector<SignalRef> xs;
  std::vector<SignalRef> ys;
  for (int i = 0; i < width; ++i) xs.push_back(nb.input(digit, fmt::format("x{}", i)));
  for (int i = 0; i < width; ++i) ys.push_back(nb.input(digit, fmt::format("y{}", i)));

  Reducer reducer(radix, variant, nb);
  const Netlist mul1 = radix == 3 ? gen_ternary_mul1() : gen_binary_mul1();

  // Partial products. For radix 3 each row x_i * y contributes a trit row and
  // a binary-valued carry row shifted by one column; rows are interleaved.
  std::vector<Row> rows;
  for (int i = 0; i < width; ++i) {
    Row digits;
    Row carries;
    for (int j = 0; j < width; ++j) {
      const SignalRef bind[] = {xs[i], ys[j]};
      auto outs = nb.instantiate(mul1, bind, fmt::format("m{}_{}", i, j));
      digits[i + j] = reducer.make(outs[0], radix == 3);
      if (radix == 3) carries[i + j + 1] = reducer.make(outs[1], false);
    }
    rows.push_back(std::move(digits));
    if (radix == 3) rows.push_back(std::move(carries));
  }

  // Reduction: rows are taken three at a time; within a group each column
  // with three signals becomes a full adder and each column with two a half
  // adder. A column of three full trits cannot feed a ternary full adder, so
  // it gets a half adder and its third signal moves to an extra row.
  int stages = 0;
  constexpr int kMaxStages = 64;
  while (rows.size() > 2) {
    if (++stages > kMaxStages) throw std::logic_error("Wallace reduction failed to converge");
    std::vector<Row> next;
    const std::size_t grouped = rows.size() - rows.size() % 3;
    for (std::size_t g = 0; g < grouped; g += 3) {
      std::map<int, std::vector<Entry>> columns;
      for (std::size_t r = g; r < g + 3; ++r) {
        for (const auto& [col, e] : rows[r]) columns[col].push_back(e);
      }
      Row sums;
      Row carries;
      Row overflow;
      for (auto& [col, sig] : columns) {
        if (sig.size() == 1) {
          sums[col] = sig.front();
          continue;
        }
        const auto tag = fmt::format("s{}c{}", stages, col);
        if (sig.size() == 3 &&
            std::all_of(sig.begin(), sig.end(), [](const Entry& e) { return e.full; })) {
          std::sort(sig.begin(), sig.end(),
                    [](const Entry& l, const Entry& r) { return l.seq < r.seq; });
          overflow[col] = sig.back();
          sig.pop_back();
        }
        auto [sum, carry] = reducer.combine(std::move(sig), tag);
        sums[col] = sum;
        carries[col + 1] = carry;
      }
      for (Row* row : {&sums, &carries, &overflow}) {
        if (!row->empty()) next.push_back(std::move(*row));
      }
    }
    for (std::size_t r = grouped; r < rows.size(); ++r) next.push_back(std::move(rows[r]));
    rows = std::move(next);
  }

  BlockCounts tree{radix, variant, width * width, reducer.ha_count(), reducer.fa_count(), stages};

  // Carry-propagate adder over the (at most) two residual rows.
  std::map<int, std::vector<Entry>> columns;
  for (const auto& row : rows) {
    for (const auto& [col, e] : row) columns[col].push_back(e);
  }
  WallaceMultiplier result{Netlist(radix, {}, {}, {}, {}), {}, tree, tree};
  std::optional<Entry> carry;
  const int last = columns.empty() ? -1 : columns.rbegin()->first;
  for (int col = 0; col <= last || carry; ++col) {
    std::vector<Entry> sig;
    if (auto it = columns.find(col); it != columns.end()) sig = it->second;
    if (carry) sig.push_back(*carry);
    carry.reset();
    if (sig.empty()) continue;
    Entry digit_out = sig.front();
    if (sig.size() > 1) {
      auto [sum, c] = reducer.combine(std::move(sig), fmt::format("cpa{}", col));
      digit_out = sum;
      carry = c;
    }
    nb.output(digit_out.signal, fmt::format("p{}", col));
    result.output_columns.push_back(col);
  }

  result.with_cpa.ha = reducer.ha_count();
  result.with_cpa.fa = reducer.fa_count();
  result.netlist = std::move(nb).build();
  return result;
}

std::optional<WallaceTarget> published_wallace_counts(int radix, int width) {
  if (radix == 2 && width == 8) return WallaceTarget{38, 15, 47, 17, 4};
  if (radix == 3 && width == 5) return WallaceTarget{35, 7, 38, 8, 5};
  return std::nullopt;
}

}  // namespace mvl
