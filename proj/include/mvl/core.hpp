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

// Radix-parametric digit algebra: digits, little-endian words, the
// one-digit arithmetic oracles every generated circuit is checked against,
// and the ternary decoder/encoder semantics.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mvl {

using BigUint = boost::multiprecision::cpp_int;

/// A single digit `value` in [0, radix).
class Digit {
 public:
  /// Throws std::domain_error when radix < 2 or value is outside [0, radix).
  Digit(int value, int radix);

  int value() const noexcept { return value_; }
  int radix() const noexcept { return radix_; }

  friend bool operator==(const Digit&, const Digit&) = default;

 private:
  int value_;
  int radix_;
};

/// Little-endian digit vector; index 0 is the least significant digit.
class Word {
 public:
  Word(std::vector<int> digits, int radix);
  Word(std::initializer_list<int> digits, int radix)
      : Word(std::vector<int>(digits), radix) {}

  int radix() const noexcept { return radix_; }
  std::size_t width() const noexcept { return digits_.size(); }
  std::span<const int> digits() const noexcept { return digits_; }
  Digit operator[](std::size_t i) const { return Digit(digits_.at(i), radix_); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<int> digits_;
  int radix_;
};

/// Result of a one-digit operation. `carry` is always 0 or 1.
struct DigitPair {
  Digit sum;
  Digit carry;

  friend bool operator==(const DigitPair&, const DigitPair&) = default;
};

DigitPair ha_oracle(int radix, Digit a, Digit b);

/// `cin` must be 0 or 1: the carry-in of a ternary full adder is
/// binary-valued.
DigitPair fa_oracle(int radix, Digit a, Digit b, Digit cin);

/// One-digit multiplier. Only radix 2 and 3 keep the carry binary-valued;
/// larger radices throw std::invalid_argument.
DigitPair mul1_oracle(int radix, Digit a, Digit b);

/// Throws std::range_error when value >= radix^width.
Word int_to_word(const BigUint& value, int radix, int width);
BigUint word_to_int(const Word& word);

BigUint ipow(int radix, int exponent);

enum class WirePolicy { published_table, capacity };

/// Number of trits needed to carry `bits` bits. `capacity` is the smallest d
/// with 3^d >= 2^bits; `published_table` reproduces the published bit/trit table
/// for 8, 16, 32 and 64 bits (including its 8 -> 5 row, which undershoots).
int digits_for_bits(int bits, WirePolicy policy);

/// ln(r_hi) / ln(r_lo).
double information_ratio(int r_hi, int r_lo);

/// Decoded threshold rails of one trit. A flag is true at the high level.
/// a0 = (value >= 1), a1 = (value >= 2); the bars are their complements.
struct Rails {
  bool a1_bar;
  bool a1;
  bool a0_bar;
  bool a0;

  friend bool operator==(const Rails&, const Rails&) = default;
};

Rails decode_trit(Digit a);

/// Active-low encoder: sum2_bar low gives 2, otherwise sum1_bar low gives 1,
/// otherwise 0. Priority makes the function total.
Digit encode_sum(bool sum1_bar, bool sum2_bar);

}  // namespace mvl
