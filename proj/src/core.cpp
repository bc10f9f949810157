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

#include "mvl/core.hpp"

#include <fmt/format.h>

#include <cmath>
#include <stdexcept>

namespace mvl {

Digit::Digit(int value, int radix) : value_(value), radix_(radix) {
  if (radix < 2) {
    throw std::domain_error(fmt::format("radix {} is below 2", radix));
  }
  if (value < 0 || value >= radix) {
    throw std::domain_error(
        fmt::format("digit {} out of range for radix {}", value, radix));
  }
}

Word::Word(std::vector<int> digits, int radix)
    : digits_(std::move(digits)), radix_(radix) {
  if (radix < 2) {
    throw std::domain_error(fmt::format("radix {} is below 2", radix));
  }
  for (int d : digits_) {
    if (d < 0 || d >= radix) {
      throw std::domain_error(
          fmt::format("digit {} out of range for radix {}", d, radix));
    }
  }
}

namespace {

void check_operand(int radix, const Digit& d, const char* name) {
  if (d.radix() != radix) {
    throw std::domain_error(fmt::format(
        "operand {} has radix {}, expected {}", name, d.radix(), radix));
  }
}

DigitPair split(int radix, int total) {
  return {Digit(total % radix, radix), Digit(total / radix, radix)};
}

}  // namespace

DigitPair ha_oracle(int radix, Digit a, Digit b) {
  check_operand(radix, a, "a");
  check_operand(radix, b, "b");
  return split(radix, a.value() + b.value());
}

DigitPair fa_oracle(int radix, Digit a, Digit b, Digit cin) {
  check_operand(radix, a, "a");
  check_operand(radix, b, "b");
  if (cin.value() > 1) {
    throw std::domain_error(
        fmt::format("carry-in {} is not binary-valued", cin.value()));
  }
  return split(radix, a.value() + b.value() + cin.value());
}

DigitPair mul1_oracle(int radix, Digit a, Digit b) {
  if (radix > 3) {
    throw std::invalid_argument(fmt::format(
        "one-digit multiplier carry is not binary-valued for radix {}",
        radix));
  }
  check_operand(radix, a, "a");
  check_operand(radix, b, "b");
  return split(radix, a.value() * b.value());
}

BigUint ipow(int radix, int exponent) {
  BigUint result = 1;
  for (int i = 0; i < exponent; ++i) result *= radix;
  return result;
}

Word int_to_word(const BigUint& value, int radix, int width) {
  if (radix < 2) {
    throw std::domain_error(fmt::format("radix {} is below 2", radix));
  }
  if (value < 0 || width < 0 || value >= ipow(radix, width)) {
    throw std::range_error(fmt::format("value {} does not fit in {} digits of radix {}",
                                       value.str(), width, radix));
  }
  std::vector<int> digits(static_cast<std::size_t>(width));
  BigUint rest = value;
  for (auto& d : digits) {
    d = static_cast<int>(rest % radix);
    rest /= radix;
  }
  return Word(std::move(digits), radix);
}

BigUint word_to_int(const Word& word) {
  BigUint value = 0;
  auto digits = word.digits();
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    value = value * word.radix() + *it;
  }
  return value;
}

int digits_for_bits(int bits, WirePolicy policy) {
  if (bits < 1) {
    throw std::domain_error(fmt::format("bit count {} is below 1", bits));
  }
  if (policy == WirePolicy::published_table) {
    switch (bits) {
      case 8: return 5;
      case 16: return 11;
      case 32: return 21;
      case 64: return 41;
      default: break;
    }
  }
  const BigUint range = ipow(2, bits);
  int trits = 0;
  BigUint reach = 1;
  while (reach < range) {
    reach *= 3;
    ++trits;
  }
  return trits;
}

double information_ratio(int r_hi, int r_lo) {
  if (r_hi < 2 || r_lo < 2) {
    throw std::domain_error("information ratio needs radices >= 2");
  }
  return std::log(static_cast<double>(r_hi)) / std::log(static_cast<double>(r_lo));
}

Rails decode_trit(Digit a) {
  if (a.radix() != 3) {
    throw std::domain_error(
        fmt::format("decoder expects a trit, got radix {}", a.radix()));
  }
  const bool a0 = a.value() >= 1;
  const bool a1 = a.value() >= 2;
  return {!a1, a1, !a0, a0};
}

Digit encode_sum(bool sum1_bar, bool sum2_bar) {
  if (!sum2_bar) return Digit(2, 3);
  if (!sum1_bar) return Digit(1, 3);
  return Digit(0, 3);
}

}  // namespace mvl
