// Copyright 2026 The AHP Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <charconv>
#include <compare>
#include <string>
#include <string_view>

#include "ahp/error.hpp"

namespace ahp {

/// One value of the 1..9 judgment scale or its reciprocal, held as an exact
/// rational (either the numerator or the denominator is 1).
class Judgment {
 public:
  constexpr Judgment() = default;

  /// Throws OffScaleJudgment unless num/den is k/1 or 1/k with k in 1..9.
  constexpr Judgment(int num, int den) : num_(num), den_(den) {
    const bool integral = den == 1 && num >= 1 && num <= 9;
    const bool reciprocal = num == 1 && den >= 1 && den <= 9;
    if (!integral && !reciprocal) {
      throw Error(Errc::OffScaleJudgment,
                  std::to_string(num) + "/" + std::to_string(den));
    }
  }

  static constexpr Judgment integer(int k) { return Judgment(k, 1); }

  /// Accepts "k" or "1/k" with k in 1..9.
  static Judgment parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw Error(Errc::OffScaleJudgment, "'" + std::string(text) + "'");
      }
      return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Judgment(parse_int(text), 1);
    const int num = parse_int(text.substr(0, slash));
    const int den = parse_int(text.substr(slash + 1));
    if (num != 1 || den == 1) {
      throw Error(Errc::OffScaleJudgment, "'" + std::string(text) + "'");
    }
    return Judgment(num, den);
  }

  constexpr int numerator() const noexcept { return num_; }
  constexpr int denominator() const noexcept { return den_; }
  constexpr double value() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  constexpr Judgment reciprocal() const noexcept {
    Judgment r;
    r.num_ = den_;
    r.den_ = num_;
    return r;
  }

  std::string to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return "1/" + std::to_string(den_);
  }

  friend constexpr bool operator==(Judgment a, Judgment b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr auto operator<=>(Judgment a, Judgment b) noexcept {
    // cross-multiplication is exact for these small integers
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  int num_ = 1;
  int den_ = 1;
};

/// The 17 admissible judgment values in ascending order, 1/9 .. 9.
inline constexpr std::array<Judgment, 17> kJudgmentScale = [] {
  std::array<Judgment, 17> out{};
  std::size_t k = 0;
  for (int d = 9; d >= 2; --d) out[k++] = Judgment(1, d);
  for (int n = 1; n <= 9; ++n) out[k++] = Judgment(n, 1);
  return out;
}();

}  // namespace ahp
