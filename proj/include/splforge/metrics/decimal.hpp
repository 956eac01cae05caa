/*
 * Copyright (c) 2026 splforge contributors.
 *
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPLFORGE_METRICS_DECIMAL_HPP
#define SPLFORGE_METRICS_DECIMAL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace splforge::metrics {

/// Exact decimal with a fixed number of fractional digits, stored scaled.
template <int Digits>
struct Fixed {
  static_assert(Digits >= 0 && Digits <= 6);
  static constexpr std::int64_t kScale = [] {
    std::int64_t s = 1;
    for (int i = 0; i < Digits; ++i) {
      s *= 10;
    }
    return s;
  }();

  std::int64_t raw = 0;

  static constexpr Fixed fromRaw(std::int64_t r) { return Fixed{r}; }

  /// numerator / denominator (denominator > 0) rounded half away from zero.
  static constexpr Fixed ratio(std::int64_t numerator, std::int64_t denominator) {
    const std::int64_t scaled = numerator * kScale;
    const std::int64_t magnitude =
        (2 * (scaled < 0 ? -scaled : scaled) + denominator) / (2 * denominator);
    return Fixed{scaled < 0 ? -magnitude : magnitude};
  }

  /// Parses "12", "12.3", "-0.5"; at most Digits fractional digits.
  static std::optional<Fixed> parse(std::string_view text) {
    bool negative = false;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
      negative = text[0] == '-';
      text.remove_prefix(1);
    }
    if (text.empty()) {
      return std::nullopt;
    }
    std::int64_t whole = 0;
    std::size_t i = 0;
    for (; i < text.size() && text[i] != '.'; ++i) {
      if (text[i] < '0' || text[i] > '9' || i >= 15) {
        return std::nullopt;
      }
      whole = whole * 10 + (text[i] - '0');
    }
    if (i == 0) {
      return std::nullopt;
    }
    std::int64_t frac = 0;
    int digits = 0;
    if (i < text.size()) {
      ++i;
      if (i == text.size()) {
        return std::nullopt;
      }
      for (; i < text.size(); ++i, ++digits) {
        if (text[i] < '0' || text[i] > '9' || digits >= Digits) {
          return std::nullopt;
        }
        frac = frac * 10 + (text[i] - '0');
      }
    }
    for (; digits < Digits; ++digits) {
      frac *= 10;
    }
    const std::int64_t raw = whole * kScale + frac;
    return Fixed{negative ? -raw : raw};
  }

  /// Always prints exactly Digits fractional digits.
  std::string str() const {
    const std::int64_t magnitude = raw < 0 ? -raw : raw;
    std::string out = (raw < 0 ? "-" : "") + std::to_string(magnitude / kScale);
    if constexpr (Digits > 0) {
      std::string frac = std::to_string(magnitude % kScale);
      out += "." + std::string(std::size_t(Digits) - frac.size(), '0') + frac;
    }
    return out;
  }

  constexpr Fixed operator+(Fixed o) const { return Fixed{raw + o.raw}; }
  constexpr Fixed operator-(Fixed o) const { return Fixed{raw - o.raw}; }
  constexpr auto operator<=>(const Fixed&) const = default;
};

using Tenths = Fixed<1>;
using Hundredths = Fixed<2>;

}  // namespace splforge::metrics

#endif  // SPLFORGE_METRICS_DECIMAL_HPP
