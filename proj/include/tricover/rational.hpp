#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "tricover/errors.hpp"

namespace tricover {

// Positive-denominator fraction; parsed from "3/2", "1.5" or "2" without
// going through floating point.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational parse(std::string_view text) {
    auto digits = [&](std::string_view s) {
      if (s.empty()) throw ParameterError("bad number '" + std::string(text) + "'");
      std::int64_t v = 0;
      for (char ch : s) {
        if (ch < '0' || ch > '9' || v > 100000000000000LL)
          throw ParameterError("bad number '" + std::string(text) + "'");
        v = v * 10 + (ch - '0');
      }
      return v;
    };
    bool negative = false;
    std::string_view s = text;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    Rational r;
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
      r = {digits(s.substr(0, slash)), digits(s.substr(slash + 1))};
      if (r.den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
    } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
      const std::string_view frac = s.substr(dot + 1);
      if (frac.size() > 12) throw ParameterError("too many decimals in '" + std::string(text) + "'");
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::string_view whole = s.substr(0, dot);
      r = {(whole.empty() ? 0 : digits(whole)) * scale + (frac.empty() ? 0 : digits(frac)), scale};
    } else {
      r = {digits(s), 1};
    }
    if (negative) r.num = -r.num;
    const std::int64_t g = std::gcd(r.num, r.den);
    if (g > 1) {
      r.num /= g;
      r.den /= g;
    }
    return r;
  }

  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

}  // namespace tricover
