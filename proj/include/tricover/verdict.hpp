#pragma once

#include <string_view>

namespace tricover {

enum class Verdict { pass, fail, indeterminate };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

// Three-valued comparison of an interval [lo, hi] against `value <= limit`.
constexpr Verdict interval_at_most(double lo, double hi, double limit, double tol = 1e-9) {
  if (hi <= limit + tol) return Verdict::pass;
  if (lo > limit + tol) return Verdict::fail;
  return Verdict::indeterminate;
}

// Three-valued comparison of an interval [lo, hi] against `value >= limit`.
constexpr Verdict interval_at_least(double lo, double hi, double limit, double tol = 1e-9) {
  if (lo >= limit - tol) return Verdict::pass;
  if (hi < limit - tol) return Verdict::fail;
  return Verdict::indeterminate;
}

}  // namespace tricover
