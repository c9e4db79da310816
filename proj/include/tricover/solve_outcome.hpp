#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

// Search limits. Zero means unlimited. Node limits are deterministic;
// wall-clock limits are not.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;

  static Budget unlimited() { return {}; }
  static Budget nodes(std::uint64_t n) { return {n, 0.0}; }
};

enum class Problem { tau, alpha1, alpha, phi };
enum class Status { optimal, bounded };

inline std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::tau: return "TAU";
    case Problem::alpha1: return "ALPHA1";
    case Problem::alpha: return "ALPHA";
    case Problem::phi: return "PHI";
  }
  return "?";
}

inline std::string_view to_string(Status s) { return s == Status::optimal ? "OPTIMAL" : "BOUNDED"; }

inline Problem parse_problem(std::string_view s) {
  if (s == "tau" || s == "TAU") return Problem::tau;
  if (s == "alpha1" || s == "ALPHA1") return Problem::alpha1;
  if (s == "alpha" || s == "ALPHA") return Problem::alpha;
  if (s == "phi" || s == "PHI") return Problem::phi;
  throw ParameterError("unknown problem '" + std::string(s) + "'");
}

struct SolveStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

// Certified value interval for one of the four optimization problems.
//
// The certificate is an edge set (canonical indices) for TAU/ALPHA1 and a
// vertex set for ALPHA/PHI, stored sorted in `certificate`. It attains
// `lower` for maximization problems and `upper` for TAU. Integer problems
// keep integral values in the doubles; PHI with real k is exact to 1e-9.
struct SolveOutcome {
  Problem problem = Problem::tau;
  double lower = 0.0;
  double upper = 0.0;
  Status status = Status::optimal;
  std::vector<std::uint64_t> certificate;
  SolveStats stats;
  double k = 0.0;  // PHI only

  bool optimal() const noexcept { return status == Status::optimal; }
  double value() const noexcept { return problem == Problem::tau ? upper : lower; }
};

// Tracks node count and elapsed time against a Budget. Exhaustion is sticky.
class BudgetClock {
 public:
  explicit BudgetClock(const Budget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  // Counts one node; returns false once the budget is spent.
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_seconds > 0.0 && (nodes_ & 255) == 0 && elapsed() > budget_.max_seconds) exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const noexcept { return exhausted_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  SolveStats stats() const { return {nodes_, elapsed()}; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace tricover
