#pragma once

#include "fullow/types.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace fullow {

struct HistoryEntry {
  std::int64_t eval_index = 0;
  double best_f = 0.0;

  friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

/// Best-f-so-far trace indexed by evaluation count. Only improving
/// evaluations are stored, which is enough to answer the convergence test
/// at any budget cutoff.
class RunHistory {
 public:
  RunHistory() = default;

  /// Records evaluation number `eval_index` with value `f` at `x`.
  /// The first call fixes f0. Non-improving values are dropped.
  void observe(std::int64_t eval_index, double f, const Vector& x);

  /// Appends a pre-built entry (used when loading from disk). Enforces the
  /// monotonicity invariants and throws std::invalid_argument on violation.
  void append(HistoryEntry entry);
  void set_f0(double f0) { f0_ = f0; }

  [[nodiscard]] double f0() const noexcept { return f0_; }
  [[nodiscard]] const std::vector<HistoryEntry>& entries() const noexcept { return entries_; }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] double best_f() const noexcept {
    return entries_.empty() ? std::numeric_limits<double>::infinity() : entries_.back().best_f;
  }
  /// Best f among evaluations with index <= cutoff (+inf if none).
  [[nodiscard]] double best_f_within(std::int64_t cutoff) const noexcept;
  [[nodiscard]] const Point& best_point() const noexcept { return best_x_; }

  friend bool operator==(const RunHistory& a, const RunHistory& b) {
    return a.entries_ == b.entries_ && a.f0_ == b.f0_ && a.best_x_.size() == b.best_x_.size() &&
           (a.best_x_.size() == 0 || a.best_x_ == b.best_x_);
  }

 private:
  std::vector<HistoryEntry> entries_;
  double f0_ = std::numeric_limits<double>::quiet_NaN();
  Point best_x_;
};

/// One Full-Eval or Low-Eval iteration, with everything needed to re-check
/// its acceptance test after the fact.
struct IterationRecord {
  IterationType type = IterationType::FullEval;
  bool success = false;
  bool aborted = false;  // budget ran out inside the iteration
  std::int64_t evals = 0;

  double f_before = 0.0;
  double f_after = 0.0;
  double alpha = 0.0;       // direct-search stepsize at entry
  double alpha_next = 0.0;  // after the iteration

  // Full-Eval
  double beta = 0.0;        // last stepsize tested (beta_k on success)
  int nb = 0;               // backtracks
  double g_dot_p = 0.0;
  double rho = 0.0;         // rho(alpha) at entry
  double grad_norm = 0.0;
  bool switch_active = false;
  bool steepest_fallback = false;
  bool bfgs_applied = false;

  // Low-Eval
  int nu = 0;               // consecutive failures after this iteration
  int nb_last = 0;
  int direction_sign = 0;   // +1 / -1 on success

  friend bool operator==(const IterationRecord&, const IterationRecord&) = default;
};

struct IterationCounts {
  std::int64_t successful_full = 0;    // I_SF
  std::int64_t unsuccessful_full = 0;  // I_UF
  std::int64_t successful_low = 0;     // I_SL
  std::int64_t unsuccessful_low = 0;   // I_UL

  [[nodiscard]] std::int64_t total() const noexcept {
    return successful_full + unsuccessful_full + successful_low + unsuccessful_low;
  }
  [[nodiscard]] std::int64_t low() const noexcept { return successful_low + unsuccessful_low; }
};

struct IterationLog {
  std::int64_t initial_evals = 0;  // f(x0)
  std::vector<IterationRecord> records;

  [[nodiscard]] std::int64_t total_evals() const noexcept;
  /// Aborted iterations are not counted.
  [[nodiscard]] IterationCounts counts() const noexcept;

  friend bool operator==(const IterationLog&, const IterationLog&) = default;
};

}  // namespace fullow
