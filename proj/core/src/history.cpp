#include "fullow/history.hpp"

#include <cmath>
#include <stdexcept>

namespace fullow {

void RunHistory::observe(std::int64_t eval_index, double f, const Vector& x) {
  if (entries_.empty() && std::isnan(f0_)) f0_ = f;
  if (!std::isfinite(f)) return;
  if (!entries_.empty() && !(f < entries_.back().best_f)) return;
  entries_.push_back({eval_index, f});
  best_x_ = x;
}

void RunHistory::append(HistoryEntry entry) {
  if (!entries_.empty()) {
    if (entry.eval_index <= entries_.back().eval_index)
      throw std::invalid_argument("history eval_index must be strictly increasing");
    if (entry.best_f > entries_.back().best_f)
      throw std::invalid_argument("history best_f must be non-increasing");
  }
  if (entry.eval_index < 1) throw std::invalid_argument("history eval_index must be positive");
  entries_.push_back(entry);
}

double RunHistory::best_f_within(std::int64_t cutoff) const noexcept {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& e : entries_) {
    if (e.eval_index > cutoff) break;
    best = e.best_f;
  }
  return best;
}

std::int64_t IterationLog::total_evals() const noexcept {
  std::int64_t total = initial_evals;
  for (const auto& r : records) total += r.evals;
  return total;
}

IterationCounts IterationLog::counts() const noexcept {
  IterationCounts c;
  for (const auto& r : records) {
    if (r.aborted) continue;
    if (r.type == IterationType::FullEval) {
      (r.success ? c.successful_full : c.unsuccessful_full)++;
    } else {
      (r.success ? c.successful_low : c.unsuccessful_low)++;
    }
  }
  return c;
}

}  // namespace fullow
