#pragma once

#include "fullow/history.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fullow {

inline constexpr std::string_view kSchemaLine = "# schema=1";
inline constexpr std::string_view kResultsHeader =
    "problem,n,variant,eps_f,solver,seed,budget,evals_used,best_f,f0";
inline constexpr std::string_view kHistoryHeader = "eval_index,best_f";

struct ResultRow {
  std::string problem;
  int n = 0;
  std::string variant;
  double eps_f = 0.0;
  std::string solver;
  std::uint64_t seed = 0;
  std::int64_t budget = 0;
  std::int64_t evals_used = 0;
  double best_f = 0.0;
  double f0 = 0.0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Shortest decimal that parses back to the same double ("inf", "nan" for
/// the special values).
std::string format_double(double v);
double parse_double_field(std::string_view text);

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
/// Throws std::runtime_error on a missing schema line, a different header
/// or a malformed row.
std::vector<ResultRow> read_results_csv(std::istream& in);

void write_history_csv(std::ostream& out, const RunHistory& history);
RunHistory read_history_csv(std::istream& in);

/// "<problem>__<variant>__<eps_f>__<solver>__<seed>.csv"
std::string history_filename(const ResultRow& row);

}  // namespace fullow
