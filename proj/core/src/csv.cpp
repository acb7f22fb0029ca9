#include "fullow/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace fullow {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int_field(std::string_view text) {
  Int v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::runtime_error("bad integer field: '" + std::string(text) + "'");
  return v;
}

bool getline_trimmed(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

void expect_preamble(std::istream& in, std::string_view header) {
  std::string line;
  if (!getline_trimmed(in, line) || line != kSchemaLine)
    throw std::runtime_error("schema mismatch: expected '" + std::string(kSchemaLine) + "'");
  if (!getline_trimmed(in, line) || line != header)
    throw std::runtime_error("schema mismatch: expected header '" + std::string(header) + "'");
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return {buf.data(), ptr};
}

double parse_double_field(std::string_view text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::runtime_error("bad float field: '" + std::string(text) + "'");
  return v;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kSchemaLine << '\n' << kResultsHeader << '\n';
  for (const auto& r : rows) {
    out << r.problem << ',' << r.n << ',' << r.variant << ',' << format_double(r.eps_f) << ','
        << r.solver << ',' << r.seed << ',' << r.budget << ',' << r.evals_used << ','
        << format_double(r.best_f) << ',' << format_double(r.f0) << '\n';
  }
}

std::vector<ResultRow> read_results_csv(std::istream& in) {
  expect_preamble(in, kResultsHeader);
  std::vector<ResultRow> rows;
  std::string line;
  while (getline_trimmed(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 10) throw std::runtime_error("expected 10 fields in row: " + line);
    ResultRow r;
    r.problem = std::string(f[0]);
    r.n = parse_int_field<int>(f[1]);
    r.variant = std::string(f[2]);
    r.eps_f = parse_double_field(f[3]);
    r.solver = std::string(f[4]);
    r.seed = parse_int_field<std::uint64_t>(f[5]);
    r.budget = parse_int_field<std::int64_t>(f[6]);
    r.evals_used = parse_int_field<std::int64_t>(f[7]);
    r.best_f = parse_double_field(f[8]);
    r.f0 = parse_double_field(f[9]);
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_history_csv(std::ostream& out, const RunHistory& history) {
  out << kSchemaLine << '\n' << kHistoryHeader << '\n';
  for (const auto& e : history.entries()) out << e.eval_index << ',' << format_double(e.best_f) << '\n';
}

RunHistory read_history_csv(std::istream& in) {
  expect_preamble(in, kHistoryHeader);
  RunHistory h;
  std::string line;
  bool first = true;
  while (getline_trimmed(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 2) throw std::runtime_error("expected 2 fields in history row: " + line);
    HistoryEntry e{parse_int_field<std::int64_t>(f[0]), parse_double_field(f[1])};
    if (first) {
      h.set_f0(e.best_f);
      first = false;
    }
    try {
      h.append(e);
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error(err.what());
    }
  }
  return h;
}

std::string history_filename(const ResultRow& row) {
  return row.problem + "__" + row.variant + "__" + format_double(row.eps_f) + "__" + row.solver + "__" +
         std::to_string(row.seed) + ".csv";
}

}  // namespace fullow
